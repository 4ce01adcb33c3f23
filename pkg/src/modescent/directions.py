"""Descent-direction subproblems shared by all solvers.

Two convex programs are solved here, both over a slate of m gradient
(estimates) g_1..g_m in R^n:

* the central direction: the minimum-norm V with g_i . V <= -||g_i|| for
  every i. Normalizing each constraint by ||g_i|| shows the solution only
  depends on the gradient directions, which makes the output invariant under
  positive per-objective rescaling. The program is infeasible exactly when 0
  lies in the convex hull of the normalized gradients (a criticality
  certificate); otherwise ||V|| = 1/delta where delta is the distance from
  the origin to that hull, so ||V|| >= 1 always and blows up near critical
  points.

* the steepest direction: argmin_V max_i g_i . V + 0.5 ||V||^2, solved via
  its dual (minimize ||sum_i lambda_i g_i||^2 over the unit simplex). Its
  optimal value -0.5 ||V_s||^2 is a signed criticality measure.

The central dual is a nonnegativity-constrained quadratic in m variables; we
run a finite Wolfe-style minimum-norm-point iteration over the hull of the
normalized gradients, which is that dual reparametrized to the simplex. The
steepest dual uses projected gradient steps with a Frank-Wolfe fallback.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

Array = np.ndarray

DIRECTION = "direction"
INFEASIBLE = "infeasible"
NULL_GRADIENT = "null-gradient"

DEFAULT_TOL = 1e-9
DEFAULT_NORM_CAP = 1e6


class DirectionSolverError(RuntimeError):
    """Raised when an iteration cap trips; carries the best KKT residual."""

    def __init__(self, message: str, best_residual: float):
        super().__init__(f"{message} (best KKT residual {best_residual:.3e})")
        self.best_residual = best_residual


@dataclass
class GradientSlate:
    """Per-objective gradient estimates feeding the central QP.

    ``vectors`` has shape (m, n); ``refreshed[i]`` flips to True once entry i
    has been overwritten by an actual gradient evaluation, which separates
    warm entries from the arbitrary initial fill.
    """

    vectors: Array
    refreshed: Array

    @classmethod
    def random_unit(cls, m: int, n: int, seed: int) -> "GradientSlate":
        """Arbitrary non-null initialization: m seeded unit vectors."""
        rng = np.random.default_rng(seed)
        v = rng.normal(size=(m, n))
        v /= np.linalg.norm(v, axis=1, keepdims=True)
        return cls(v, np.zeros(m, dtype=bool))

    @classmethod
    def from_gradients(cls, gradients: Array) -> "GradientSlate":
        g = np.array(gradients, dtype=float)
        return cls(g, np.ones(g.shape[0], dtype=bool))

    def update(self, i: int, g: Array) -> None:
        self.vectors[i] = g
        self.refreshed[i] = True

    @property
    def norms(self) -> Array:
        return np.linalg.norm(self.vectors, axis=1)

    @property
    def all_nonnull(self) -> bool:
        return bool(np.all(self.norms > 0.0))


@dataclass
class DirectionOutcome:
    """Result of a central-direction solve.

    kind is one of "direction", "infeasible", "null-gradient". For
    "direction", ``vector`` solves the QP, ``active_set``/``multipliers``
    describe the KKT certificate (V = -sum multipliers[i] * slate[i] over the
    active set) and ``norm_capped`` flags feasible solves whose norm exceeds
    the cap. For "infeasible", ``certificate`` holds simplex weights mu with
    ||sum mu_i g_i/||g_i|| || <= tol, i.e. zero in the hull of normalized
    gradients.
    """

    kind: str
    vector: Optional[Array] = None
    norm: float = float("inf")
    active_set: tuple = ()
    multipliers: Optional[Array] = None
    norm_capped: bool = False
    certificate: Optional[Array] = None
    kkt_residual: float = float("nan")


def _affine_minimizer(gram_s: Array) -> Array:
    """Weights of the min-norm point of the affine hull of a corral."""
    k = gram_s.shape[0]
    kkt = np.zeros((k + 1, k + 1))
    kkt[:k, :k] = gram_s
    kkt[:k, k] = 1.0
    kkt[k, :k] = 1.0
    rhs = np.zeros(k + 1)
    rhs[k] = 1.0
    try:
        sol = np.linalg.solve(kkt, rhs)
    except np.linalg.LinAlgError:
        sol, *_ = np.linalg.lstsq(kkt, rhs, rcond=None)
    beta = sol[:k]
    total = beta.sum()
    if abs(total - 1.0) > 1e-8 and abs(total) > 1e-300:
        beta = beta / total
    return beta


def _min_norm_point(
    points: Array, opt_tol: float = 1e-12, max_major: Optional[int] = None
) -> Tuple[Array, Array, List[int]]:
    """Minimum-norm point of conv{rows of points} (Wolfe's corral iteration).

    Finite active-set method: alternate between adding the vertex most
    violating the supporting-hyperplane test and reprojecting onto the
    affine hull of the current corral. Vertex ties break to the lowest
    index, so degenerate (duplicated) inputs stay deterministic.

    Returns (x, weights, support) with x = weights @ points, weights on the
    simplex, support the indices with positive weight.
    """
    pts = np.asarray(points, dtype=float)
    m = pts.shape[0]
    gram = pts @ pts.T
    if max_major is None:
        max_major = 24 * m + 120
    support: List[int] = [int(np.argmin(np.diag(gram)))]
    w = np.array([1.0])
    converged = False
    for _ in range(max_major):
        sub = gram[np.ix_(support, support)]
        d = gram[:, support] @ w
        xx = float(w @ sub @ w)
        j = int(np.argmin(d))
        if d[j] >= xx - opt_tol or j in support:
            converged = True
            break
        support.append(j)
        w = np.append(w, 0.0)
        for _ in range(2 * m + 8):
            sub = gram[np.ix_(support, support)]
            beta = _affine_minimizer(sub)
            if np.all(beta >= -1e-14):
                w = np.clip(beta, 0.0, None)
                break
            shrink = beta < -1e-14
            with np.errstate(divide="ignore", invalid="ignore"):
                ratios = np.where(shrink, w / (w - beta), np.inf)
            theta = float(ratios.min())
            w = w + theta * (beta - w)
            w[w < 1e-13] = 0.0
            keep = w > 0.0
            if not np.any(keep):
                keep[int(np.argmax(beta))] = True
                w[keep] = 1.0
            support = [s for s, k in zip(support, keep) if k]
            w = w[keep]
        total = w.sum()
        if total > 0:
            w = w / total
    if not converged:
        x = pts[support].T @ w
        raise DirectionSolverError(
            "minimum-norm-point iteration cap exceeded",
            float(np.linalg.norm(x)),
        )
    full = np.zeros(m)
    for s, wi in zip(support, w):
        full[s] += wi
    x = pts[support].T @ w
    order = np.argsort(support)
    support = [support[k] for k in order]
    return x, full, support


def _slate_vectors(slate: Union[GradientSlate, Array, Sequence]) -> Array:
    if isinstance(slate, GradientSlate):
        vectors = slate.vectors
    else:
        vectors = slate
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    if vectors.ndim != 2:
        raise ValueError("slate must be a 2-D array of gradients")
    return vectors


def central_direction(
    slate: Union[GradientSlate, Array, Sequence],
    tol: float = DEFAULT_TOL,
    norm_cap: float = DEFAULT_NORM_CAP,
) -> DirectionOutcome:
    """Minimum-norm V with g_i . V <= -||g_i|| for every slate entry g_i.

    Returns a "direction" outcome with KKT data, or an "infeasible" outcome
    whose certificate is a convex combination of the normalized gradients
    with norm <= tol (zero in their hull: the point is critical). Feasible
    solves whose norm exceeds ``norm_cap`` keep kind "direction" but set
    ``norm_capped`` (nearly critical; treat downstream like a blow-up).

    Raises ValueError on a null slate entry or nonpositive tol.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    vectors = _slate_vectors(slate)
    norms = np.linalg.norm(vectors, axis=1)
    if np.any(norms == 0.0):
        raise ValueError("null slate entry; criticality must be handled upstream")
    unit = vectors / norms[:, None]
    x, mu, support = _min_norm_point(unit)
    delta = float(np.linalg.norm(x))
    if delta <= tol:
        return DirectionOutcome(
            kind=INFEASIBLE,
            vector=None,
            norm=float("inf"),
            certificate=mu,
            kkt_residual=delta,
        )
    v = -x / (delta * delta)
    vnorm = float(np.linalg.norm(v))
    active = [i for i in support if mu[i] > 0.0]
    lambdas = np.array([mu[i] / (delta * delta * norms[i]) for i in active])
    slack = vectors @ v + norms
    primal = float(max(slack.max(), 0.0))
    stationarity = float(
        np.linalg.norm(v + vectors[active].T @ lambdas) if active else np.inf
    )
    complementarity = float(np.abs(lambdas * slack[active]).max()) if active else 0.0
    residual = max(primal, stationarity, complementarity)
    return DirectionOutcome(
        kind=DIRECTION,
        vector=v,
        norm=vnorm,
        active_set=tuple(active),
        multipliers=lambdas,
        norm_capped=bool(vnorm > norm_cap),
        certificate=None,
        kkt_residual=residual,
    )


def project_to_simplex(v: Array) -> Array:
    """Euclidean projection onto the probability simplex (sort-based)."""
    v = np.asarray(v, dtype=float)
    n = v.size
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, n + 1)
    cond = u - css / ind > 0
    rho = int(np.nonzero(cond)[0][-1])
    theta = css[rho] / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def steepest_direction(
    gradients: Union[Array, Sequence],
    max_iter: int = 10000,
    gap_tol: float = 1e-12,
) -> Tuple[Array, float]:
    """Solve argmin_V max_i g_i . V + 0.5 ||V||^2.

    Returns (V_s, value) with value = -0.5 ||V_s||^2 <= 0, zero exactly at
    critical points. Null gradients are permitted and give V_s = 0.

    The dual (min ||sum lambda_i g_i||^2 over the simplex) is solved with
    projected-gradient steps of size 1/L; whenever such a step fails to
    decrease the objective the iteration falls back to a Frank-Wolfe step
    with exact line search. The combined budget is ``max_iter`` iterations;
    the best iterate so far is returned if the budget runs out.
    """
    grads = np.atleast_2d(np.asarray(gradients, dtype=float))
    m, n = grads.shape
    norms = np.linalg.norm(grads, axis=1)
    if np.any(norms == 0.0):
        return np.zeros(n), 0.0
    if m == 1:
        v = -grads[0]
        return v, -0.5 * float(v @ v)
    gram = grads @ grads.T
    lip = float(np.linalg.eigvalsh(gram)[-1])
    lip = max(lip, np.finfo(float).tiny)
    lam = np.full(m, 1.0 / m)
    fw_mode = False

    def quad(l: Array) -> float:
        return 0.5 * float(l @ gram @ l)

    current = quad(lam)
    for _ in range(max_iter):
        g = gram @ lam
        lgl = float(lam @ g)
        gap = lgl - float(g.min())
        if gap <= gap_tol * max(1.0, lgl):
            break
        if not fw_mode:
            cand = project_to_simplex(lam - g / lip)
            value = quad(cand)
            if value < current:
                lam, current = cand, value
                continue
            fw_mode = True
        j = int(np.argmin(g))
        dgd = gram[j, j] - 2.0 * g[j] + lgl
        if dgd <= 0.0:
            step = 1.0
        else:
            step = min(max(gap / dgd, 0.0), 1.0)
        lam = lam + step * (np.eye(m)[j] - lam)
        current = quad(lam)
    v = -(grads.T @ lam)
    return v, -0.5 * float(v @ v)


def descent_margin(gradients: Union[Array, Sequence], u: Array) -> float:
    """Distance from unit vector u to the non-descent boundary.

    Equals min_i |g_i . u| / ||g_i|| for u inside the closed descent cone,
    computed as -max_i g_i . u / ||g_i||; negative when u is not a common
    descent direction. The normalized central direction maximizes this
    margin over the cone.
    """
    grads = np.atleast_2d(np.asarray(gradients, dtype=float))
    norms = np.linalg.norm(grads, axis=1)
    if np.any(norms == 0.0):
        raise ValueError("null gradient has no descent cone")
    unit = grads / norms[:, None]
    return -float((unit @ np.asarray(u, dtype=float)).max())


def is_scale_invariant_check(
    slate: Union[GradientSlate, Array, Sequence],
    kappas: Sequence[float],
    tol: float = 1e-9,
) -> bool:
    """True when per-objective rescaling by kappas leaves the output unchanged.

    Helper for invariance tests: compares the central direction of the slate
    with the central direction of the row-scaled slate at tolerance ``tol``
    (verdicts must match; vectors must agree to tol relative to their size).
    """
    vectors = _slate_vectors(slate)
    kappas = np.asarray(kappas, dtype=float)
    if kappas.shape != (vectors.shape[0],):
        raise ValueError("one positive factor per slate entry")
    if np.any(kappas <= 0.0):
        raise ValueError("scale factors must be positive")
    base = central_direction(vectors)
    scaled = central_direction(vectors * kappas[:, None])
    if base.kind != scaled.kind:
        return False
    if base.kind != DIRECTION:
        return True
    diff = float(np.linalg.norm(base.vector - scaled.vector))
    return diff <= tol * max(1.0, base.norm)
