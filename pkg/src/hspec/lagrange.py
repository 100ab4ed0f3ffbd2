"""The degree-m polynomial L(H, x) and its maximization over the simplex.

    L(H, x) = sum_{e in E} x^e_m / alpha(|e|, m)

where ``x^e_m`` sums ``x_i1 ... x_im`` over index tuples covering ``e``. For a
2-graph this is ``sum_{ij in E} x_i x_j``, the Motzkin-Straus polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clique import clique_number, maximal_cliques
from .comb import alpha, binom
from .errors import DimensionMismatch, EdgeLargerThanRank, InputError, NoEdges, NotConverged
from .hypercore import Hypergraph
from .tensor import EdgeSystem

ARMIJO = 1e-4
SHRINK = 0.5
MAX_ASCENT_ITERATIONS = 10_000
_MIN_STEP = 1e-20
# near a maximum L changes by ~||step||^2, below float resolution long before
# the projected gradient reaches 1e-10; allow that much rounding in Armijo
_ROUNDING = 16 * np.finfo(float).eps


def simplex_vector(weights, atol: float = 1e-12) -> np.ndarray:
    """Validate ``weights`` as a point of the standard simplex."""
    x = np.asarray(weights, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise InputError("a simplex vector must be a nonempty 1-D array")
    if np.any(x < 0) or abs(float(np.sum(x)) - 1.0) > atol:
        raise InputError("weights must be nonnegative and sum to 1")
    return x


@dataclass
class LagrangianResult:
    value: float
    maximizer: np.ndarray
    starts_used: int
    kkt_residual: float
    converged_starts: int = 0
    best_start: int = 0


class LagrangianPolynomial:
    """L(H, .) with its analytic gradient, reusing the tensor's edge blocks."""

    def __init__(self, H: Hypergraph):
        if not H.edges:
            raise NoEdges("L(H, x) needs at least one edge")
        self.H = H
        self.m = H.rank
        self._edges = EdgeSystem(H, self.m)
        sizes = {len(e) for e in H.edges}
        self._value_w = {s: 1.0 / alpha(s, self.m) for s in sizes}
        self._grad_w = {s: self.m / alpha(s, self.m) for s in sizes}

    def __call__(self, x) -> float:
        return self._edges.form(x, self._value_w)

    def gradient(self, x) -> np.ndarray:
        return self._edges.partial_vector(x, self._grad_w)


def edge_polynomial(e, m: int, x) -> float:
    """``x^e_m`` by inclusion-exclusion over subsets of ``e``."""
    e = tuple(e)
    if len(e) > m:
        raise EdgeLargerThanRank(f"edge of size {len(e)} exceeds order {m}")
    x = np.asarray(x, dtype=float)
    s = len(e)
    vals = x[np.asarray(e) - 1]
    total = 0.0
    for mask in range(1, 2**s):
        sigma = sum(vals[k] for k in range(s) if mask >> k & 1)
        total += (-1) ** (s - bin(mask).count("1")) * sigma**m
    return float(total)


def evaluate_L(H: Hypergraph, x) -> float:
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,):
        raise DimensionMismatch(f"expected a vector of length {H.n}, got shape {x.shape}")
    return LagrangianPolynomial(H)(x)


def gradient_L(H: Hypergraph, x) -> np.ndarray:
    return LagrangianPolynomial(H).gradient(x)


def project_to_simplex(v) -> np.ndarray:
    """Euclidean projection onto ``{x >= 0, sum x = 1}`` by the sort-and-threshold rule."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ks = np.arange(1, v.size + 1)
    rho = np.nonzero(u - css / ks > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def projected_gradient_norm(f: LagrangianPolynomial, x) -> float:
    """``||P_S(x + grad) - x||``; zero exactly at KKT points of max over S."""
    return float(np.linalg.norm(project_to_simplex(x + f.gradient(x)) - x))


def _ascend(f: LagrangianPolynomial, x, tol: float, max_iter: int):
    fx = f(x)
    for _ in range(max_iter):
        g = f.gradient(x)
        if np.linalg.norm(project_to_simplex(x + g) - x) < tol:
            return x, fx, True
        step = 1.0
        slack = _ROUNDING * max(1.0, abs(fx))
        while True:
            x_new = project_to_simplex(x + step * g)
            f_new = f(x_new)
            if f_new >= fx + ARMIJO * float(g @ (x_new - x)) - slack:
                break
            step *= SHRINK
            if step < _MIN_STEP:
                # no ascent direction left at working precision
                return x, fx, projected_gradient_norm(f, x) < tol
        if np.array_equal(x_new, x):
            return x, fx, projected_gradient_norm(f, x) < tol
        x, fx = x_new, f_new
    return x, fx, False


def start_points(H: Hypergraph, starts: int, seed: int, supports=()):
    """Barycenter, uniform weights on each given support, then seeded
    Dirichlet(1, ..., 1) draws until ``starts`` points exist."""
    n = H.n
    points = [np.full(n, 1.0 / n)]
    for S in supports:
        if len(points) >= starts:
            break
        x = np.zeros(n)
        x[np.asarray(S) - 1] = 1.0 / len(S)
        points.append(x)
    rng = np.random.default_rng(seed)
    while len(points) < starts:
        points.append(rng.dirichlet(np.ones(n)))
    return points[:starts]


def maximize_L(
    H: Hypergraph,
    starts: int = 32,
    seed: int = 0,
    tol: float = 1e-10,
    supports=None,
    max_iter: int = MAX_ASCENT_ITERATIONS,
) -> LagrangianResult:
    """Multi-start projected gradient ascent of L(H, .) over the simplex.

    ``supports`` defaults to the maximal cliques of H (maximum clique first);
    L is not concave on the simplex, so the result is the best local maximum
    found. Ties keep the earliest start.
    """
    if starts < 1:
        raise InputError("starts must be >= 1")
    f = LagrangianPolynomial(H)
    if supports is None:
        best_clique = clique_number(H).witness
        supports = [best_clique] + [c for c in maximal_cliques(H) if c != best_clique]

    best = None
    converged = 0
    for k, x0 in enumerate(start_points(H, starts, seed, supports)):
        x, fx, ok = _ascend(f, x0, tol, max_iter)
        if not ok:
            continue
        converged += 1
        if best is None or fx > best[1]:
            best = (x, fx, k)
    if best is None:
        raise NotConverged(f"no start out of {starts} reached tolerance {tol}", starts=starts)
    x, fx, k = best
    return LagrangianResult(
        value=float(f(x)),
        maximizer=x,
        starts_used=starts,
        kkt_residual=projected_gradient_norm(f, x),
        converged_starts=converged,
        best_start=k,
    )


def predicted_L(omega: int, m: int) -> float:
    """``(1/omega)^m * C(omega + 1, m)``."""
    if omega < 1 or m < 2:
        raise InputError("predicted_L needs omega >= 1 and m >= 2")
    return binom(omega + 1, m) / omega**m


def motzkin_straus_value(omega: int) -> float:
    """The 2-graph optimum ``(1 - 1/omega) / 2``."""
    return 0.5 * (1.0 - 1.0 / omega)
