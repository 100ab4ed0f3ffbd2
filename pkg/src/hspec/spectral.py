"""Spectral radius and principal eigenvector of the adjacency tensor.

Shifted power iteration for nonnegative tensors: with ``B = A + eps*I``,

    y = A x^{m-1} + eps * x^{[m-1]}
    lambda in [min_i y_i / x_i^{m-1}, max_i y_i / x_i^{m-1}]
    x <- y^{[1/(m-1)]} / ||y^{[1/(m-1)]}||_m

The ratio bracket always contains ``rho(A) + eps`` (Collatz-Wielandt), and the
shift breaks the periodic behaviour the plain iteration shows on
non-primitive tensors such as bipartite graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, NoEdges, NotConverged
from .hypercore import Hypergraph, connected_components
from .tensor import AdjacencyOperator

_TINY = 1e-300


@dataclass(frozen=True)
class PowerIterationConfig:
    tolerance: float = 1e-10
    max_iterations: int = 100_000
    shift: float = 1.0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise InputError("tolerance must be positive")
        if not self.shift >= 0:
            raise InputError("shift must be nonnegative")
        if self.max_iterations < 1:
            raise InputError("max_iterations must be >= 1")


@dataclass
class SpectralResult:
    """Outcome of :func:`spectral_radius`.

    ``eigenvector`` has unit m-norm. On a disconnected hypergraph it is the
    eigenvector of the component attaining the maximum, padded with zeros,
    and ``positive_support`` is False.
    """

    rho: float
    eigenvector: np.ndarray
    residual: float
    iterations: int
    lambda_lo: float
    lambda_hi: float
    m: int
    positive_support: bool = True
    component_rhos: list[tuple[tuple[int, ...], float]] = field(default_factory=list)


def _power_iteration(op: AdjacencyOperator, cfg: PowerIterationConfig):
    m, n = op.m, op.n
    eps = cfg.shift
    x = np.full(n, n ** (-1.0 / m))
    lo = hi = np.nan
    for it in range(1, cfg.max_iterations + 1):
        xp = x ** (m - 1)
        y = op.apply(x) + eps * xp
        live = x > _TINY
        ratios = y[live] / xp[live]
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi > 0 and (hi - lo) / hi < cfg.tolerance:
            return x, lo - eps, hi - eps, it
        if hi == 0:
            break
        x = y ** (1.0 / (m - 1))
        x /= np.sum(x**m) ** (1.0 / m)
    raise NotConverged(
        f"power iteration did not converge in {cfg.max_iterations} iterations",
        iterations=cfg.max_iterations,
        bracket=(lo - eps, hi - eps),
    )


def spectral_radius(H: Hypergraph, cfg: PowerIterationConfig | None = None) -> SpectralResult:
    """rho(H) and its principal eigenvector.

    Each connected component carrying edges is solved separately with the
    global tensor order ``m = rank(H)``; rho is the maximum over components.
    """
    cfg = cfg or PowerIterationConfig()
    if not H.edges:
        raise NoEdges("spectral radius needs at least one edge")
    m = H.rank
    if m < 2:
        raise InputError("rank-1 hypergraphs are not supported: the eigenequation degenerates")

    best = None
    per_component = []
    total_iterations = 0
    components = connected_components(H)
    for comp in components:
        sub = H.induced(comp)
        if not sub.edges:
            continue
        op = AdjacencyOperator(sub, m)
        x, lo, hi, its = _power_iteration(op, cfg)
        total_iterations += its
        rho = 0.5 * (lo + hi)
        per_component.append((comp, rho))
        if best is None or rho > best[0]:
            best = (rho, comp, x, lo, hi)

    rho, comp, x_comp, lo, hi = best
    x = np.zeros(H.n)
    x[np.asarray(comp) - 1] = x_comp
    return SpectralResult(
        rho=rho,
        eigenvector=x,
        residual=eigen_residual(H, x, rho),
        iterations=total_iterations,
        lambda_lo=lo,
        lambda_hi=hi,
        m=m,
        positive_support=len(components) == 1,
        component_rhos=per_component,
    )


def eigen_residual(H: Hypergraph, x, lam: float) -> float:
    """Infinity norm of ``A x^{m-1} - lam * x^{[m-1]}``."""
    op = AdjacencyOperator(H)
    x = np.asarray(x, dtype=float)
    r = op.apply(x) - lam * x ** (op.m - 1)
    return float(np.max(np.abs(r)))


def principal_eigenvector_sum(result: SpectralResult) -> float:
    """U, the entry sum of the principal eigenvector."""
    return float(np.sum(result.eigenvector))
