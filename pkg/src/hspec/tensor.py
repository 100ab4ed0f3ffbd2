"""The adjacency tensor of a general hypergraph as a matrix-free operator.

For an edge ``e`` with ``|e| = s`` inside a rank-``m`` hypergraph every index
tuple that uses each vertex of ``e`` at least once carries the entry
``s / alpha(s, m)``. Sums over such surjective tuples are evaluated by
inclusion-exclusion over subsets ``T`` of ``e``::

    sum_{surjective (i1..im) onto e} x_i1 ... x_im
        = sum_{T subset e} (-1)^(s-|T|) (sum_{v in T} x_v)^m

which costs ``O(2^s)`` per edge instead of enumerating compositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
import numpy as np

from .comb import AlphaTable
from .errors import DimensionMismatch, EdgeLargerThanRank, InputError, NoEdges, TooLarge
from .hypercore import Hypergraph

DENSE_LIMIT = 10**7


class _SizeBlock:
    """All edges of one cardinality, with their subset masks precomputed."""

    def __init__(self, s: int, edges):
        self.s = s
        self.index = np.asarray(edges, dtype=np.intp).reshape(-1, s) - 1
        bits = np.arange(1, 2**s)
        self.masks = ((bits[:, None] >> np.arange(s)) & 1).astype(float)
        sizes = self.masks.sum(axis=1).astype(int)
        self.signs = np.where((s - sizes) % 2 == 0, 1.0, -1.0)

    def subset_sums(self, x):
        return x[self.index] @ self.masks.T

    def polynomials(self, x, m):
        """Per-edge surjective-tuple sums of degree ``m``."""
        return (self.subset_sums(x) ** m) @ self.signs

    def partials(self, x, m):
        """Per-edge, per-position sums over ``(m-1)``-tuples that together
        with the position's vertex cover the edge; shape ``(k, s)``."""
        return ((self.subset_sums(x) ** (m - 1)) * self.signs) @ self.masks


class EdgeSystem:
    """Edges grouped by cardinality, evaluated with per-size weights."""

    def __init__(self, H: Hypergraph, m: int):
        if H.rank > m:
            raise EdgeLargerThanRank(f"edge of size {H.rank} exceeds order {m}")
        self.n = H.n
        self.m = m
        self.blocks = [
            _SizeBlock(s, H.edges_of_size(s)) for s in sorted({len(e) for e in H.edges})
        ]

    def _vector(self, x):
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n,):
            raise DimensionMismatch(f"expected a vector of length {self.n}, got shape {x.shape}")
        return x

    def edge_values(self, x) -> np.ndarray:
        """Surjective-tuple sums for every edge, in canonical edge order."""
        x = self._vector(x)
        if not self.blocks:
            return np.zeros(0)
        return np.concatenate([b.polynomials(x, self.m) for b in self.blocks])

    def form(self, x, weights: dict[int, float]) -> float:
        x = self._vector(x)
        total = 0.0
        for b in self.blocks:
            total += weights[b.s] * float(np.sum(b.polynomials(x, self.m)))
        return total

    def partial_vector(self, x, weights: dict[int, float]) -> np.ndarray:
        x = self._vector(x)
        out = np.zeros(self.n)
        for b in self.blocks:
            contrib = b.partials(x, self.m)
            out += weights[b.s] * np.bincount(
                b.index.ravel(), weights=contrib.ravel(), minlength=self.n
            )
        return out


class AdjacencyOperator:
    """Implicit order-``m`` adjacency tensor of ``H``.

    ``m`` defaults to ``rank(H)``. A larger order may be passed when ``H`` is a
    piece of a bigger hypergraph whose rank fixes the tensor order.
    """

    def __init__(self, H: Hypergraph, m: int | None = None):
        if not H.edges:
            raise NoEdges("the adjacency tensor of an edgeless hypergraph is not defined")
        self.hypergraph = H
        self.m = H.rank if m is None else int(m)
        if self.m < 1:
            raise InputError("tensor order must be >= 1")
        self.alpha_table = AlphaTable(self.m)
        self.coefficients = {
            s: Fraction(s, self.alpha_table[s]) for s in {len(e) for e in H.edges}
        }
        self._weights = {s: float(c) for s, c in self.coefficients.items()}
        self._edges = EdgeSystem(H, self.m)

    @property
    def n(self) -> int:
        return self.hypergraph.n

    def coefficient(self, e) -> Fraction:
        return self.coefficients[len(e)]

    def apply(self, x) -> np.ndarray:
        """``A x^{m-1}``."""
        return self._edges.partial_vector(x, self._weights)

    def quadratic_form(self, x) -> float:
        """``A x^m``."""
        return self._edges.form(x, self._weights)

    def gradient(self, x) -> np.ndarray:
        """Gradient of ``A x^m``, which is ``m * A x^{m-1}``."""
        return self.m * self.apply(x)

    def edge_forms(self, x) -> np.ndarray:
        """``x^T A(e) x`` for every edge, canonical order."""
        vals = self._edges.edge_values(x)
        w = np.array([self._weights[len(e)] for e in self.hypergraph.edges])
        return w * vals

    def materialize_dense(self) -> "DenseTensor":
        return materialize_dense(self)


@dataclass(frozen=True)
class DenseTensor:
    m: int
    n: int
    entries: np.ndarray

    def apply(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = self.entries
        for _ in range(self.m - 1):
            out = out @ x
        return np.asarray(out, dtype=float).reshape(self.n)

    def quadratic_form(self, x) -> float:
        return float(np.asarray(x, dtype=float) @ self.apply(x))

    def is_symmetric(self) -> bool:
        return all(
            np.array_equal(self.entries, np.transpose(self.entries, axes))
            for axes in permutations(range(self.m))
        )

    def dumps(self) -> str:
        """Header ``m n`` then one value per line, first index slowest."""
        body = "\n".join(repr(float(v)) for v in self.entries.ravel(order="C"))
        return f"{self.m} {self.n}\n{body}\n"


def materialize_dense(op: AdjacencyOperator) -> DenseTensor:
    """Write out all ``n^m`` entries by enumerating surjective tuples per edge."""
    n, m = op.n, op.m
    if n**m > DENSE_LIMIT:
        raise TooLarge(f"dense tensor would hold {n}^{m} entries")
    T = np.zeros((n,) * m)
    for e in op.hypergraph.edges:
        value = float(op.coefficient(e))
        verts = set(e)
        for t in product(e, repeat=m):
            if set(t) == verts:
                T[tuple(v - 1 for v in t)] = value
    return DenseTensor(m, n, T)

