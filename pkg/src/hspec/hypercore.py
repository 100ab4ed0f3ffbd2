"""Canonical hypergraph representation, construction and structural queries.

Vertices are 1-based everywhere in the public API, matching the usual
``[n] = {1, ..., n}`` convention. Edges are stored as sorted tuples and the
edge list is kept in canonical order: by cardinality, then lexicographically.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateEdge,
    DuplicateVertexInEdge,
    EmptyEdge,
    InputError,
    TypeExceedsN,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


def _edge_key(e: Edge):
    return (len(e), e)


@dataclass(frozen=True)
class Hypergraph:
    """An immutable general hypergraph on vertices ``1..n``.

    Build instances through :func:`validate` (or the generators below); the
    constructor trusts its arguments to already be canonical.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    rank: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "rank", max((len(e) for e in self.edges), default=0))

    def __len__(self):
        return len(self.edges)

    @property
    def m(self) -> int:
        return self.rank

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """``incidence[v-1]`` holds the indices of the edges containing ``v``."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for k, e in enumerate(self.edges):
            for v in e:
                inc[v - 1].append(k)
        return tuple(tuple(ks) for ks in inc)

    def degree(self, v: int) -> int:
        _check_vertex(self, v)
        return len(self.incidence[v - 1])

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self.edge_set

    def edges_of_size(self, s: int) -> list[Edge]:
        return [e for e in self.edges if len(e) == s]

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "Hypergraph":
        """Return a new hypergraph with ``extra`` edges added (validated)."""
        return validate(self.n, list(self.edges) + [list(e) for e in extra])

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Apply the vertex map ``v -> perm[v-1]`` (a permutation of 1..n)."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise InputError("relabel expects a permutation of 1..n")
        return validate(self.n, [[perm[v - 1] for v in e] for e in self.edges])

    def induced(self, vertices: Sequence[int]) -> "Hypergraph":
        """Sub-hypergraph on ``vertices`` (relabelled 1..k in the given order),
        keeping every edge lying entirely inside the set."""
        index = {v: k + 1 for k, v in enumerate(vertices)}
        kept = [[index[v] for v in e] for e in self.edges if all(v in index for v in e)]
        return validate(len(vertices), kept)


def _check_vertex(H: Hypergraph, v: int):
    if not 1 <= v <= H.n:
        raise VertexOutOfRange(f"vertex {v} outside 1..{H.n}")


def validate(raw_n: int, raw_edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Check and normalize raw input into a canonical :class:`Hypergraph`.

    Errors name the offending edge by its index in ``raw_edges``.
    """
    if isinstance(raw_n, bool) or not isinstance(raw_n, (int, np.integer)) or raw_n < 1:
        raise InputError(f"vertex count must be an integer >= 1, got {raw_n!r}")
    n = int(raw_n)
    seen: dict[Edge, int] = {}
    for idx, raw in enumerate(raw_edges):
        verts = [int(v) for v in raw]
        if not verts:
            raise EmptyEdge(f"edge {idx} is empty")
        for v in verts:
            if not 1 <= v <= n:
                raise VertexOutOfRange(f"edge {idx} has vertex {v} outside 1..{n}")
        e = tuple(sorted(verts))
        if len(set(e)) != len(e):
            raise DuplicateVertexInEdge(f"edge {idx} repeats a vertex: {list(raw)}")
        if e in seen:
            raise DuplicateEdge(f"edge {idx} duplicates edge {seen[e]}: {list(e)}")
        seen[e] = idx
    return Hypergraph(n, tuple(sorted(seen, key=_edge_key)))


def edge_types(H: Hypergraph) -> tuple[int, ...]:
    """Sorted distinct edge cardinalities (the set R)."""
    return tuple(sorted({len(e) for e in H.edges}))


@dataclass(frozen=True)
class VertexTypeProfile:
    """Multiset of edge cardinalities over the edges containing ``vertex``."""

    vertex: int
    type_multiset: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.type_multiset.values())

    def as_list(self) -> list[int]:
        return [s for s in sorted(self.type_multiset) for _ in range(self.type_multiset[s])]


def vertex_profile(H: Hypergraph, i: int) -> VertexTypeProfile:
    _check_vertex(H, i)
    counts = Counter(len(H.edges[k]) for k in H.incidence[i - 1])
    return VertexTypeProfile(i, dict(sorted(counts.items())))


def _check_types(n: int, R: Iterable[int]) -> list[int]:
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    types = sorted(set(int(r) for r in R))
    for r in types:
        if r < 1 or r > n:
            raise TypeExceedsN(f"edge type {r} not in 1..{n}")
    return types


def complete_r_graph(n: int, R: Iterable[int]) -> Hypergraph:
    """All r-subsets of ``[n]`` for every ``r`` in ``R``."""
    types = _check_types(n, R)
    edges = [c for r in types for c in combinations(range(1, n + 1), r)]
    return Hypergraph(n, tuple(edges))


def random_r_graph(n: int, R: Iterable[int], p: float, seed: int) -> Hypergraph:
    """Include each candidate r-subset independently with probability ``p``.

    Candidates are visited in canonical order and the generator is a seeded
    PCG64, so the output depends only on ``(n, R, p, seed)``.
    """
    if not 0.0 <= p <= 1.0:
        raise InputError(f"probability must lie in [0, 1], got {p}")
    types = _check_types(n, R)
    rng = np.random.default_rng(seed)
    edges = [
        c for r in types for c in combinations(range(1, n + 1), r) if rng.random() < p
    ]
    return Hypergraph(n, tuple(edges))


def connected_components(H: Hypergraph) -> list[tuple[int, ...]]:
    """Components of the adjacency relation, sorted by smallest vertex.

    Singleton edges create no adjacency, so they leave their vertex alone.
    """
    parent = list(range(H.n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in H.edges:
        root = find(e[0])
        for v in e[1:]:
            other = find(v)
            if other != root:
                parent[other] = root
    groups: dict[int, list[int]] = {}
    for v in range(1, H.n + 1):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


def is_connected(H: Hypergraph) -> bool:
    return len(connected_components(H)) == 1


def is_complete(H: Hypergraph) -> bool:
    """True iff H is the complete R-graph on its vertex set for its own R."""
    return len(H.edges) == sum(comb(H.n, r) for r in edge_types(H))
