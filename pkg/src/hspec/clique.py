"""Exact clique number of an R-graph.

A vertex set ``S`` is a clique when, for every edge type ``s`` of ``H`` with
``s <= |S|``, every ``s``-subset of ``S`` is an edge. Types larger than ``|S|``
impose nothing, so for ``R = {m}`` every set of at most ``m - 1`` vertices is
a clique. An edgeless hypergraph has clique number 1 by convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import VertexOutOfRange
from .hypercore import Hypergraph, edge_types, is_complete, vertex_profile

MAXIMAL_CLIQUE_CAP = 64


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    witness: tuple[int, ...]
    nodes_explored: int


def is_clique(H: Hypergraph, S) -> bool:
    S = sorted(set(S))
    for v in S:
        if not 1 <= v <= H.n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{H.n}")
    edges = H.edge_set
    return all(
        c in edges for s in edge_types(H) if s <= len(S) for c in combinations(S, s)
    )


class _Search:
    def __init__(self, H: Hypergraph):
        self.H = H
        self.edges = H.edge_set
        self.types = edge_types(H)
        self.nodes = 0

    def roots(self):
        if 1 in self.types:
            return [v for v in range(1, self.H.n + 1) if (v,) in self.edges]
        return list(range(1, self.H.n + 1))

    def compatible(self, S, v, u):
        """Given ``S + [v]`` and ``S + [u]`` are cliques, is ``S + [v, u]``?

        Only subsets containing both ``v`` and ``u`` remain to be checked.
        """
        pair = (v, u) if v < u else (u, v)
        for s in self.types:
            if s < 2 or s > len(S) + 2:
                continue
            for c in combinations(S, s - 2):
                if tuple(sorted(c + pair)) not in self.edges:
                    return False
        return True

    def extend(self, S, cands):
        return [u for u in cands if self.compatible(S[:-1], S[-1], u)]


def clique_number(H: Hypergraph) -> CliqueResult:
    """Depth-first branch and bound in vertex order.

    The first maximum clique met in lexicographic order is the witness.
    """
    if not H.edges:
        return CliqueResult(1, (1,), 1)
    search = _Search(H)
    best: list = [()]

    def dfs(S, cands):
        search.nodes += 1
        if len(S) > len(best[0]):
            best[0] = tuple(S)
        for idx, v in enumerate(cands):
            if len(S) + len(cands) - idx <= len(best[0]):
                return
            S.append(v)
            dfs(S, search.extend(S, cands[idx + 1 :]))
            S.pop()

    dfs([], search.roots())
    witness = best[0]
    return CliqueResult(len(witness), witness, search.nodes)


def maximal_cliques(H: Hypergraph, limit: int = MAXIMAL_CLIQUE_CAP) -> list[tuple[int, ...]]:
    """Up to ``limit`` maximal cliques, in the order a plain depth-first
    enumeration meets them."""
    if not H.edges:
        return [(v,) for v in range(1, H.n + 1)][:limit]
    search = _Search(H)
    roots = search.roots()
    found: list[tuple[int, ...]] = []

    def is_maximal(S):
        members = set(S)
        return not any(
            v not in members and is_clique(H, S + [v]) for v in roots
        )

    def dfs(S, cands):
        if len(found) >= limit:
            return
        if not cands:
            if S and is_maximal(S):
                found.append(tuple(S))
            return
        for idx, v in enumerate(cands):
            S.append(v)
            dfs(S, search.extend(S, cands[idx + 1 :]))
            S.pop()
            if len(found) >= limit:
                return

    dfs([], roots)
    return found


def brute_force_clique_number(H: Hypergraph) -> int:
    """Largest ``|S|`` over all ``2^n`` subsets passing :func:`is_clique`."""
    if not H.edges:
        return 1
    best = 0
    for mask in range(1, 2**H.n):
        S = [v + 1 for v in range(H.n) if mask >> v & 1]
        if len(S) > best and is_clique(H, S):
            best = len(S)
    return best


def _adjacent(H: Hypergraph, i: int, j: int) -> bool:
    a, b = set(H.incidence[i - 1]), H.incidence[j - 1]
    return any(k in a for k in b)


def find_nonadjacent_twins(H: Hypergraph):
    """Lexicographically least pair ``(i, j)`` of vertices that share no edge
    and have equal edge-type multisets, or None."""
    profiles = [vertex_profile(H, v).type_multiset for v in range(1, H.n + 1)]
    for i in range(1, H.n + 1):
        for j in range(i + 1, H.n + 1):
            if profiles[i - 1] == profiles[j - 1] and not _adjacent(H, i, j):
                return (i, j)
    return None


def ms_hypothesis_holds(H: Hypergraph) -> bool:
    """Hypothesis of the Motzkin-Straus-type formula for L(H): the edge types
    are exactly ``{m, m-1}`` and H is complete or has nonadjacent twins."""
    m = H.rank
    if m < 2 or set(edge_types(H)) != {m, m - 1}:
        return False
    return is_complete(H) or find_nonadjacent_twins(H) is not None
