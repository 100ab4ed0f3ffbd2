from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hspec.clique import (
    brute_force_clique_number,
    clique_number,
    find_nonadjacent_twins,
    is_clique,
    maximal_cliques,
    ms_hypothesis_holds,
)
from hspec.errors import VertexOutOfRange
from hspec.hypercore import complete_r_graph, random_r_graph, validate

from conftest import hypergraphs

ALMOST_K4_3 = validate(4, [e for e in combinations(range(1, 5), 3) if e != (2, 3, 4)])


def test_is_clique_examples():
    assert is_clique(complete_r_graph(4, [2, 3]), [1, 2, 3])
    assert not is_clique(ALMOST_K4_3, [2, 3, 4])
    assert is_clique(ALMOST_K4_3, [1, 2, 3])
    assert is_clique(validate(3, [[1, 2], [1, 2, 3]]), [3])
    with pytest.raises(VertexOutOfRange):
        is_clique(ALMOST_K4_3, [5])


def test_clique_number_examples():
    assert clique_number(validate(5, [])).omega == 1
    assert clique_number(validate(5, [])).witness == (1,)
    for n, R in [(4, [2]), (5, [2, 3]), (6, [3]), (5, [1, 2, 4])]:
        c = clique_number(complete_r_graph(n, R))
        assert c.omega == n and c.witness == tuple(range(1, n + 1))
    assert clique_number(ALMOST_K4_3).omega == 3


def test_uniform_vacuous_reading():
    # for R = {3} any pair is a clique
    H = validate(5, [[1, 2, 3]])
    assert clique_number(H).omega == 3
    assert clique_number(validate(5, [[3, 4, 5], [1, 2, 5]])).omega == 3
    assert is_clique(H, [4, 5])


def test_singleton_types_restrict_roots():
    H = validate(4, [[1], [2], [1, 2], [3, 4]])
    c = clique_number(H)
    assert c.omega == 2 and c.witness == (1, 2)
    # a singleton type with no usable vertices at all
    assert clique_number(validate(2, [[1], [1, 2]])).omega == 1


def test_witness_is_lexicographically_first():
    H = validate(6, [[1, 4], [2, 3], [2, 5], [3, 5], [4, 6], [1, 6]])
    assert clique_number(H).witness == (1, 4, 6)


@pytest.mark.parametrize("seed", range(100))
def test_brute_force_equivalence(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 13))
    R = [[2], [3], [2, 3], [1, 2], [2, 4], [3, 4]][seed % 6]
    R = [r for r in R if r <= n]
    H = random_r_graph(n, R, float(rng.uniform(0.3, 0.95)), seed)
    c = clique_number(H)
    assert c.omega == brute_force_clique_number(H)
    assert len(c.witness) == c.omega
    if H.edges:
        assert is_clique(H, c.witness)


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_n=7, max_rank=3), st.data())
def test_hereditary(H, data):
    c = clique_number(H)
    if not H.edges:
        return
    subset = data.draw(st.lists(st.sampled_from(c.witness), unique=True, min_size=1))
    assert is_clique(H, subset)


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=7, max_rank=3, min_edges=1), st.data())
def test_monotone_under_edge_addition(H, data):
    # same type set, so the clique condition only gets easier
    types = sorted({len(e) for e in H.edges})
    s = data.draw(st.sampled_from(types))
    extra = tuple(sorted(data.draw(st.sets(st.integers(1, H.n), min_size=s, max_size=s))))
    bigger = H.add_edges([extra]) if extra not in H.edge_set else H
    assert clique_number(bigger).omega >= clique_number(H).omega


def test_maximal_cliques():
    H = validate(5, [[1, 2], [2, 3], [1, 3], [3, 4], [4, 5]])
    found = maximal_cliques(H)
    assert set(found) == {(1, 2, 3), (3, 4), (4, 5)}
    assert len(maximal_cliques(complete_r_graph(8, [2]), limit=1)) == 1
    for c in found:
        assert is_clique(H, c)


def test_twins_examples():
    assert find_nonadjacent_twins(validate(6, [[1, 2, 3], [4, 5, 6]])) == (1, 4)
    assert find_nonadjacent_twins(complete_r_graph(5, [2, 3])) is None
    assert find_nonadjacent_twins(validate(5, [[1, 2], [3, 4, 5]])) is None
    assert find_nonadjacent_twins(validate(7, [[1, 2], [3, 4, 5]])) == (6, 7)


def test_hypothesis_examples():
    assert ms_hypothesis_holds(complete_r_graph(5, [2, 3]))
    k = complete_r_graph(4, [2, 3])
    two = validate(8, [list(e) for e in k.edges] + [[v + 4 for v in e] for e in k.edges])
    assert ms_hypothesis_holds(two)
    assert not ms_hypothesis_holds(complete_r_graph(5, [2, 4]))
    # both types m and m-1 must be present
    assert not ms_hypothesis_holds(complete_r_graph(5, [3]))
    assert not ms_hypothesis_holds(validate(5, [[1, 2], [2, 3, 4]]))
