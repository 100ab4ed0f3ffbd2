from math import comb

import pytest
from hypothesis import given, settings

from hspec import formats
from hspec.errors import (
    DuplicateEdge,
    DuplicateVertexInEdge,
    EmptyEdge,
    InputError,
    ParseError,
    TypeExceedsN,
    VertexOutOfRange,
)
from hspec.hypercore import (
    complete_r_graph,
    connected_components,
    edge_types,
    is_complete,
    random_r_graph,
    validate,
    vertex_profile,
)

from conftest import hypergraphs


def test_validate_mixed_example(mixed_example):
    assert mixed_example.rank == 3
    assert mixed_example.edges == ((1, 3), (1, 2, 3), (1, 3, 4))


def test_validate_sorts_edges_canonically():
    H = validate(4, [[4, 3, 1], [2, 1], [3, 1]])
    assert H.edges == ((1, 2), (1, 3), (1, 3, 4))


def test_edgeless_rank_zero():
    H = validate(3, [])
    assert H.rank == 0 and H.edges == ()
    assert edge_types(H) == ()


@pytest.mark.parametrize(
    "n, edges, exc, index",
    [
        (2, [[1, 1]], DuplicateVertexInEdge, 0),
        (3, [[1, 2], []], EmptyEdge, 1),
        (3, [[1, 2], [2, 4]], VertexOutOfRange, 1),
        (3, [[1, 2], [3], [2, 1]], DuplicateEdge, 2),
        (3, [[0, 1]], VertexOutOfRange, 0),
    ],
)
def test_validate_errors_name_edge(n, edges, exc, index):
    with pytest.raises(exc, match=f"edge {index}"):
        validate(n, edges)


def test_validate_rejects_bad_n():
    with pytest.raises(InputError):
        validate(0, [])


def test_edge_types(mixed_example):
    assert edge_types(mixed_example) == (2, 3)
    assert edge_types(complete_r_graph(5, [3])) == (3,)


def test_vertex_profile(mixed_example):
    prof = vertex_profile(mixed_example, 1)
    assert prof.type_multiset == {2: 1, 3: 2}
    assert prof.as_list() == [2, 3, 3]
    assert vertex_profile(validate(3, [[1, 2]]), 3).type_multiset == {}
    with pytest.raises(VertexOutOfRange):
        vertex_profile(mixed_example, 5)


def test_vertex_profile_complete():
    H = complete_r_graph(4, [2, 3])
    for i in range(1, 5):
        # C(3, 1) pairs and C(3, 2) triples through each vertex
        assert vertex_profile(H, i).type_multiset == {2: 3, 3: 3}


def test_complete_r_graph():
    assert complete_r_graph(3, [2, 3]).edges == ((1, 2), (1, 3), (2, 3), (1, 2, 3))
    assert len(complete_r_graph(4, [2]).edges) == 6
    H = complete_r_graph(5, [1, 4])
    assert len(H.edges_of_size(1)) == 5 and len(H.edges_of_size(4)) == 5
    assert H.rank == 4
    with pytest.raises(TypeExceedsN):
        complete_r_graph(3, [4])


@pytest.mark.parametrize("n, R", [(4, [2]), (5, [2, 3]), (6, [1, 3, 4]), (7, [3])])
def test_complete_r_graph_counts(n, R):
    H = complete_r_graph(n, R)
    assert len(H.edges) == sum(comb(n, r) for r in R)
    for v in range(1, n + 1):
        prof = vertex_profile(H, v).type_multiset
        assert prof == {r: comb(n - 1, r - 1) for r in R}
    assert is_complete(H)


def test_random_r_graph_extremes():
    assert random_r_graph(5, [2, 3], 1.0, 3) == complete_r_graph(5, [2, 3])
    assert random_r_graph(5, [2, 3], 0.0, 3).edges == ()
    with pytest.raises(InputError):
        random_r_graph(5, [2], 1.5, 0)
    with pytest.raises(TypeExceedsN):
        random_r_graph(3, [4], 0.5, 0)


def test_random_r_graph_deterministic():
    a = random_r_graph(6, [2, 3], 0.5, 7)
    b = random_r_graph(6, [2, 3], 0.5, 7)
    assert formats.dumps_text(a).encode() == formats.dumps_text(b).encode()
    assert a != random_r_graph(6, [2, 3], 0.5, 8)


def test_connected_components():
    assert connected_components(validate(4, [[1, 2, 3]])) == [(1, 2, 3), (4,)]
    assert connected_components(complete_r_graph(5, [2, 3])) == [(1, 2, 3, 4, 5)]
    assert len(connected_components(validate(5, [[1, 2], [3, 4, 5]]))) == 2
    # singleton edges give no adjacency
    assert connected_components(validate(2, [[1], [2]])) == [(1,), (2,)]


@settings(max_examples=100, deadline=None)
@given(hypergraphs())
def test_structural_invariants(H):
    R = edge_types(H)
    if H.edges:
        assert H.rank in R
    else:
        assert H.rank == 0
    assert H.rank == max((len(e) for e in H.edges), default=0)
    # handshake identity
    assert sum(H.degree(v) for v in range(1, H.n + 1)) == sum(len(e) for e in H.edges)
    for v in range(1, H.n + 1):
        assert vertex_profile(H, v).total == H.degree(v)
    parts = connected_components(H)
    assert sorted(v for c in parts for v in c) == list(range(1, H.n + 1))


@settings(max_examples=100, deadline=None)
@given(hypergraphs())
def test_serialization_round_trip(H):
    assert formats.parse_text(formats.dumps_text(H)) == H
    assert formats.parse_json(formats.dumps_json(H)) == H
    assert formats.parse(formats.dumps_json(H)) == H
    assert validate(H.n, [list(e) for e in H.edges]) == H


def test_relabel_and_induced():
    H = validate(4, [[1, 2], [2, 3, 4]])
    assert H.relabel([4, 3, 2, 1]).edges == ((3, 4), (1, 2, 3))
    assert H.induced([2, 3, 4]).edges == ((1, 2, 3),)


def test_parse_text_comments_and_blank_lines():
    H = formats.parse_text("# header\n4\n\n1 3   # pair\n1 2 3\n1 3 4\n")
    assert H == validate(4, [[1, 3], [1, 2, 3], [1, 3, 4]])


@pytest.mark.parametrize(
    "text, line",
    [("3\n1 2\n1 x\n", 3), ("3\n1 2\n2 5\n", 3), ("3 4\n", 1), ("3\n1 2\n\n2 1\n", 4)],
)
def test_parse_text_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        formats.parse_text(text)
    assert info.value.line == line


def test_parse_json_errors():
    with pytest.raises(ParseError):
        formats.parse_json('{"n": 3}')
    with pytest.raises(ParseError):
        formats.parse_json('{"n": 3, "edges": [[1, "a"]]}')
    with pytest.raises(ParseError):
        formats.parse_json("{not json")


def test_hypergraph_is_hashable_and_immutable():
    H = validate(3, [[1, 2]])
    assert hash(H) == hash(validate(3, [[2, 1]]))
    with pytest.raises(Exception):
        H.n = 5
