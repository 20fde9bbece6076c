# tests/test_graph.py
import sys
import os
import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.errors import BadParams, DuplicateEdge, MalformedHeader, ParseError, SelfLoop, UnknownFamily, VertexOutOfRange
from app.graph import (
    Graph,
    VertexSet,
    degree_split,
    family_graphs,
    generate,
    graph_power,
    is_dominating,
    parse_edge_list,
    parse_vertex_list,
    random_gnp,
    serialize_edge_list,
)


def test_parse_path():
    g = parse_edge_list("3 2\n0 1\n1 2")
    assert g.n == 3
    assert g.degrees() == [1, 2, 1]


def test_parse_single_vertex():
    g = parse_edge_list("1 0")
    assert g.n == 1 and g.m == 0


def test_parse_skips_comments_and_blank_lines():
    g = parse_edge_list("# triangle\n\n3 3\n0 1\n1 2\n\n0 2\n")
    assert g.m == 3
    assert g.is_regular(2)


@pytest.mark.parametrize(
    "text, error",
    [
        ("2 2\n0 1\n1 0", DuplicateEdge),
        ("3 1\n0 0", SelfLoop),
        ("3 1\n0 5", VertexOutOfRange),
        ("3 2\n0 1", MalformedHeader),
        ("three 0", MalformedHeader),
        ("", MalformedHeader),
        ("3 1\n0 x", ParseError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_edge_list(text)


def test_serialize_sorts_edges():
    assert serialize_edge_list(generate("cycle", [4])) == "4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_generate_families():
    c5 = generate("cycle", [5])
    assert c5.n == 5 and c5.is_regular(2)
    assert generate("complete", [4]).m == 6
    star = generate("star", [3])
    assert star.n == 4 and star.degree(0) == 3
    k23 = generate("complete-bipartite", [2, 3])
    assert k23.m == 6
    assert generate("path", [1]).m == 0


def test_generate_bad_input():
    with pytest.raises(UnknownFamily):
        generate("petersen", [10])
    with pytest.raises(BadParams):
        generate("cycle", [2])
    with pytest.raises(BadParams):
        generate("complete-bipartite", [2])
    with pytest.raises(BadParams):
        generate("random-gnp", [5, 1, 2])


def test_random_gnp_is_reproducible():
    a = generate("random-gnp", [12, 3, 10], seed=7)
    b = random_gnp(12, 3, 10, 7)
    assert a == b
    assert random_gnp(6, 0, 1, 3).m == 0
    assert random_gnp(6, 1, 1, 3).m == 15


def test_graph_power():
    assert graph_power(generate("cycle", [5]), 2).m == 10
    p4 = generate("path", [4])
    assert graph_power(p4, 2).edges == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    assert graph_power(p4, 1) == p4
    with pytest.raises(BadParams):
        graph_power(p4, 0)


def test_degree_split():
    c4 = generate("cycle", [4])
    assert degree_split(c4, VertexSet.of(4, [0, 2]), 1) == (2, 0)
    k4 = generate("complete", [4])
    assert degree_split(k4, VertexSet.of(4, [0, 1]), 2) == (2, 1)
    assert degree_split(k4, VertexSet.full(4), 3) == (3, 0)


def test_is_dominating():
    assert is_dominating(generate("cycle", [5]), VertexSet.of(5, [0, 2]))
    assert not is_dominating(generate("cycle", [5]), VertexSet.of(5, [0]))
    assert not is_dominating(parse_edge_list("1 0"), VertexSet.empty(1))
    assert is_dominating(generate("path", [3]), VertexSet.full(3))


def test_vertex_set():
    s = VertexSet.of(5, [3, 0])
    assert str(s) == "{0,3}"
    assert list(s) == [0, 3]
    assert len(s) == 2
    assert 3 in s and 1 not in s
    assert s.complement().members() == (1, 2, 4)
    assert s.issubset(VertexSet.full(5))
    with pytest.raises(VertexOutOfRange):
        VertexSet.of(3, [3])


def test_parse_vertex_list():
    assert parse_vertex_list("{0,2}", 4).mask == 0b101
    assert parse_vertex_list("1 3", 4).members() == (1, 3)
    assert parse_vertex_list("", 4) == VertexSet.empty(4)
    with pytest.raises(VertexOutOfRange):
        parse_vertex_list("0,9", 4)
    with pytest.raises(ParseError):
        parse_vertex_list("a", 4)


def test_family_counts():
    assert sum(1 for _ in family_graphs("all", 3, 3)) == 8
    assert sum(1 for _ in family_graphs("all-min-degree-1", 3, 3)) == 4
    assert sum(1 for _ in family_graphs("all-min-degree-1", 4, 4)) == 41
    assert sum(1 for _ in family_graphs("regular", 3, 3)) == 2
    assert [g.n for g in family_graphs("cycles", 5)] == [3, 4, 5]
    with pytest.raises(UnknownFamily):
        list(family_graphs("trees", 3))


def test_networkx_round_trip_keeps_labels():
    g = generate("complete-bipartite", [2, 2])
    assert Graph.from_networkx(g.to_networkx()) == g
