# test_graph_core.py
import pytest
from hypothesis import given

from conftest import build, simplicial_graphs
from graph_core import (
    GraphInputError, SimplicialGraph, components, format_vertex_set, induced_subgraph, is_clique,
    is_complete, is_connected, join_factors, link, remove_vertices, star,
)

C4 = build("1234", "12 23 34 41")
P3 = build("abc", "ab bc")
P4 = build("abcd", "ab bc cd")
K3 = build("abc", "ab ac bc")
K4 = build("abcd", "ab ac ad bc bd cd")


class TestSimplicialGraph:
    def test_duplicate_vertex_rejected(self):
        with pytest.raises(GraphInputError, match="duplicate"):
            SimplicialGraph.from_edges(["a", "a"])

    def test_loop_rejected(self):
        with pytest.raises(GraphInputError, match="loop"):
            SimplicialGraph.from_edges(["a"], [("a", "a")])

    def test_undeclared_endpoint_rejected(self):
        with pytest.raises(GraphInputError, match="undeclared vertex b"):
            SimplicialGraph.from_edges(["a"], [("a", "b")])

    def test_edges_come_back_in_declaration_order(self):
        g = SimplicialGraph.from_edges(["u", "w", "v"], [("v", "w"), ("u", "v"), ("w", "u")])
        assert g.ordered_edges() == [("u", "w"), ("u", "v"), ("w", "v")]

    def test_check_members_names_unknown_label(self):
        with pytest.raises(GraphInputError, match="unknown vertex z"):
            P3.check_members({"a", "z"})


class TestInducedSubgraph:
    def test_edge_of_square(self):
        h = induced_subgraph(C4, {"1", "2"})
        assert h.vertices == ("1", "2")
        assert h.edges == {frozenset({"1", "2"})}

    def test_empty_subset(self):
        assert len(induced_subgraph(P4, set())) == 0

    def test_non_adjacent_pair(self):
        h = induced_subgraph(P4, {"a", "c"})
        assert h.vertex_set == {"a", "c"}
        assert not h.edges

    def test_unknown_label(self):
        with pytest.raises(GraphInputError):
            induced_subgraph(P4, {"q"})

    def test_remove_vertices(self):
        assert remove_vertices(P4, {"b"}).vertex_set == {"a", "c", "d"}


class TestComponents:
    def test_two_isolated_vertices(self):
        g = build("uv")
        assert components(g) == [frozenset("u"), frozenset("v")]
        assert not is_connected(g)

    def test_path_is_connected(self):
        assert len(components(P4)) == 1
        assert is_connected(P4)

    def test_empty_graph_is_not_connected(self):
        empty = build("")
        assert components(empty) == []
        assert not is_connected(empty)


@pytest.mark.parametrize("g, expected", [(K3, True), (P3, False), (build("a"), True), (C4, False)])
def test_is_complete(g, expected):
    assert is_complete(g) is expected


@pytest.mark.parametrize("g, s, expected", [
    (K4, {"a", "b", "d"}, True),
    (C4, {"1", "3"}, False),
    (C4, set(), True),
    (P3, {"b"}, True),
])
def test_is_clique(g, s, expected):
    assert is_clique(g, s) is expected


def test_is_clique_unknown_vertex():
    with pytest.raises(GraphInputError):
        is_clique(P3, {"x"})


class TestLinkAndStar:
    def test_middle_of_path(self):
        assert link(P3, "b") == {"a", "c"}
        assert star(P3, "b") == {"a", "b", "c"}

    def test_triangle(self):
        assert link(K3, "a") == {"b", "c"}
        assert star(K3, "a") == {"a", "b", "c"}

    def test_isolated_vertex(self):
        g = build("v")
        assert link(g, "v") == frozenset()
        assert star(g, "v") == {"v"}

    def test_unknown_vertex(self):
        with pytest.raises(GraphInputError):
            link(P3, "z")


@pytest.mark.parametrize("g, expected", [
    (C4, [{"1", "3"}, {"2", "4"}]),
    (P3, [{"a", "c"}, {"b"}]),
    (K3, [{"a"}, {"b"}, {"c"}]),
    (P4, [{"a", "b", "c", "d"}]),
])
def test_join_factors(g, expected):
    assert join_factors(g) == [frozenset(f) for f in expected]


def test_format_vertex_set_sorts_labels():
    assert format_vertex_set({"c", "a", "b"}) == "{a,b,c}"
    assert format_vertex_set(set()) == "{}"


@given(simplicial_graphs(min_vertices=0))
def test_components_partition_the_vertices(g):
    parts = components(g)
    assert sum(len(p) for p in parts) == len(g)
    assert frozenset().union(*parts) == g.vertex_set


@given(simplicial_graphs(min_vertices=0))
def test_components_are_connected_and_not_joined(g):
    parts = components(g)
    assert all(is_connected(induced_subgraph(g, part)) for part in parts)
    for i, first in enumerate(parts):
        for second in parts[i + 1:]:
            assert not any(g.adjacent(u, w) for u in first for w in second)


@given(simplicial_graphs(min_vertices=0))
def test_induced_subgraph_on_every_vertex_is_the_graph(g):
    assert induced_subgraph(g, g.vertices) == g


@given(simplicial_graphs(min_vertices=0))
def test_complete_means_whole_vertex_set_is_a_clique(g):
    assert is_complete(g) == is_clique(g, g.vertices)


@given(simplicial_graphs())
def test_star_is_link_plus_vertex(g):
    for v in g.vertices:
        assert star(g, v) - link(g, v) == {v}
        assert all(g.adjacent(v, w) for w in link(g, v))
