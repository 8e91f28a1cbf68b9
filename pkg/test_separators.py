# test_separators.py
import pytest
from hypothesis import given

from conftest import build, simplicial_graphs
from graph_core import GraphInputError, PreconditionError, is_clique, is_connected
from oracle import oracle_separating_cliques
from separators import (
    cut_vertices, enumerate_separating_cliques, is_separating, min_separating_cliques,
)

P3 = build("abc", "ab bc")
P4 = build("abcd", "ab bc cd")
C4 = build("1234", "12 23 34 41")
C5 = build("12345", "12 23 34 45 51")
K4 = build("abcd", "ab ac ad bc bd cd")
TRIANGLE_PENDANT = build("abcd", "ab ac ad bc")
TWO_TRIANGLES = build("abcd", "ab ac ad bc bd")
CLAW = build("cxyz", "cx cy cz")


def complete(n: int):
    labels = "abcdef"[:n]
    return build(labels, " ".join(u + w for i, u in enumerate(labels) for w in labels[i + 1:]))


class TestIsSeparating:
    def test_middle_of_path(self):
        assert is_separating(P3, {"b"})

    @pytest.mark.parametrize("s", [set(), {"a"}, {"a", "b"}, {"b", "c", "d"}])
    def test_complete_graph_never_separates(self, s):
        assert not is_separating(K4, s)

    def test_opposite_corners_of_square(self):
        assert is_separating(C4, {"1", "3"})

    def test_whole_vertex_set_does_not_separate(self):
        assert not is_separating(P3, {"a", "b", "c"})

    def test_unknown_vertex(self):
        with pytest.raises(GraphInputError):
            is_separating(P3, {"z"})


class TestEnumerate:
    def test_path(self):
        report = enumerate_separating_cliques(P4)
        assert report.minimal_size == 1
        assert report.by_size[1] == (frozenset("b"), frozenset("c"))
        assert report.by_size[2] == (frozenset("bc"),)
        assert report.cut_vertices == ("b", "c")

    def test_square_has_no_separating_clique(self):
        report = enumerate_separating_cliques(C4)
        assert report.is_empty
        assert report.minimal_size is None

    @pytest.mark.parametrize("n", range(1, 7))
    def test_complete_graphs(self, n):
        assert enumerate_separating_cliques(complete(n)).is_empty

    def test_max_size_bounds_the_search(self):
        report = enumerate_separating_cliques(P4, max_size=1)
        assert list(report.by_size) == [1]

    def test_minimal_only_stops_at_k(self):
        report = enumerate_separating_cliques(P4, minimal_only=True)
        assert report.minimal() == (frozenset("b"), frozenset("c"))
        assert 2 not in report.by_size

    def test_describe(self):
        assert enumerate_separating_cliques(P4).describe() == [
            "minimal size: 1",
            "size 1: {b} {c}",
            "size 2: {b,c}",
            "cut vertices: b c",
        ]
        assert enumerate_separating_cliques(C4).describe() == ["minimal size: none", "cut vertices: none"]

    def test_disconnected_host_is_flagged(self):
        report = enumerate_separating_cliques(build("abcd", "ab bc"))
        assert not report.connected
        assert "warning: host graph is disconnected" in report.describe()
        assert frozenset("b") in report.by_size[1]

    def test_empty_graph_is_not_flagged(self):
        report = enumerate_separating_cliques(build(""))
        assert report.connected
        assert report.describe() == ["minimal size: none", "cut vertices: none"]


class TestMinSeparatingCliques:
    @pytest.mark.parametrize("g, expected", [
        (P4, (1, [frozenset("b"), frozenset("c")])),
        (TRIANGLE_PENDANT, (1, [frozenset("a")])),
        (TWO_TRIANGLES, (2, [frozenset("ab")])),
        (C5, (None, [])),
    ])
    def test_examples(self, g, expected):
        assert min_separating_cliques(g) == expected

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionError, match="connected"):
            min_separating_cliques(build("ab"))

    def test_complete_rejected(self):
        with pytest.raises(PreconditionError, match="not complete"):
            min_separating_cliques(K4)


@pytest.mark.parametrize("g, expected", [(P3, ["b"]), (C5, []), (CLAW, ["c"])])
def test_cut_vertices(g, expected):
    assert cut_vertices(g) == expected


@given(simplicial_graphs(max_vertices=8))
def test_enumeration_matches_the_oracle(g):
    assert enumerate_separating_cliques(g) == oracle_separating_cliques(g)


@given(simplicial_graphs(max_vertices=9, connected=True))
def test_every_reported_set_is_a_separating_clique(g):
    report = enumerate_separating_cliques(g)
    for clique in report.all_cliques():
        assert is_clique(g, clique)
        assert is_separating(g, clique)
    if report.minimal_size is not None:
        assert all(len(c) >= report.minimal_size for c in report.all_cliques())


@given(simplicial_graphs(min_vertices=3, max_vertices=9, connected=True))
def test_size_one_separators_are_cut_vertices(g):
    assert is_connected(g)
    report = enumerate_separating_cliques(g)
    assert (report.minimal_size == 1) == bool(cut_vertices(g))
