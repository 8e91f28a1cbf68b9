# test_splitting.py
import pytest
from hypothesis import given

from conftest import build, simplicial_graphs
from graph_core import GraphInputError, PreconditionError, is_clique, star
from jsj import verify_reassembly
from oracle import oracle_classify
from splitting import (
    SplittingClass, SplittingKind, classify, clique_amalgam, cyclic_splitting_vertex, free_splitting,
    star_elimination, star_splitting,
)

P3 = build("abc", "ab bc")
K3 = build("abc", "ab ac bc")
C5 = build("12345", "12 23 34 45 51")
CLAW = build("cxyz", "cx cy cz")
TWO_TRIANGLES = build("abcd", "ab ac ad bc bd")


class TestClassify:
    def test_two_isolated_vertices(self):
        result = classify(build("uv"))
        assert result.kind is SplittingKind.DISCONNECTED
        assert result.components == (frozenset("u"), frozenset("v"))

    def test_triangle_is_complete(self):
        assert classify(K3) == SplittingClass(SplittingKind.COMPLETE, rank=3)

    def test_cycle_has_no_abelian_splitting(self):
        result = classify(C5)
        assert result.kind is SplittingKind.NO_ABELIAN_SPLITTING
        assert not result.splits

    def test_path_splits_over_middle_vertex(self):
        result = classify(P3)
        assert result.kind is SplittingKind.SEPARATING_CLIQUE
        assert result.clique == frozenset("b")
        assert result.components == (frozenset("a"), frozenset("c"))
        assert result.describe() == ["SeparatingClique {b}", "components: {a} {c}"]

    def test_single_vertex_is_degenerate(self):
        result = classify(build("a"))
        assert result.degenerate
        assert result.describe()[0] == "Complete 1"

    def test_empty_graph(self):
        with pytest.raises(GraphInputError, match="trivial group"):
            classify(build(""))

    def test_disconnected_wins_over_complete_pieces(self):
        assert classify(build("abcd", "ab cd")).kind is SplittingKind.DISCONNECTED


class TestCliqueAmalgam:
    def test_path(self):
        gog = clique_amalgam(P3, {"b"})
        assert gog.nodes == ((0, frozenset("ab")), (1, frozenset("bc")))
        assert gog.edges == ((0, 1, frozenset("b")),)

    def test_claw_gives_a_star(self):
        gog = clique_amalgam(CLAW, {"c"})
        assert gog.nodes == (
            (0, frozenset("c")), (1, frozenset("cx")), (2, frozenset("cy")), (3, frozenset("cz")),
        )
        assert gog.edges == tuple((0, i, frozenset("c")) for i in (1, 2, 3))

    def test_two_triangles(self):
        gog = clique_amalgam(TWO_TRIANGLES, {"a", "b"})
        assert gog.nodes == ((0, frozenset("abc")), (1, frozenset("abd")))
        assert gog.adhesions() == [frozenset("ab")]

    def test_not_a_clique(self):
        with pytest.raises(PreconditionError, match="not a clique"):
            clique_amalgam(P3, {"a", "c"})

    def test_not_separating(self):
        with pytest.raises(PreconditionError, match="does not separate"):
            clique_amalgam(P3, {"a"})

    def test_star_splitting_keeps_the_centre_for_two_components(self):
        gog = star_splitting(P3, {"b"})
        assert [bag for _, bag in gog.nodes] == [frozenset("ab"), frozenset("b"), frozenset("bc")]
        assert verify_reassembly(P3, gog).ok


class TestStarElimination:
    def test_edge(self):
        gog = star_elimination(build("uv", "uv"), "v", {"v"})
        assert gog.nodes == ((0, frozenset("u")), (1, frozenset("uv")))
        assert gog.edges == ((0, 1, frozenset("u")),)

    def test_triangle(self):
        g = build("uwv", "uw uv wv")
        gog = star_elimination(g, "v", {"v"})
        assert gog.nodes == ((0, frozenset("uvw")), (1, frozenset("uw")))
        assert gog.edges == ((0, 1, frozenset("uw")),)
        assert verify_reassembly(g, gog).ok

    def test_star_not_a_clique(self):
        with pytest.raises(PreconditionError, match="not a clique"):
            star_elimination(P3, "b", {"b"})

    def test_vertex_must_be_hyperbolic(self):
        with pytest.raises(PreconditionError, match="must contain"):
            star_elimination(K3, "a", {"b"})

    def test_hyperbolic_vertices_share_the_star(self):
        # u also sees the pendant x, so it cannot be hyperbolic alongside v
        g = build("uwvx", "uw uv wv ux")
        with pytest.raises(PreconditionError, match="differs"):
            star_elimination(g, "v", {"v", "u"})

    def test_cannot_remove_everything(self):
        with pytest.raises(PreconditionError, match="empty"):
            star_elimination(build("a"), "a", {"a"})

    def test_unknown_vertex(self):
        with pytest.raises(GraphInputError):
            star_elimination(K3, "q", {"q"})

    @given(simplicial_graphs(min_vertices=2, connected=True))
    def test_every_simplicial_vertex_reassembles(self, g):
        for v in g.vertices:
            if is_clique(g, star(g, v)):
                assert verify_reassembly(g, star_elimination(g, v, {v})).ok


class TestFreeSplitting:
    def test_path_of_components(self):
        g = build("abc", "bc")
        gog = free_splitting(g)
        assert gog.nodes == ((0, frozenset("a")), (1, frozenset("bc")))
        assert gog.edges == ((0, 1, frozenset()),)
        assert verify_reassembly(g, gog).ok

    def test_connected_rejected(self):
        with pytest.raises(PreconditionError):
            free_splitting(P3)


class TestCyclicSplitting:
    def test_path(self):
        assert cyclic_splitting_vertex(P3) == "b"

    def test_cycle(self):
        assert cyclic_splitting_vertex(C5) is None

    def test_single_edge_excluded(self):
        with pytest.raises(PreconditionError):
            cyclic_splitting_vertex(build("ab", "ab"))


@given(simplicial_graphs(max_vertices=8))
def test_classify_matches_the_oracle(g):
    assert classify(g) == oracle_classify(g)


@given(simplicial_graphs(min_vertices=3, max_vertices=8, connected=True))
def test_witness_clique_amalgam_reassembles(g):
    result = classify(g)
    if result.kind is SplittingKind.SEPARATING_CLIQUE:
        assert verify_reassembly(g, clique_amalgam(g, result.clique)).ok
