# splitting.py
"""
Classification of abelian splittings of A(Γ) from the defining graph, and the
explicit one-step splittings: the amalgam over a separating clique, the free
splitting of a disconnected graph and the star-elimination splitting.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from graph_core import (
    GraphInputError, PreconditionError, SimplicialGraph, VertexSet, components,
    format_vertex_set, is_clique, is_complete, is_connected, remove_vertices, star,
)
from graph_of_groups import GraphOfGroups
from separators import cut_vertices, is_separating, min_separating_cliques

logger = logging.getLogger(__name__)


class SplittingKind(Enum):
    DISCONNECTED = "Disconnected"
    COMPLETE = "Complete"
    SEPARATING_CLIQUE = "SeparatingClique"
    NO_ABELIAN_SPLITTING = "NoAbelianSplitting"


@dataclass(frozen=True)
class SplittingClass:
    """
    Outcome of the classification with its witness:
      - Disconnected: components of the graph
      - Complete: rank n = |V|
      - SeparatingClique: the clique and the components of the graph minus it
      - NoAbelianSplitting: nothing
    """
    kind: SplittingKind
    components: Tuple[VertexSet, ...] = ()
    rank: Optional[int] = None
    clique: Optional[VertexSet] = None

    @property
    def splits(self) -> bool:
        return self.kind is not SplittingKind.NO_ABELIAN_SPLITTING

    @property
    def degenerate(self) -> bool:
        """A single vertex: Z splits over the trivial group as an HNN extension."""
        return self.kind is SplittingKind.COMPLETE and self.rank == 1

    def describe(self) -> List[str]:
        if self.kind is SplittingKind.SEPARATING_CLIQUE:
            lines = [f"{self.kind.value} {format_vertex_set(self.clique)}"]
        elif self.kind is SplittingKind.COMPLETE:
            lines = [f"{self.kind.value} {self.rank}"]
        else:
            lines = [self.kind.value]
        if self.components:
            lines.append("components: " + " ".join(format_vertex_set(c) for c in self.components))
        if self.degenerate:
            lines.append("note: degenerate case, Z splits over the trivial group")
        return lines


def classify(g: SimplicialGraph) -> SplittingClass:
    """Disconnected > Complete > SeparatingClique, else NoAbelianSplitting."""
    if len(g) == 0:
        raise GraphInputError("empty graph: trivial group, splitting undefined")

    parts = components(g)
    if len(parts) >= 2:
        return SplittingClass(SplittingKind.DISCONNECTED, components=tuple(parts))
    if is_complete(g):
        if len(g) == 1:
            logger.info("⚠️ Single-vertex graph classified as the degenerate complete case")
        return SplittingClass(SplittingKind.COMPLETE, rank=len(g))

    k, cliques = min_separating_cliques(g)
    if not cliques:
        return SplittingClass(SplittingKind.NO_ABELIAN_SPLITTING)
    # cliques come sorted, the first is the lexicographically least of size k
    witness = cliques[0]
    logger.info(f"✅ Separating clique {format_vertex_set(witness)} of minimal size {k}")
    return SplittingClass(
        SplittingKind.SEPARATING_CLIQUE,
        components=tuple(components(remove_vertices(g, witness))),
        clique=witness,
    )


def _clique_components(g: SimplicialGraph, clique: Iterable[str]) -> Tuple[VertexSet, List[VertexSet]]:
    k = g.check_members(clique)
    if not is_connected(g):
        raise PreconditionError("splitting over a clique requires a connected graph")
    if not is_clique(g, k):
        raise PreconditionError(f"{format_vertex_set(k)} is not a clique")
    if not is_separating(g, k):
        raise PreconditionError(f"{format_vertex_set(k)} does not separate the graph")
    return k, components(remove_vertices(g, k))


def star_splitting(g: SimplicialGraph, clique: Iterable[str]) -> GraphOfGroups:
    """Central node K with one leaf K ∪ C for every component C of g minus K."""
    k, parts = _clique_components(g, clique)
    nodes = [(0, k)] + [(i, part | k) for i, part in enumerate(parts, start=1)]
    edges = [(0, i, k) for i in range(1, len(parts) + 1)]
    return GraphOfGroups.build(g, nodes, edges).canonical()


def clique_amalgam(g: SimplicialGraph, clique: Iterable[str]) -> GraphOfGroups:
    """
    The amalgam of the A(C ∪ K) over A(K). With exactly two components the
    reducible two-edge star is returned as the one-edge splitting.
    """
    k, parts = _clique_components(g, clique)
    if len(parts) == 2:
        return GraphOfGroups.build(g, [(0, parts[0] | k), (1, parts[1] | k)], [(0, 1, k)]).canonical()
    return star_splitting(g, k)


def free_splitting(g: SimplicialGraph) -> GraphOfGroups:
    """Free product of the component groups: a path of components over trivial edge groups."""
    parts = components(g)
    if len(parts) < 2:
        raise PreconditionError("free splitting requires a disconnected graph")
    nodes = list(enumerate(parts))
    edges = [(i, i + 1, frozenset()) for i in range(len(parts) - 1)]
    return GraphOfGroups.build(g, nodes, edges).canonical()


def star_elimination(g: SimplicialGraph, v: str, star_h: Iterable[str]) -> GraphOfGroups:
    """
    A(Γ) = A(Γ') *_{A(star_e(v))} A(star(v)) with Γ' = Γ minus star_h and
    star_e(v) = star(v) minus star_h.
    """
    if v not in g:
        raise GraphInputError(f"unknown vertex {v}")
    hyperbolic = g.check_members(star_h)
    v_star = star(g, v)
    if not is_clique(g, v_star):
        raise PreconditionError(
            f"star({v}) = {format_vertex_set(v_star)} is not a clique, so {v} cannot act hyperbolically"
        )
    if v not in hyperbolic:
        raise PreconditionError(f"star_h must contain {v}")
    if not hyperbolic <= v_star:
        raise PreconditionError(f"star_h {format_vertex_set(hyperbolic)} is not inside star({v})")
    for h in sorted(hyperbolic):
        if star(g, h) != v_star:
            raise PreconditionError(f"star({h}) differs from star({v}); {h} cannot be hyperbolic alongside {v}")
    rest = g.vertex_set - hyperbolic
    if not rest:
        raise PreconditionError("removing star_h leaves an empty graph")

    elliptic = v_star - hyperbolic
    logger.info(f"✅ Star elimination at {v}: edge group {format_vertex_set(elliptic)}")
    return GraphOfGroups.build(g, [(0, rest), (1, v_star)], [(0, 1, elliptic)]).canonical()


def cyclic_splitting_vertex(g: SimplicialGraph) -> Optional[str]:
    """
    For connected g that is not a single edge, A(g) splits over a cyclic group
    iff g has a cut vertex; returns the least one, or None.
    """
    if not is_connected(g):
        raise PreconditionError("cyclic splitting criterion requires a connected graph")
    if len(g) == 2 and len(g.edges) == 1:
        raise PreconditionError("cyclic splitting criterion excludes the single edge")
    cuts = cut_vertices(g)
    return cuts[0] if cuts else None
