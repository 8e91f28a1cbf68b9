# graph_core.py
"""
Finite simplicial graphs and the primitive queries used by every other module.

A graph is immutable once built. Vertex labels are opaque, case-sensitive
strings; the declaration order of the vertices is kept for deterministic output,
while every set-valued result is ordered by its sorted labels.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[str]


class GraphInputError(ValueError):
    """Raised for malformed graphs or references to unknown vertices."""


class PreconditionError(ValueError):
    """Raised when an operation is called outside its precondition."""


def canonical_key(s: Iterable[str]) -> Tuple[str, ...]:
    """Sort key for vertex sets: the tuple of sorted labels."""
    return tuple(sorted(s))


def format_vertex_set(s: Iterable[str]) -> str:
    """Render a vertex set as {a,b,c}."""
    return "{" + ",".join(sorted(s)) + "}"


def sort_vertex_sets(sets: Iterable[Iterable[str]]) -> List[VertexSet]:
    return sorted((frozenset(s) for s in sets), key=canonical_key)


@dataclass(frozen=True)
class SimplicialGraph:
    """The defining graph: declared vertices and undirected simple edges."""
    vertices: Tuple[str, ...]
    edges: FrozenSet[FrozenSet[str]]

    def __post_init__(self):
        duplicates = sorted(v for v, count in Counter(self.vertices).items() if count > 1)
        if duplicates:
            raise GraphInputError(f"duplicate vertex labels: {duplicates}")
        declared = set(self.vertices)
        for edge in self.edges:
            if len(edge) != 2:
                raise GraphInputError(f"loop edge on {format_vertex_set(edge)}")
            unknown = edge - declared
            if unknown:
                raise GraphInputError(f"edge {format_vertex_set(edge)} uses undeclared vertex {sorted(unknown)[0]}")

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[Tuple[str, str]] = ()) -> "SimplicialGraph":
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    @cached_property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    @cached_property
    def position(self) -> Dict[str, int]:
        """Declaration index of every vertex."""
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> Dict[str, VertexSet]:
        neighbours: Dict[str, set] = {v: set() for v in self.vertices}
        for edge in self.edges:
            u, w = tuple(edge)
            neighbours[u].add(w)
            neighbours[w].add(u)
        return {v: frozenset(n) for v, n in neighbours.items()}

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Read-only networkx view, nodes added in declaration order."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(tuple(e) for e in self.edges)
        return nx.freeze(graph)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertex_set

    def adjacent(self, u: str, w: str) -> bool:
        return w in self.adjacency[u]

    def ordered_edges(self) -> List[Tuple[str, str]]:
        """Edges as pairs in declaration order, sorted by endpoint positions."""
        pairs = [tuple(sorted(e, key=self.position.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (self.position[p[0]], self.position[p[1]]))

    def check_members(self, s: Iterable[str]) -> VertexSet:
        """Return s as a VertexSet, raising GraphInputError on unknown labels."""
        members = frozenset(s)
        unknown = members - self.vertex_set
        if unknown:
            raise GraphInputError(f"unknown vertex {sorted(unknown)[0]}")
        return members


def induced_subgraph(g: SimplicialGraph, s: Iterable[str]) -> SimplicialGraph:
    """Subgraph on s with every edge of g whose endpoints both lie in s."""
    members = g.check_members(s)
    vertices = tuple(v for v in g.vertices if v in members)
    edges = frozenset(e for e in g.edges if e <= members)
    return SimplicialGraph(vertices, edges)


def remove_vertices(g: SimplicialGraph, s: Iterable[str]) -> SimplicialGraph:
    removed = g.check_members(s)
    return induced_subgraph(g, g.vertex_set - removed)


def components(g: SimplicialGraph) -> List[VertexSet]:
    """Connected components, ordered by sorted labels. The empty graph has none."""
    return sort_vertex_sets(nx.connected_components(g.nx_graph))


def is_connected(g: SimplicialGraph) -> bool:
    # The empty graph counts as disconnected: it has 0 components, not 1.
    return len(g) > 0 and nx.is_connected(g.nx_graph)


def is_complete(g: SimplicialGraph) -> bool:
    n = len(g)
    return len(g.edges) == n * (n - 1) // 2


def is_clique(g: SimplicialGraph, s: Iterable[str]) -> bool:
    members = g.check_members(s)
    return all(g.adjacent(u, w) for u, w in combinations(members, 2))


def link(g: SimplicialGraph, v: str) -> VertexSet:
    if v not in g:
        raise GraphInputError(f"unknown vertex {v}")
    return g.adjacency[v]


def star(g: SimplicialGraph, v: str) -> VertexSet:
    return link(g, v) | {v}


def join_factors(g: SimplicialGraph) -> List[VertexSet]:
    """
    Join decomposition of g: the vertex sets of the components of the complement.
    More than one factor means A(g) is a nontrivial direct product.
    """
    if len(g) == 0:
        return []
    return sort_vertex_sets(nx.connected_components(nx.complement(g.nx_graph)))
