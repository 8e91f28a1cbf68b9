# graph_of_groups.py
"""
Trees of groups encoded combinatorially: each node carries a bag (a vertex set of
the host graph, standing for the vertex group A(bag)) and each edge carries an
adhesion (a clique, standing for the free abelian edge group A(adhesion)).
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Tuple

import networkx as nx

from graph_core import SimplicialGraph, VertexSet, canonical_key, format_vertex_set

logger = logging.getLogger(__name__)

Node = Tuple[int, VertexSet]
Edge = Tuple[int, int, VertexSet]


@dataclass(frozen=True)
class GraphOfGroups:
    host: SimplicialGraph
    nodes: Tuple[Node, ...]
    edges: Tuple[Edge, ...]

    @classmethod
    def build(cls, host: SimplicialGraph, nodes: Iterable[Tuple[int, Iterable[str]]],
              edges: Iterable[Tuple[int, int, Iterable[str]]]) -> "GraphOfGroups":
        """Normalise ids, bag and adhesion types and the edge order."""
        node_list = tuple(sorted(((int(i), frozenset(bag)) for i, bag in nodes), key=lambda n: n[0]))
        edge_list = []
        for u, w, adhesion in edges:
            u, w = sorted((int(u), int(w)))
            edge_list.append((u, w, frozenset(adhesion)))
        edge_list.sort(key=lambda e: (e[0], e[1], canonical_key(e[2])))
        return cls(host, node_list, tuple(edge_list))

    @classmethod
    def from_tree(cls, host: SimplicialGraph, tree: nx.Graph) -> "GraphOfGroups":
        """Read a networkx tree with 'bag' node data and 'adhesion' edge data."""
        return cls.build(
            host,
            tree.nodes(data="bag"),
            ((u, w, adhesion) for u, w, adhesion in tree.edges(data="adhesion")),
        )

    @classmethod
    def single_node(cls, host: SimplicialGraph, bag: Iterable[str]) -> "GraphOfGroups":
        return cls.build(host, [(0, bag)], [])

    @cached_property
    def bags(self) -> Dict[int, VertexSet]:
        return dict(self.nodes)

    def to_tree(self) -> nx.Graph:
        tree = nx.Graph()
        for node_id, bag in self.nodes:
            tree.add_node(node_id, bag=bag)
        for u, w, adhesion in self.edges:
            tree.add_edge(u, w, adhesion=adhesion)
        return tree

    def adhesions(self) -> List[VertexSet]:
        return [adhesion for _, _, adhesion in self.edges]

    def canonical(self) -> "GraphOfGroups":
        return self.relabel(self.canonical_ids())

    def relabel(self, mapping: Dict[int, int]) -> "GraphOfGroups":
        return GraphOfGroups.build(
            self.host,
            ((mapping[i], bag) for i, bag in self.nodes),
            ((mapping[u], mapping[w], adhesion) for u, w, adhesion in self.edges),
        )

    def canonical_ids(self) -> Dict[int, int]:
        """
        Map node ids to 0..n-1 in depth-first preorder, starting from the
        lexicographically least bag and visiting neighbours in bag order.
        """
        tree = self.to_tree()

        def order(node_id: int) -> Tuple:
            return (canonical_key(self.bags[node_id]), node_id)

        relabel: Dict[int, int] = {}
        for root in sorted(tree.nodes, key=order):
            if root in relabel:
                continue
            stack = [root]
            while stack:
                node_id = stack.pop()
                if node_id in relabel:
                    continue
                relabel[node_id] = len(relabel)
                unseen = [n for n in tree.neighbors(node_id) if n not in relabel]
                # Reverse so the least neighbour is popped first.
                stack.extend(sorted(unseen, key=order, reverse=True))
        return relabel

    def describe(self) -> List[str]:
        lines = [f"node {i}: {format_vertex_set(bag)}" for i, bag in self.nodes]
        lines += [f"edge {u}-{w}: {format_vertex_set(adhesion)}" for u, w, adhesion in self.edges]
        return lines
