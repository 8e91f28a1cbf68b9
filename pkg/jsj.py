# jsj.py
"""
Vertex-elliptic abelian JSJ decomposition of A(Γ).

Construction: take every separating clique of minimal size k, refine their star
splittings into one tree, recurse into each non-separator bag (its own minimal
separating cliques are strictly larger than k), graft the sub-trees back in,
and finally contract one edge at every reducible valence-two node.
"""
import logging
from dataclasses import dataclass
from itertools import count
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from graph_core import (
    GraphInputError, PreconditionError, SimplicialGraph, VertexSet, canonical_key, components,
    format_vertex_set, induced_subgraph, is_clique, is_complete, is_connected, remove_vertices,
)
from graph_of_groups import GraphOfGroups
from separators import enumerate_separating_cliques, is_separating
from splitting import star_splitting

logger = logging.getLogger(__name__)

NO_SEPARATING_CLIQUE = "no separating clique"
CLIQUE = "clique"


class DecompositionError(RuntimeError):
    """An invariant of the construction failed; the tree would be wrong."""


@dataclass(frozen=True)
class TraceLevel:
    """One recursion step that split: the subgraph, its k and the cliques used."""
    depth: int
    subgraph: VertexSet
    k: int
    cliques: Tuple[VertexSet, ...]


@dataclass(frozen=True)
class JSJDecomposition:
    gog: GraphOfGroups
    leaf_certificates: Tuple[Tuple[int, str], ...]
    trace: Tuple[TraceLevel, ...]
    contracted: bool = True

    @property
    def is_trivial(self) -> bool:
        return len(self.gog.nodes) == 1

    def certificate(self, node_id: int) -> str:
        return dict(self.leaf_certificates)[node_id]


@dataclass(frozen=True)
class ReassemblyVerdict:
    violations: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def describe(self) -> List[str]:
        if self.ok:
            return ["ok"]
        return [f"violation: {v}" for v in self.violations]


# --- Refinement ---

def _split_node(tree: nx.Graph, node: int, clique: VertexSet, side: Dict[str, int],
                parts: Sequence[int], ids: Iterator[int]) -> None:
    """Replace node by a star: centre = clique, one leaf per component it meets."""
    bag = tree.nodes[node]["bag"]
    neighbours = [(n, tree.edges[node, n]["adhesion"]) for n in tree.neighbors(node)]
    tree.remove_node(node)

    centre = next(ids)
    tree.add_node(centre, bag=clique)
    leaf_of: Dict[int, int] = {}
    for part in parts:
        leaf = next(ids)
        tree.add_node(leaf, bag=frozenset(v for v in bag if v in clique or side.get(v) == part))
        tree.add_edge(centre, leaf, adhesion=clique)
        leaf_of[part] = leaf

    # An adhesion is a clique, so whatever lies outside the new centre sits in one component.
    for n, adhesion in neighbours:
        outside = adhesion - clique
        target = leaf_of[side[next(iter(outside))]] if outside else centre
        tree.add_edge(target, n, adhesion=adhesion)


def _refine_tree(g: SimplicialGraph, cliques: Sequence[VertexSet], ids: Iterator[int]) -> nx.Graph:
    tree = nx.Graph()
    tree.add_node(next(ids), bag=g.vertex_set)
    for clique in cliques:
        side = {v: i for i, part in enumerate(components(remove_vertices(g, clique))) for v in part}
        split = False
        for node in sorted(tree.nodes):
            bag = tree.nodes[node]["bag"]
            if not clique <= bag:
                continue
            parts = sorted({side[v] for v in bag - clique})
            if len(parts) < 2:
                continue
            _split_node(tree, node, clique, side, parts, ids)
            split = True
            break
        if not split:
            raise PreconditionError(f"clique {format_vertex_set(clique)} does not split any bag of the refinement")
    return tree


def refine(g: SimplicialGraph, splittings: Sequence[GraphOfGroups]) -> GraphOfGroups:
    """Common refinement of star splittings of g over distinct minimal-size separating cliques."""
    if not splittings:
        raise PreconditionError("refine needs at least one splitting")
    cliques: List[VertexSet] = []
    for splitting in splittings:
        if splitting.host != g:
            raise PreconditionError("splittings are not over the same host graph")
        adhesions = set(splitting.adhesions())
        if len(adhesions) != 1:
            raise PreconditionError("each splitting must be a star splitting over a single clique")
        clique = adhesions.pop()
        if not is_clique(g, clique) or not is_separating(g, clique):
            raise PreconditionError(f"adhesion {format_vertex_set(clique)} is not a separating clique")
        cliques.append(clique)
    if len(set(cliques)) != len(cliques):
        raise PreconditionError("splitting cliques must be pairwise distinct")
    k = enumerate_separating_cliques(g, minimal_only=True).minimal_size
    for clique in cliques:
        if len(clique) != k:
            raise PreconditionError(
                f"clique {format_vertex_set(clique)} has size {len(clique)}, minimal separator size is {k}"
            )

    if len(splittings) == 1:
        # a single splitting is its own refinement
        return splittings[0].canonical()
    tree = _refine_tree(g, sorted(cliques, key=canonical_key), count())
    return GraphOfGroups.from_tree(g, tree).canonical()


# --- Recursion ---

def _decompose(host: SimplicialGraph, bag: VertexSet, depth: int, parent_k: Optional[int],
               trace: List[TraceLevel], ids: Iterator[int]) -> nx.Graph:
    h = induced_subgraph(host, bag)
    if not is_connected(h):
        raise DecompositionError(f"bag {format_vertex_set(bag)} is not connected")

    report = None if is_complete(h) else enumerate_separating_cliques(h, minimal_only=True)
    if report is None or report.is_empty:
        leaf = nx.Graph()
        leaf.add_node(next(ids), bag=bag, reason=NO_SEPARATING_CLIQUE)
        return leaf

    k, cliques = report.minimal_size, report.minimal()
    if parent_k is not None and k <= parent_k:
        raise DecompositionError(
            f"minimal separator size did not increase: {k} after {parent_k} in {format_vertex_set(bag)}"
        )
    trace.append(TraceLevel(depth, bag, k, cliques))
    logger.info(f"➡️ Depth {depth}: {len(cliques)} separating cliques of size {k} in {format_vertex_set(bag)}")

    try:
        refined = refine(h, [star_splitting(h, clique) for clique in cliques])
    except PreconditionError as e:
        raise DecompositionError(f"refinement of {format_vertex_set(bag)} failed: {e}") from e

    result = nx.Graph()
    placed: Dict[int, nx.Graph] = {}
    for node_id, node_bag in refined.nodes:
        if node_bag in cliques:
            sub = nx.Graph()
            sub.add_node(next(ids), bag=node_bag, reason=CLIQUE)
        else:
            sub = _decompose(host, node_bag, depth + 1, k, trace, ids)
        placed[node_id] = sub
        result.update(sub)

    def attach(node_id: int, adhesion: VertexSet) -> int:
        sub = placed[node_id]
        # Helly property of tree decompositions: some bag holds the whole clique.
        return min(n for n, b in sub.nodes(data="bag") if adhesion <= b)

    for u, w, adhesion in refined.edges:
        result.add_edge(attach(u, adhesion), attach(w, adhesion), adhesion=adhesion)
    return result


def _contract_tree(tree: nx.Graph) -> nx.Graph:
    tree = tree.copy()
    changed = True
    while changed:
        changed = False
        for node in sorted(tree.nodes):
            if tree.degree(node) != 2:
                continue
            bag = tree.nodes[node]["bag"]
            keep, other = sorted(tree.neighbors(node))
            if all(tree.edges[node, n]["adhesion"] == bag for n in (keep, other)):
                # node's bag is contained in both neighbours
                tree.remove_node(node)
                tree.add_edge(keep, other, adhesion=bag)
                changed = True
                break
    return tree


def contract_reducible(gog: GraphOfGroups) -> GraphOfGroups:
    """Remove every valence-two node whose bag equals both incident adhesions."""
    return GraphOfGroups.from_tree(gog.host, _contract_tree(gog.to_tree())).canonical()


def build_jsj(g: SimplicialGraph, contract: bool = True) -> JSJDecomposition:
    if len(g) == 0:
        raise GraphInputError("empty graph: trivial group, no decomposition")
    if not is_connected(g):
        raise PreconditionError(
            "graph is disconnected; split it into free factors first (components command)"
        )

    trace: List[TraceLevel] = []
    tree = _decompose(g, g.vertex_set, 0, None, trace, count())
    if contract:
        tree = _contract_tree(tree)

    gog = GraphOfGroups.from_tree(g, tree)
    relabel = gog.canonical_ids()
    certificates = tuple(sorted((relabel[n], reason) for n, reason in tree.nodes(data="reason")))
    decomposition = JSJDecomposition(gog.relabel(relabel), certificates, tuple(trace), contract)
    if decomposition.is_trivial:
        logger.info("✅ JSJ decomposition is trivial: no separating clique")
    else:
        logger.info(f"✅ JSJ decomposition with {len(gog.nodes)} vertex groups over {len(trace)} levels")
    return decomposition


# --- Verification ---

def verify_reassembly(g: SimplicialGraph, gog: GraphOfGroups) -> ReassemblyVerdict:
    """
    Check the tree-of-groups invariants. When all hold, amalgamating the A(bag)
    along the A(adhesion) presents A(g).
    """
    problems: List[str] = []
    if set(gog.host.vertices) != g.vertex_set or gog.host.edges != g.edges:
        problems.append("decomposition host does not match the graph")

    ids = [node_id for node_id, _ in gog.nodes]
    if not ids:
        problems.append("decomposition has no nodes")
    for node_id in sorted({i for i in ids if ids.count(i) > 1}):
        problems.append(f"duplicate node id {node_id}")
    bags = gog.bags
    for node_id, bag in gog.nodes:
        for v in sorted(bag - g.vertex_set):
            problems.append(f"node {node_id} bag has unknown vertex {v}")

    tree = nx.Graph()
    tree.add_nodes_from(bags)
    for u, w, adhesion in gog.edges:
        if u not in bags or w not in bags:
            problems.append(f"edge {u}-{w} references an unknown node")
            continue
        if u == w:
            problems.append(f"edge {u}-{w} is a loop")
            continue
        tree.add_edge(u, w)
        label = format_vertex_set(adhesion)
        unknown = adhesion - g.vertex_set
        if unknown:
            problems.append(f"adhesion {label} of edge {u}-{w} has unknown vertex {sorted(unknown)[0]}")
        elif not is_clique(g, adhesion):
            problems.append(f"adhesion {label} of edge {u}-{w} is not a clique")
        if not (adhesion <= bags[u] and adhesion <= bags[w]):
            problems.append(f"adhesion {label} of edge {u}-{w} is not contained in both bags")
        elif adhesion != bags[u] & bags[w]:
            problems.append(
                f"adhesion {label} of edge {u}-{w} differs from the bag intersection "
                f"{format_vertex_set(bags[u] & bags[w])}"
            )

    if bags:
        if not nx.is_connected(tree):
            problems.append("decomposition is not connected")
        if len(gog.edges) != len(bags) - 1:
            problems.append(f"decomposition has {len(gog.edges)} edges for {len(bags)} nodes, not a tree")

    for v in g.vertices:
        if not any(v in bag for bag in bags.values()):
            problems.append(f"vertex {v} uncovered")
    for u, w in g.ordered_edges():
        if not any(u in bag and w in bag for bag in bags.values()):
            problems.append(f"edge {u}–{w} uncovered")
    for v in g.vertices:
        holders = sorted(i for i, bag in bags.items() if v in bag)
        if len(holders) > 1 and not nx.is_connected(tree.subgraph(holders)):
            problems.append(f"vertex {v}: nodes {holders} do not form a subtree")

    return ReassemblyVerdict(tuple(problems))
