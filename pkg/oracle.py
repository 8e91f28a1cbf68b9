# oracle.py
"""
Brute-force reference implementations and graph generators.

Nothing here reuses the production separator search or classifier: the oracle
scans every vertex subset, checks cliques pair by pair and counts components
with its own breadth-first search. Only the result types are shared.
"""
import logging
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Sequence, Set, Tuple

import networkx as nx

import config
from graph_core import GraphInputError, PreconditionError, SimplicialGraph, VertexSet, canonical_key
from separators import SeparatorReport
from splitting import SplittingClass, SplittingKind

logger = logging.getLogger(__name__)

ATLAS_MAX_VERTICES = 7


class OracleSizeError(PreconditionError):
    """The graph is too large for exhaustive subset enumeration."""


def _guard(g: SimplicialGraph) -> None:
    if len(g) > config.ORACLE_MAX_VERTICES:
        raise OracleSizeError(f"oracle limited to {config.ORACLE_MAX_VERTICES} vertices, got {len(g)}")


def _adjacency(g: SimplicialGraph) -> Dict[str, Set[str]]:
    adj: Dict[str, Set[str]] = {v: set() for v in g.vertices}
    for edge in g.edges:
        u, w = tuple(edge)
        adj[u].add(w)
        adj[w].add(u)
    return adj


def _components(vertices: Iterable[str], adj: Dict[str, Set[str]]) -> List[VertexSet]:
    remaining = set(vertices)
    found = []
    while remaining:
        start = remaining.pop()
        part = {start}
        queue = deque([start])
        while queue:
            for w in adj[queue.popleft()]:
                if w in remaining:
                    remaining.discard(w)
                    part.add(w)
                    queue.append(w)
        found.append(frozenset(part))
    return sorted(found, key=canonical_key)


def oracle_separating_cliques(g: SimplicialGraph) -> SeparatorReport:
    """Every subset that is a clique and whose removal adds components, by literal scan."""
    _guard(g)
    adj = _adjacency(g)
    everything = set(g.vertices)
    base = len(_components(everything, adj))
    found = []
    for size in range(len(g.vertices) + 1):
        for subset in combinations(g.vertices, size):
            if not all(w in adj[u] for u, w in combinations(subset, 2)):
                continue
            rest = everything.difference(subset)
            if rest and len(_components(rest, adj)) > base:
                found.append(frozenset(subset))
    return SeparatorReport.from_cliques(found, connected=base <= 1)


def oracle_classify(g: SimplicialGraph) -> SplittingClass:
    _guard(g)
    if not g.vertices:
        raise GraphInputError("empty graph: trivial group, splitting undefined")
    adj = _adjacency(g)
    parts = _components(g.vertices, adj)
    if len(parts) >= 2:
        return SplittingClass(SplittingKind.DISCONNECTED, components=tuple(parts))
    if all(w in adj[u] for u, w in combinations(g.vertices, 2)):
        return SplittingClass(SplittingKind.COMPLETE, rank=len(g.vertices))
    report = oracle_separating_cliques(g)
    if report.minimal_size is None:
        return SplittingClass(SplittingKind.NO_ABELIAN_SPLITTING)
    clique = report.minimal()[0]
    rest = [v for v in g.vertices if v not in clique]
    return SplittingClass(SplittingKind.SEPARATING_CLIQUE, components=tuple(_components(rest, adj)), clique=clique)


# --- Generators ---

def _relabelled(graph: nx.Graph) -> SimplicialGraph:
    order = sorted(graph.nodes)
    label = {n: f"v{i}" for i, n in enumerate(order)}
    return SimplicialGraph.from_edges([label[n] for n in order], [(label[u], label[w]) for u, w in graph.edges])


def _as_list(value) -> List:
    if isinstance(value, str):
        return [item for item in value.split(",") if item.strip()]
    if isinstance(value, (int, float)):
        return [value]
    return list(value)


def _path(params: Dict, seed: int) -> List[SimplicialGraph]:
    return [_relabelled(nx.path_graph(int(params["n"])))]


def _cycle(params: Dict, seed: int) -> List[SimplicialGraph]:
    n = int(params["n"])
    if n < 3:
        raise PreconditionError("cycle needs n >= 3")
    return [_relabelled(nx.cycle_graph(n))]


def _complete(params: Dict, seed: int) -> List[SimplicialGraph]:
    return [_relabelled(nx.complete_graph(int(params["n"])))]


def _star(params: Dict, seed: int) -> List[SimplicialGraph]:
    # n leaves around one centre
    return [_relabelled(nx.star_graph(int(params["n"])))]


def _tree(params: Dict, seed: int) -> List[SimplicialGraph]:
    n, total = int(params["n"]), int(params.get("count", 1))
    if n < 2:
        raise PreconditionError("tree needs n >= 2")
    trees = []
    for index in range(total):
        rng = random.Random(seed + index)
        trees.append(_relabelled(nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])))
    return trees


def _clique_sum(params: Dict, seed: int) -> List[SimplicialGraph]:
    """Complete graphs of the given sizes glued along one common clique."""
    sizes = [int(s) for s in _as_list(params["sizes"])]
    shared = int(params["shared"])
    if any(size <= shared for size in sizes):
        raise PreconditionError("every clique must be larger than the shared clique")
    graph = nx.complete_graph(shared)
    next_node = shared
    for size in sizes:
        members = list(range(shared)) + list(range(next_node, next_node + size - shared))
        next_node += size - shared
        graph.add_edges_from(combinations(members, 2))
        graph.add_nodes_from(members)
    return [_relabelled(graph)]


def _gnp(params: Dict, seed: int) -> List[SimplicialGraph]:
    n, p, total = int(params["n"]), float(params["p"]), int(params.get("count", 1))
    # sample i is drawn with seed + i
    return [_relabelled(nx.gnp_random_graph(n, p, seed=seed + index)) for index in range(total)]


def _atlas(params: Dict, seed: int) -> List[SimplicialGraph]:
    """All connected graphs up to isomorphism, from the networkx graph atlas."""
    max_n = int(params.get("max_n", config.EXHAUSTIVE_MAX_VERTICES))
    if max_n > ATLAS_MAX_VERTICES:
        raise PreconditionError(f"the graph atlas stops at {ATLAS_MAX_VERTICES} vertices")
    return [_relabelled(graph) for graph in nx.graph_atlas_g()
            if 0 < len(graph) <= max_n and nx.is_connected(graph)]


def _acceptance_gnp(params: Dict, seed: int) -> List[SimplicialGraph]:
    total = int(params.get("count", config.GNP_SAMPLES))
    max_n = int(params.get("max_n", config.GNP_MAX_VERTICES))
    probabilities: Sequence[float] = [float(p) for p in _as_list(params.get("probabilities") or config.GNP_PROBABILITIES)]
    samples = []
    for index in range(total):
        p = probabilities[index % len(probabilities)]
        n = 1 + (index // len(probabilities)) % max_n
        samples.append(_relabelled(nx.gnp_random_graph(n, p, seed=seed + index)))
    return samples


FAMILIES: Dict[str, Callable[[Dict, int], List[SimplicialGraph]]] = {
    "path": _path,
    "cycle": _cycle,
    "complete": _complete,
    "star": _star,
    "tree": _tree,
    "clique_sum": _clique_sum,
    "gnp": _gnp,
    "atlas": _atlas,
    "acceptance_gnp": _acceptance_gnp,
}


def generate(family: str, params: Dict, seed: int = config.DEFAULT_SEED) -> List[SimplicialGraph]:
    if family not in FAMILIES:
        raise PreconditionError(f"unknown family {family!r}, expected one of {sorted(FAMILIES)}")
    try:
        graphs = FAMILIES[family](params, seed)
    except KeyError as e:
        raise PreconditionError(f"family {family!r} needs parameter {e.args[0]}") from e
    except PreconditionError:
        raise
    except (TypeError, ValueError) as e:
        raise PreconditionError(f"invalid parameters for family {family!r}: {e}") from e
    logger.info(f"✅ Generated {len(graphs)} graphs for family {family!r} (seed {seed})")
    return graphs


@dataclass(frozen=True)
class Corpus:
    """Named graphs used to certify the production code."""
    seed: int
    entries: Tuple[Tuple[str, SimplicialGraph], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def graphs(self) -> List[SimplicialGraph]:
        return [g for _, g in self.entries]

    @classmethod
    def structured(cls, seed: int = config.DEFAULT_SEED) -> "Corpus":
        entries: List[Tuple[str, SimplicialGraph]] = []
        for n in range(1, 9):
            entries += [(f"path n={n}", g) for g in generate("path", {"n": n}, seed)]
        for n in range(3, 9):
            entries += [(f"cycle n={n}", g) for g in generate("cycle", {"n": n}, seed)]
        for n in range(1, 7):
            entries += [(f"complete n={n}", g) for g in generate("complete", {"n": n}, seed)]
        for n in range(1, 6):
            entries += [(f"star n={n}", g) for g in generate("star", {"n": n}, seed)]
        entries += [(f"tree n=9 #{i}", g) for i, g in enumerate(generate("tree", {"n": 9, "count": 10}, seed))]
        for sizes, shared in (([3, 3], 2), ([3, 4, 4], 2), ([2, 3, 3], 1), ([4, 4, 5], 3)):
            entries += [(f"clique_sum {sizes}/{shared}", g)
                        for g in generate("clique_sum", {"sizes": sizes, "shared": shared}, seed)]
        return cls(seed, tuple(entries))

    @classmethod
    def exhaustive(cls, max_n: int = config.EXHAUSTIVE_MAX_VERTICES) -> "Corpus":
        return cls(0, tuple((f"atlas #{i}", g) for i, g in enumerate(generate("atlas", {"max_n": max_n}))))

    @classmethod
    def gnp(cls, seed: int = config.DEFAULT_SEED, count: int = config.GNP_SAMPLES) -> "Corpus":
        graphs = generate("acceptance_gnp", {"count": count}, seed)
        return cls(seed, tuple((f"gnp #{i}", g) for i, g in enumerate(graphs)))
