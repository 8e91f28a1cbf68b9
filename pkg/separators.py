# separators.py
"""
Separating cliques: detection, enumeration by size and the cut-vertex special case.

Production enumeration walks the cliques of the graph in nondecreasing size
(networkx yields them in that order) and tests each one for separation, so the
minimum-size separators are found first and the search can stop there.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from graph_core import (
    PreconditionError, SimplicialGraph, VertexSet, canonical_key, format_vertex_set,
    is_complete, is_connected,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeparatorReport:
    """All separating cliques of a graph grouped by size."""
    minimal_size: Optional[int]
    by_size: Dict[int, Tuple[VertexSet, ...]] = field(default_factory=dict)
    cut_vertices: Tuple[str, ...] = ()
    # False when the host had two or more components; separation is then read as
    # "strictly more components than the host".
    connected: bool = True

    @classmethod
    def from_cliques(cls, cliques: Iterable[VertexSet], connected: bool) -> "SeparatorReport":
        grouped: Dict[int, List[VertexSet]] = defaultdict(list)
        for clique in cliques:
            grouped[len(clique)].append(frozenset(clique))
        by_size = {size: tuple(sorted(sets, key=canonical_key)) for size, sets in sorted(grouped.items())}
        minimal_size = min(by_size) if by_size else None
        cuts = tuple(sorted(next(iter(s)) for s in by_size.get(1, ())))
        return cls(minimal_size, by_size, cuts, connected)

    @property
    def is_empty(self) -> bool:
        return not self.by_size

    def minimal(self) -> Tuple[VertexSet, ...]:
        if self.minimal_size is None:
            return ()
        return self.by_size[self.minimal_size]

    def all_cliques(self) -> Iterator[VertexSet]:
        for size in sorted(self.by_size):
            yield from self.by_size[size]

    def describe(self) -> List[str]:
        lines = [f"minimal size: {'none' if self.minimal_size is None else self.minimal_size}"]
        if not self.connected:
            lines.append("warning: host graph is disconnected")
        for size in sorted(self.by_size):
            lines.append(f"size {size}: " + " ".join(format_vertex_set(s) for s in self.by_size[size]))
        lines.append("cut vertices: " + (" ".join(self.cut_vertices) if self.cut_vertices else "none"))
        return lines


def _separates(g: SimplicialGraph, s: Iterable[str], base_components: int) -> bool:
    remainder = g.vertex_set.difference(s)
    if not remainder:
        return False
    return nx.number_connected_components(g.nx_graph.subgraph(remainder)) > base_components


def is_separating(g: SimplicialGraph, s: Iterable[str]) -> bool:
    """True iff removing s leaves a nonempty graph with more components than g."""
    members = g.check_members(s)
    return _separates(g, members, nx.number_connected_components(g.nx_graph))


def enumerate_separating_cliques(g: SimplicialGraph, max_size: Optional[int] = None,
                                 minimal_only: bool = False) -> SeparatorReport:
    """Every separating clique of size at most max_size (default |V| - 2)."""
    if max_size is None:
        # A separator must leave at least two vertices behind.
        max_size = max(len(g) - 2, 0)
    base = nx.number_connected_components(g.nx_graph)
    connected = base <= 1
    if not connected:
        logger.warning(f"⚠️ Enumerating separators of a disconnected graph ({len(g)} vertices); report is flagged")

    found: List[VertexSet] = []
    found_size: Optional[int] = None
    for clique in nx.enumerate_all_cliques(g.nx_graph):
        size = len(clique)
        if size > max_size:
            break
        if minimal_only and found_size is not None and size > found_size:
            break
        if _separates(g, clique, base):
            found.append(frozenset(clique))
            found_size = size if found_size is None else found_size

    report = SeparatorReport.from_cliques(found, connected)
    logger.info(f"🔍 Found {len(found)} separating cliques (minimal size {report.minimal_size}) in a {len(g)}-vertex graph")
    return report


def min_separating_cliques(g: SimplicialGraph) -> Tuple[Optional[int], List[VertexSet]]:
    """The minimal separating-clique size k and every separating clique of size k."""
    if not is_connected(g):
        raise PreconditionError("min_separating_cliques requires a connected graph")
    if is_complete(g):
        raise PreconditionError("min_separating_cliques requires a graph that is not complete")
    report = enumerate_separating_cliques(g, minimal_only=True)
    return report.minimal_size, list(report.minimal())


def cut_vertices(g: SimplicialGraph) -> List[str]:
    """Articulation points: vertices whose removal increases the number of components."""
    return sorted(nx.articulation_points(g.nx_graph))
