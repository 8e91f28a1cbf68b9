# certify.py
"""
Cross-checks the production code against the brute-force oracle and the
decomposition invariants, one graph at a time or over a whole corpus.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import config
from cli_io import emit_graph_line
from database import CertificationStore
from graph_core import SimplicialGraph, format_vertex_set, induced_subgraph, is_connected
from jsj import DecompositionError, JSJDecomposition, build_jsj, contract_reducible, verify_reassembly
from oracle import Corpus, oracle_classify, oracle_separating_cliques
from separators import cut_vertices, enumerate_separating_cliques
from splitting import SplittingKind, classify

logger = logging.getLogger(__name__)

Failure = Tuple[str, str]


@dataclass(frozen=True)
class CertificationFailure:
    graph_line: str
    check: str
    detail: str


@dataclass(frozen=True)
class CertificationSummary:
    corpus: str
    graphs_checked: int
    failures: Tuple[CertificationFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def describe(self) -> List[str]:
        lines = [f"corpus {self.corpus}: {self.graphs_checked} graphs, {len(self.failures)} disagreements"]
        lines += [f"  {f.check}: {f.detail} [{f.graph_line}]" for f in self.failures]
        return lines


def _leaf_is_separator_free(g: SimplicialGraph, bag) -> bool:
    h = induced_subgraph(g, bag)
    if len(bag) <= config.EXHAUSTIVE_MAX_VERTICES:
        return oracle_separating_cliques(h).is_empty
    return enumerate_separating_cliques(h).is_empty


def _trace_is_monotone(decomposition: JSJDecomposition) -> bool:
    """Every level below the top sits inside a parent level with a smaller k."""
    for level in decomposition.trace:
        if level.depth == 0:
            continue
        parents = [p for p in decomposition.trace
                   if p.depth == level.depth - 1 and level.subgraph <= p.subgraph]
        if not parents or any(p.k >= level.k for p in parents):
            return False
    return True


def check_jsj(g: SimplicialGraph) -> List[Failure]:
    failures: List[Failure] = []
    try:
        decomposition = build_jsj(g)
        refined = build_jsj(g, contract=False)
    except DecompositionError as e:
        return [("jsj", f"construction failed: {e}")]

    for label, candidate in (("jsj", decomposition), ("jsj --no-contract", refined)):
        failures += [(label, violation) for violation in verify_reassembly(g, candidate.gog).violations]

    for node_id, bag in decomposition.gog.nodes:
        if not is_connected(induced_subgraph(g, bag)):
            failures.append(("jsj leaf", f"bag {format_vertex_set(bag)} of node {node_id} is disconnected"))
        elif not _leaf_is_separator_free(g, bag):
            failures.append(("jsj leaf", f"bag {format_vertex_set(bag)} of node {node_id} has a separating clique"))

    if not _trace_is_monotone(decomposition):
        failures.append(("jsj trace", "minimal separator size does not increase along the recursion"))
    if contract_reducible(decomposition.gog) != decomposition.gog:
        failures.append(("jsj contraction", "contraction is not idempotent"))
    if contract_reducible(refined.gog) != decomposition.gog:
        failures.append(("jsj contraction", "contracting the refined tree differs from the JSJ output"))

    trivial_expected = classify(g).kind in (SplittingKind.COMPLETE, SplittingKind.NO_ABELIAN_SPLITTING)
    if decomposition.is_trivial != trivial_expected:
        failures.append(("jsj classify", f"single node = {decomposition.is_trivial} but classification disagrees"))
    return failures


def certify_graph(g: SimplicialGraph) -> List[Failure]:
    """Every check that applies to g; an empty list means it passed."""
    if len(g) == 0:
        return []
    failures: List[Failure] = []

    production_report = enumerate_separating_cliques(g)
    if len(g) <= config.ORACLE_MAX_VERTICES:
        production, reference = classify(g), oracle_classify(g)
        if production != reference:
            failures.append(("classify", f"{' / '.join(production.describe())} vs oracle {' / '.join(reference.describe())}"))
        oracle_report = oracle_separating_cliques(g)
        if production_report != oracle_report:
            failures.append(("separators", f"{' / '.join(production_report.describe())} vs oracle {' / '.join(oracle_report.describe())}"))

    if is_connected(g):
        single_edge = len(g) == 2 and len(g.edges) == 1
        if not single_edge and (production_report.minimal_size == 1) != bool(cut_vertices(g)):
            failures.append(("cut vertex", f"minimal size {production_report.minimal_size} vs cut vertices {cut_vertices(g)}"))
        failures += check_jsj(g)
    return failures


def certify_corpus(graphs: Iterable[SimplicialGraph], corpus_name: str = "custom",
                   seed: Optional[int] = None, store: Optional[CertificationStore] = None) -> CertificationSummary:
    run_id = store.start_run(corpus_name, seed) if store else None
    failures: List[CertificationFailure] = []
    checked = 0
    for g in graphs:
        checked += 1
        for check, detail in certify_graph(g):
            failure = CertificationFailure(emit_graph_line(g), check, detail)
            failures.append(failure)
            logger.warning(f"⚠️ {check} disagreement on [{failure.graph_line}]: {detail}")
            if run_id is not None:
                store.record_failure(run_id, failure.graph_line, check, detail)
        if checked % 250 == 0:
            logger.info(f"🔍 Certified {checked} graphs of corpus {corpus_name!r}")

    if run_id is not None:
        store.finish_run(run_id, checked, len(failures))
    if failures:
        logger.error(f"🔥 Corpus {corpus_name!r}: {len(failures)} disagreements in {checked} graphs")
    else:
        logger.info(f"✅ Corpus {corpus_name!r}: {checked} graphs certified")
    return CertificationSummary(corpus_name, checked, tuple(failures))


CORPUS_NAMES = ("structured", "exhaustive", "gnp")


def acceptance_corpus(seed: int = config.DEFAULT_SEED, samples: int = config.GNP_SAMPLES,
                      names: Sequence[str] = CORPUS_NAMES) -> List[Tuple[str, Corpus]]:
    """The named corpora a full certification run covers."""
    builders = {
        "structured": lambda: Corpus.structured(seed),
        "exhaustive": Corpus.exhaustive,
        "gnp": lambda: Corpus.gnp(seed, samples),
    }
    return [(name, builders[name]()) for name in names]
