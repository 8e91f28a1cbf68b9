# main.py
import argparse
import logging
import sys
from typing import Dict, List, Optional

import config
from certify import CORPUS_NAMES, acceptance_corpus, certify_corpus
from cli_io import GraphParseError, emit_decomposition, emit_dot, emit_graph_line, load_decomposition, parse_graph
from database import CertificationStore
from graph_core import GraphInputError, PreconditionError, SimplicialGraph, format_vertex_set, join_factors
from jsj import NO_SEPARATING_CLIQUE, DecompositionError, build_jsj, verify_reassembly
from oracle import generate
from separators import enumerate_separating_cliques
from splitting import classify, free_splitting

# Configure logging
logging.basicConfig(
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    level=getattr(logging, config.LOG_LEVEL, logging.WARNING)
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except UnicodeDecodeError as e:
        raise GraphParseError([(None, f"invalid UTF-8 input at byte {e.start}")]) from e


def _load_graph(path: str) -> SimplicialGraph:
    logger.info(f"🔍 Reading graph from {path}")
    return parse_graph(_read(path))


def _print_lines(lines: List[str]) -> None:
    for line in lines:
        print(line)


# --- Subcommands ---

def cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    result = classify(g)
    _print_lines(result.describe())
    factors = join_factors(g)
    if len(factors) > 1:
        print("join factors: " + " ".join(format_vertex_set(f) for f in factors))
    return EXIT_OK


def cmd_separators(args) -> int:
    g = _load_graph(args.graph)
    report = enumerate_separating_cliques(g, max_size=args.max_size, minimal_only=args.min_only)
    _print_lines(report.describe())
    return EXIT_OK


def cmd_jsj(args) -> int:
    g = _load_graph(args.graph)
    decomposition = build_jsj(g, contract=not args.no_contract)
    sys.stdout.write(emit_dot(decomposition) if args.dot else emit_decomposition(decomposition))
    if decomposition.is_trivial:
        print(f"note: trivial decomposition, {NO_SEPARATING_CLIQUE}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    gog = load_decomposition(_read(args.decomposition))
    verdict = verify_reassembly(g, gog)
    _print_lines(verdict.describe())
    if not verdict.ok:
        logger.warning(f"⚠️ Decomposition failed verification with {len(verdict.violations)} violations")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_components(args) -> int:
    g = _load_graph(args.graph)
    sys.stdout.write(emit_decomposition(free_splitting(g)))
    return EXIT_OK


def _parse_params(pairs: List[str]) -> Dict[str, str]:
    params: Dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise PreconditionError(f"parameter {pair!r} is not of the form key=value")
        params[key] = value
    return params


def cmd_corpus(args) -> int:
    for g in generate(args.family, _parse_params(args.params), seed=args.seed):
        print(emit_graph_line(g))
    return EXIT_OK


def cmd_certify(args) -> int:
    names = CORPUS_NAMES if args.corpus == "all" else [args.corpus]
    corpora = acceptance_corpus(args.seed, args.samples, names)
    store = CertificationStore(config.RESULTS_DB_PATH) if args.store else None
    failed = False
    for name, corpus in corpora:
        summary = certify_corpus(corpus.graphs(), corpus_name=name, seed=corpus.seed, store=store)
        _print_lines(summary.describe())
        failed = failed or not summary.ok
    return EXIT_FAILURE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raag-splittings",
        description="Abelian splittings and JSJ decompositions of right-angled Artin groups from their defining graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="which abelian splitting A(graph) admits, with a witness")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("separators", help="separating cliques grouped by size")
    p.add_argument("graph")
    p.add_argument("--max-size", type=int, default=None, help="largest clique size to search")
    p.add_argument("--min-only", action="store_true", help="stop at the minimal size")
    p.set_defaults(handler=cmd_separators)

    p = sub.add_parser("jsj", help="vertex-elliptic abelian JSJ decomposition")
    p.add_argument("graph")
    p.add_argument("--no-contract", action="store_true", help="keep reducible valence-two nodes")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of the JSON document")
    p.set_defaults(handler=cmd_jsj)

    p = sub.add_parser("verify", help="check a decomposition document against a graph")
    p.add_argument("graph")
    p.add_argument("decomposition")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("components", help="free splitting of a disconnected graph")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_components)

    p = sub.add_parser("corpus", help="emit generated graphs, one per line")
    p.add_argument("family")
    p.add_argument("params", nargs="*", help="key=value, lists comma separated")
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.set_defaults(handler=cmd_corpus)

    p = sub.add_parser("certify", help="cross-check production code against the brute-force oracle")
    p.add_argument("--corpus", choices=[*CORPUS_NAMES, "all"], default="all")
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=config.GNP_SAMPLES)
    p.add_argument("--store", action="store_true", help=f"record the run in {config.RESULTS_DB_PATH}")
    p.set_defaults(handler=cmd_certify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Runs one subcommand and returns its exit code."""
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.INFO)

    try:
        return args.handler(args)
    except GraphParseError as e:
        logger.debug(f"🔥 {args.command}: parse error", exc_info=True)
        for problem in str(e).splitlines():
            print(f"error: {problem}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (GraphInputError, PreconditionError, DecompositionError, OSError) as e:
        logger.debug(f"🔥 {args.command} failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
