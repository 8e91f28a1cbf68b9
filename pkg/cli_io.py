# cli_io.py
"""
Text formats: the line-based graph format, the canonical JSON decomposition
document and DOT output.

Graph format: "vertex <label>" and "edge <label> <label>" statements, one per
line (or separated by ";" for the one-line corpus form); blank lines and "#"
comments are ignored.
"""
import json
import logging
import re
from typing import Dict, List, Optional, Tuple, Union

from graph_core import GraphInputError, SimplicialGraph, format_vertex_set
from graph_of_groups import GraphOfGroups
from jsj import JSJDecomposition

logger = logging.getLogger(__name__)

LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")


class GraphParseError(GraphInputError):
    """Every malformed line of a graph or document, with its line number."""

    def __init__(self, problems: List[Tuple[Optional[int], str]]):
        self.problems = problems
        super().__init__("\n".join(
            reason if line is None else f"{reason} at line {line}" for line, reason in problems
        ))


def parse_graph(text: str) -> SimplicialGraph:
    vertices: List[str] = []
    declared = set()
    edges: List[Tuple[str, str]] = []
    seen_edges = set()
    problems: List[Tuple[Optional[int], str]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        for statement in raw.split("#", 1)[0].split(";"):
            parts = statement.split()
            if not parts:
                continue
            keyword, args = parts[0], parts[1:]
            if keyword == "vertex":
                if len(args) != 1:
                    problems.append((line_no, "malformed vertex line"))
                elif not LABEL_RE.match(args[0]):
                    problems.append((line_no, f"invalid label {args[0]}"))
                elif args[0] in declared:
                    problems.append((line_no, f"duplicate vertex {args[0]}"))
                else:
                    declared.add(args[0])
                    vertices.append(args[0])
            elif keyword == "edge":
                if len(args) != 2:
                    problems.append((line_no, "malformed edge line"))
                    continue
                unknown = [label for label in args if label not in declared]
                if unknown:
                    problems.extend((line_no, f"unknown vertex {label}") for label in unknown)
                    continue
                u, w = args
                if u == w:
                    problems.append((line_no, "loop edge"))
                elif frozenset(args) in seen_edges:
                    problems.append((line_no, f"duplicate edge {u} {w}"))
                else:
                    seen_edges.add(frozenset(args))
                    edges.append((u, w))
            else:
                problems.append((line_no, f"unknown statement {keyword}"))

    if problems:
        raise GraphParseError(problems)
    logger.info(f"✅ Parsed graph with {len(vertices)} vertices and {len(edges)} edges")
    return SimplicialGraph.from_edges(vertices, edges)


def emit_graph(g: SimplicialGraph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {u} {w}" for u, w in g.ordered_edges()]
    return "".join(line + "\n" for line in lines)


def emit_graph_line(g: SimplicialGraph) -> str:
    """One-line form used for corpus dumps."""
    return "; ".join(emit_graph(g).splitlines())


# --- Decomposition documents ---

Decomposition = Union[JSJDecomposition, GraphOfGroups]


def decomposition_document(decomposition: Decomposition) -> Dict:
    if isinstance(decomposition, JSJDecomposition):
        gog = decomposition.gog
        certificates = [{"node": i, "reason": reason} for i, reason in decomposition.leaf_certificates]
        trace = [
            {"depth": level.depth, "subgraph": sorted(level.subgraph), "k": level.k,
             "cliques": [sorted(c) for c in level.cliques]}
            for level in decomposition.trace
        ]
    else:
        gog, certificates, trace = decomposition, [], []
    host = gog.host
    return {
        "host": {
            "vertices": sorted(host.vertices),
            "edges": sorted(sorted(e) for e in host.edges),
        },
        "nodes": [{"id": i, "bag": sorted(bag)} for i, bag in gog.nodes],
        "edges": [{"source": u, "target": w, "adhesion": sorted(adhesion)} for u, w, adhesion in gog.edges],
        "certificates": certificates,
        "trace": trace,
    }


def serialize_document(document: Dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def emit_decomposition(decomposition: Decomposition) -> str:
    return serialize_document(decomposition_document(decomposition))


def _labels(value, where: str) -> List[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise GraphParseError([(None, f"{where} must be a list of labels")])
    return value


def _node_id(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise GraphParseError([(None, f"{where} must be an integer node id")])
    return value


def load_decomposition(text: str) -> GraphOfGroups:
    """Read a decomposition document; its host is the echoed graph."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphParseError([(e.lineno, f"invalid JSON: {e.msg}")]) from e
    if not isinstance(document, dict):
        raise GraphParseError([(None, "document must be a JSON object")])
    missing = [key for key in ("host", "nodes", "edges") if key not in document]
    if missing:
        raise GraphParseError([(None, f"document is missing {key!r}") for key in missing])

    host_doc = document["host"]
    if not isinstance(host_doc, dict):
        raise GraphParseError([(None, "host must be an object")])
    vertices = _labels(host_doc.get("vertices"), "host vertices")
    host_edges = host_doc.get("edges")
    if not isinstance(host_edges, list):
        raise GraphParseError([(None, "host edges must be a list")])
    pairs = [_labels(e, "host edge") for e in host_edges]
    if any(len(pair) != 2 for pair in pairs):
        raise GraphParseError([(None, "host edges must be label pairs")])
    try:
        host = SimplicialGraph.from_edges(vertices, [tuple(pair) for pair in pairs])
    except GraphInputError as e:
        raise GraphParseError([(None, f"invalid host graph: {e}")]) from e

    if not isinstance(document["nodes"], list) or not isinstance(document["edges"], list):
        raise GraphParseError([(None, "nodes and edges must be lists")])
    nodes = []
    for node in document["nodes"]:
        if not isinstance(node, dict):
            raise GraphParseError([(None, "node entries must be objects")])
        nodes.append((_node_id(node.get("id"), "node id"), _labels(node.get("bag"), "node bag")))
    edges = []
    for edge in document["edges"]:
        if not isinstance(edge, dict):
            raise GraphParseError([(None, "edge entries must be objects")])
        edges.append((
            _node_id(edge.get("source"), "edge source"),
            _node_id(edge.get("target"), "edge target"),
            _labels(edge.get("adhesion"), "edge adhesion"),
        ))
    # duplicate and dangling ids are left for verify_reassembly to report
    return GraphOfGroups(
        host,
        tuple((i, frozenset(bag)) for i, bag in nodes),
        tuple((u, w, frozenset(adhesion)) for u, w, adhesion in edges),
    )


# --- DOT ---

def _dot_quote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


def emit_dot(obj: Union[Decomposition, SimplicialGraph]) -> str:
    """Plain undirected DOT with label attributes only, in stable order."""
    lines = ["graph {"]
    if isinstance(obj, SimplicialGraph):
        for v in obj.vertices:
            lines.append(f"  {_dot_quote(v)} [label={_dot_quote(v)}];")
        for u, w in obj.ordered_edges():
            lines.append(f"  {_dot_quote(u)} -- {_dot_quote(w)};")
    else:
        gog = obj.gog if isinstance(obj, JSJDecomposition) else obj
        for i, bag in gog.nodes:
            lines.append(f"  n{i} [label={_dot_quote(format_vertex_set(bag))}];")
        for u, w, adhesion in gog.edges:
            lines.append(f"  n{u} -- n{w} [label={_dot_quote(format_vertex_set(adhesion))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
