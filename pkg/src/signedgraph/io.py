"""Text format for signed graphs.

A signed-graph file is a header line ``sg <n> <m>`` followed by exactly m
edge lines ``e <u> <v> <s>`` with 0-based vertex indices and s in {+, -}.
``#`` starts a comment that runs to the end of the line; blank lines are
ignored.  Edge order in the file defines the edge indices.  Serialization is
canonical: header then edges in index order, single spaces, one trailing
newline per line, no comments.

Petersen and pendant-spoke layouts additionally serialize a role sidecar of
lines ``role <edge-index> outer|spoke|inner``.
"""

from __future__ import annotations

from .core import Graph, Signature, SignedGraph
from .errors import InvalidInputError, ParseError

__all__ = [
    "parse_signed_graph",
    "serialize_signed_graph",
    "serialize_roles",
]


def parse_signed_graph(text: str) -> SignedGraph:
    """Parse the signed-graph text format; errors carry 1-based line numbers."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    signs: list[str] = []
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if tokens[0] != "sg":
                raise ParseError(f"expected 'sg <n> <m>' header, got {raw!r}", lineno)
            if len(tokens) != 3:
                raise ParseError("header must be exactly 'sg <n> <m>'", lineno)
            try:
                n, m = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be non-negative", lineno)
            header = (n, m)
            header_line = lineno
            continue
        if tokens[0] != "e":
            raise ParseError(f"expected edge line 'e <u> <v> <s>', got {raw!r}", lineno)
        if len(tokens) != 4:
            raise ParseError("edge line must be exactly 'e <u> <v> <s>'", lineno)
        try:
            u, v = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if tokens[3] not in ("+", "-"):
            raise ParseError(f"edge sign must be '+' or '-', got {tokens[3]!r}", lineno)
        if len(edges) >= header[1]:
            raise ParseError(f"more than {header[1]} edge lines", lineno)
        edges.append((u, v))
        signs.append(tokens[3])
    if header is None:
        raise ParseError("missing 'sg <n> <m>' header", max(1, len(text.splitlines())))
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, file has {len(edges)}",
                         header_line)
    try:
        graph = Graph(n, edges)
    except InvalidInputError as exc:
        raise ParseError(str(exc), header_line) from exc
    negatives = Signature.from_edges(m, (i for i, s in enumerate(signs) if s == "-"))
    return SignedGraph(graph, negatives)


def serialize_signed_graph(sg: SignedGraph) -> str:
    """Canonical text form; ``parse_signed_graph`` round-trips it bit-exactly."""
    g = sg.graph
    lines = [f"sg {g.n_vertices} {g.n_edges}"]
    for eidx, (u, v) in enumerate(g.edges):
        s = "-" if eidx in sg.negatives else "+"
        lines.append(f"e {u} {v} {s}")
    return "\n".join(lines) + "\n"


def serialize_roles(layout) -> str:
    """Role sidecar for a layout exposing a ``roles`` tuple."""
    lines = [f"role {eidx} {role}" for eidx, role in enumerate(layout.roles)]
    return "\n".join(lines) + "\n"
