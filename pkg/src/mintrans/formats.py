"""Text formats.

HG (hypergraphs): one edge per line, vertex names separated by whitespace.
``#`` starts a comment. Empty lines and comment-only lines are skipped. The
empty edge is the line ``!``; a line holding nothing but whitespace is an
error, so the empty edge is never written by accident.

DIMACS edge format (graphs): a header ``p edge N M`` followed by lines
``e U V`` with 1-based vertex ids; ``c`` lines are comments. Repeated and
reversed edges collapse into one.
"""

from __future__ import annotations

from .domination import Graph
from .hypergraph import Hypergraph


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def parse_hypergraph(text: str) -> Hypergraph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, hash_, _ = raw.partition("#")
        tokens = body.split()
        if not tokens:
            if raw and not hash_:
                raise ParseError("empty edge must be written as '!'", lineno)
            continue
        if "!" in tokens:
            if len(tokens) > 1:
                raise ParseError("'!' (the empty edge) must stand alone on its line", lineno)
            tokens = []
        edges.append(tokens)
    return Hypergraph.from_named(edges)


def render_hypergraph(H: Hypergraph) -> str:
    lines = []
    for e in H.edges:
        lines.append(" ".join(H.name(v) for v in sorted(e)) if e else "!")
    return "".join(line + "\n" for line in lines)


def parse_graph(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError("header must read 'p edge N M'", lineno)
            try:
                n, _ = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before the 'p edge' header", lineno)
            if len(fields) != 3:
                raise ParseError("edge line must read 'e U V'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("vertex ids must be integers", lineno) from None
            for w in (u, v):
                if not 1 <= w <= n:
                    raise ParseError(f"vertex id {w} out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge N M' header")
    return Graph(n, edges)


def render_graph(G: Graph) -> str:
    edges = G.edges
    out = [f"p edge {G.n} {len(edges)}"]
    out += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(out) + "\n"
