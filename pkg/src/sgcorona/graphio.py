"""Signed edge-list text format shared by the CLI.

First data line is ``n m``, followed by m lines ``u v s`` with s one of
``+``/``-``, optionally a line ``marking s_0 ... s_{n-1}``.  Lines starting
with ``#`` are comments.  Parse errors name the offending line.
"""

from __future__ import annotations

from .core import SignedGraph

_SIGNS = {"+": 1, "+1": 1, "-": -1, "-1": -1}


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"line {lineno}: bad {what} {token!r}") from None


def parse_signed_graph(text: str) -> SignedGraph:
    numbered = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        numbered.append((lineno, line.split()))
    if not numbered:
        raise ValueError("empty graph description")
    headline, head = numbered[0]
    if len(head) != 2:
        raise ValueError(
            f"line {headline}: expected header 'n m', got {' '.join(head)!r}"
        )
    n = _int(head[0], headline, "vertex count")
    m = _int(head[1], headline, "edge count")
    body = numbered[1:]
    if len(body) < m:
        raise ValueError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for lineno, tok in body[:m]:
        if len(tok) != 3:
            raise ValueError(
                f"line {lineno}: expected edge line 'u v s', got {' '.join(tok)!r}"
            )
        u = _int(tok[0], lineno, "vertex")
        v = _int(tok[1], lineno, "vertex")
        if tok[2] not in _SIGNS:
            raise ValueError(f"line {lineno}: bad edge sign {tok[2]!r}")
        edges.append((u, v, _SIGNS[tok[2]]))
    marking = None
    rest = body[m:]
    if rest:
        lineno, tok = rest[0]
        if len(rest) != 1 or tok[0] != "marking":
            raise ValueError(f"line {lineno}: unexpected trailing lines after edge list")
        vals = tok[1:]
        if len(vals) != n:
            raise ValueError(
                f"line {lineno}: marking needs {n} entries, got {len(vals)}"
            )
        for v in vals:
            if v not in _SIGNS:
                raise ValueError(f"line {lineno}: bad marking entry {v!r}")
        marking = [_SIGNS[v] for v in vals]
    return SignedGraph(n, edges, marking)


def serialize_signed_graph(g: SignedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    for u, v, s in g.edges:
        lines.append(f"{u} {v} {'+' if s == 1 else '-'}")
    if g.marking is not None:
        lines.append("marking " + " ".join("+" if x == 1 else "-" for x in g.marking))
    return "\n".join(lines) + "\n"


def load_signed_graph(path: str) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_signed_graph(fh.read())
