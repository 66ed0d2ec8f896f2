"""Text formats: a commented edge list and standard graph6.

Edge list::

    # optional comments
    4
    0 1
    1 2
    2 3

The first non-comment line is the order; each further line is one edge.
"""

from __future__ import annotations

from .errors import ParseError, ParameterOutOfRange
from .graph import Graph

FORMATS = ("edgelist", "graph6")
_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.order
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    else:
        raise ParameterOutOfRange(f"graph6 cannot encode order {n}")
    masks = g.masks
    bitlist = [masks[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bitlist[k : k + 6])), 2))
        for k in range(0, len(bitlist), 6)
    )
    return head + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", offset=pos)
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise ParseError("unsupported graph6 order prefix", offset=0)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
        body_offset = 4
    else:
        n = ord(s[0]) - 63
        body = s[1:]
        body_offset = 1
    if n < 1:
        raise ParseError("graph6 order must be >= 1", offset=0)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} chars, expected {need}", offset=body_offset
        )
    bitstream = []
    for ch in body:
        x = ord(ch) - 63
        bitstream.extend((x >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [str(g.order)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        values = []
        for tok in fields:
            try:
                values.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", lineno, raw.index(tok)) from None
        if n is None:
            if len(values) != 1:
                raise ParseError("first line must hold only the order", lineno, 0)
            n = values[0]
            if n < 1:
                raise ParseError("order must be >= 1", lineno, 0)
            continue
        if len(values) != 2:
            raise ParseError("edge line must have exactly two vertices", lineno, 0)
        u, v = values
        for tok, x in zip(fields, values):
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} outside 0..{n - 1}", lineno, raw.index(tok))
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno, 0)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno, 0)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing order line", 1, 0)
    return Graph(n, edges)


def detect_format(text: str) -> str:
    """``edgelist`` when the first meaningful line starts with a digit, else ``graph6``.

    graph6 never uses digits, so this also routes malformed edge lists to the
    edge-list parser, which reports the offending line.
    """
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip() if not raw.startswith(">>") else raw.strip()
        if line:
            return "edgelist" if line[0].isdigit() or line[0] == "-" else "graph6"
    return "edgelist"


def parse_graph(text: str, format: str | None = None) -> Graph:
    fmt = format or detect_format(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, found {len(lines)}", line=1)
        return from_graph6(lines[0])
    raise ParseError(f"unknown format {fmt!r}")


def parse_graphs(text: str, format: str | None = None) -> list[Graph]:
    """Several graphs: one graph6 per line, or edge lists separated by blank lines."""
    fmt = format or detect_format(text)
    if fmt == "graph6":
        out = []
        for lineno, ln in enumerate(text.splitlines(), start=1):
            if ln.strip():
                try:
                    out.append(from_graph6(ln))
                except ParseError as exc:
                    raise ParseError(str(exc), line=lineno) from None
        return out
    blocks, current = [], []
    for ln in text.splitlines():
        if ln.strip():
            current.append(ln)
        elif current:
            blocks.append("\n".join(current))
            current = []
    if current:
        blocks.append("\n".join(current))
    return [from_edgelist(b) for b in blocks]


def serialize_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        return to_edgelist(g)
    if format == "graph6":
        return to_graph6(g) + "\n"
    raise ValueError(f"unknown format {format!r}")
