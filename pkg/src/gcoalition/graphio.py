"""Graph serialization: graph6, edge-list text, DOT."""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import Graph, from_edge_list


def _g6_header(data: bytes):
    """Decode the graph6 size header; returns (n, bytes consumed)."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    b0 = data[0]
    if b0 == 126:  # '~': multi-byte size
        if len(data) >= 4 and data[1] != 126:
            vals = [data[i] - 63 for i in range(1, 4)]
            if any(v < 0 or v > 63 for v in vals):
                raise GraphFormatError("bad graph6 size header")
            n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
            return n, 4
        raise GraphFormatError("unsupported or truncated graph6 size header")
    if not 63 <= b0 <= 126:
        raise GraphFormatError("non-printable byte in graph6 header")
    return b0 - 63, 1


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (optionally prefixed with '>>graph6<<')."""
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    data = text.encode("ascii", errors="replace")
    n, off = _g6_header(data)
    if n < 1:
        raise GraphFormatError("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[off:]
    if len(body) < nbytes:
        raise GraphFormatError("truncated graph6 bit stream")
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after graph6 bit stream")
    bits = []
    for b in body:
        if not 63 <= b <= 126:
            raise GraphFormatError("non-printable byte in graph6 body")
        val = b - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                edges.append((row, col))
            idx += 1
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding in graph6 bit stream")
    return from_edge_list(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode in canonical graph6 form (vertex order preserved)."""
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    else:
        header = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return header + "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n <count>``, then ``u v`` lines."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphFormatError('edge-list input must start with "n <count>"')
    try:
        n = int(head[1])
    except ValueError as exc:
        raise GraphFormatError("bad vertex count") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line: {ln!r}") from exc
    return from_edge_list(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    """Deterministic DOT rendering (vertices in index order)."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
