"""graph6 and edge-list readers/writers.

graph6 follows the nauty layout: a size prefix N(n) (one byte ``n + 63`` for
n <= 62, ``~`` plus three bytes up to 258047), then the upper triangle read
column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per
byte, high bit first, each byte offset by 63.  An optional ``>>graph6<<``
header is accepted on input and never written.

The edge list is whitespace separated ``u v`` pairs, one per line, with
``#`` comments.  A leading ``n m`` line is read as a header when it is
consistent with the rest of the data (exactly m edge lines, all endpoints
below n); otherwise it is an ordinary edge.  The writer always emits the
header so isolated vertices survive a round trip.
"""
from __future__ import annotations

from .graph import Graph, GraphInputError

HEADER = b">>graph6<<"
FORMATS = ("graph6", "edgelist")


class ParseError(GraphInputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


# -- graph6 -------------------------------------------------------------


def _size_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise GraphInputError("graph6 writer supports n <= 258047")


def write_graph6(g: Graph) -> bytes:
    out = bytearray(_size_prefix(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def read_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    start = len(HEADER) if data.startswith(HEADER) else 0
    pos = start
    body = data[start:]
    for k, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside graph6 range", start + k)
    if not body:
        raise ParseError("missing size prefix", pos)
    if body[0] != 126:
        n, pos = body[0] - 63, 1
    else:
        if len(body) < 4 or body[1] == 126:
            raise ParseError("unsupported or truncated size prefix", start)
        n = (body[1] - 63) << 12 | (body[2] - 63) << 6 | (body[3] - 63)
        pos = 4
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) - pos != need:
        raise ParseError(f"expected {need} adjacency bytes, found {len(body) - pos}", start + pos)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[pos + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if k % 6:
        last = body[pos + k // 6] - 63
        if last & ((1 << (6 - k % 6)) - 1):
            raise ParseError("non-zero padding bits", start + pos + k // 6)
    return Graph(n, tuple(adj))


# -- edge list ----------------------------------------------------------------


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edgelist(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    rows: list[tuple[int, int, int]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        fields = body.split()
        if fields:
            if len(fields) != 2:
                raise ParseError(f"expected two integers, got {body.strip()!r}", offset)
            try:
                u, v = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError(f"non-integer token in {body.strip()!r}", offset) from None
            if u < 0 or v < 0:
                raise ParseError("negative vertex", offset)
            rows.append((u, v, offset))
        offset += len(line)
    n = None
    if rows:
        hn, hm, _ = rows[0]
        rest = rows[1:]
        if len(rest) == hm and all(u < hn and v < hn for u, v, _ in rest):
            n, rows = hn, rest
    if n is None:
        n = 1 + max((max(u, v) for u, v, _ in rows), default=-1)
    adj = [0] * n
    for u, v, at in rows:
        if u == v:
            raise ParseError(f"self-loop at {u}", at)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def read_graph(data: bytes | str, fmt: str | None = None) -> Graph:
    """Decode ``data``; without ``fmt``, graph6 is tried when it looks like one."""
    if isinstance(data, str):
        data = data.encode()
    if fmt is None:
        stripped = data.strip()
        one_line = b"\n" not in stripped and b" " not in stripped
        fmt = "graph6" if one_line and stripped and not stripped.isdigit() else "edgelist"
    if fmt == "graph6":
        return read_graph6(data)
    if fmt == "edgelist":
        return read_edgelist(data)
    raise GraphInputError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def write_graph(g: Graph, fmt: str) -> bytes:
    if fmt == "graph6":
        return write_graph6(g) + b"\n"
    if fmt == "edgelist":
        return write_edgelist(g).encode()
    raise GraphInputError(f"unknown format {fmt!r}; expected one of {FORMATS}")
