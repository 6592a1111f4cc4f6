"""Bit-exact graph6 parsing and emission, plus a plain edge-list reader.

graph6 packs the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
column by column, six bits per printable byte (value 63..126, bit 5
first), after a size header: one byte n+63 for n <= 62, or '~' plus
three bytes holding n in 18 big-endian bits for larger n.  Only the
plain undirected variant is accepted; sparse6 (':') and digraph6 ('&')
records fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .errors import (
    BadByte,
    BadLength,
    CapacityExceeded,
    Graph6Error,
    InvalidEdge,
    MalformedHeader,
    Sparse6Unsupported,
    TrifreeError,
)
from .graphs import MAX_VERTICES, Graph, from_rows, make_graph


@dataclass(frozen=True)
class GraphRecord:
    """A parsed graph together with where it came from."""

    graph: Graph
    source: str


def _decode_header(data: bytes) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise MalformedHeader("empty record")
    b0 = data[0]
    if b0 == ord(":"):
        raise Sparse6Unsupported("sparse6 record (leading ':')")
    if b0 == ord("&"):
        raise MalformedHeader("digraph6 record (leading '&') unsupported")
    if not 63 <= b0 <= 126:
        raise MalformedHeader(f"size byte {b0} outside 63..126")
    if b0 != 126:
        return b0 - 63, 1
    if len(data) < 4:
        raise MalformedHeader("truncated multi-byte size field")
    if data[1] == 126:
        # 8-byte form encodes n >= 258048, far beyond the 64-vertex cap.
        raise CapacityExceeded("graph6 record encodes n >= 258048")
    n = 0
    for b in data[1:4]:
        if not 63 <= b <= 126:
            raise MalformedHeader(f"size byte {b} outside 63..126")
        n = (n << 6) | (b - 63)
    if n < 63:
        raise MalformedHeader(f"non-canonical multi-byte size for n={n}")
    return n, 4


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 record into a Graph.

    Accepts bytes or str; surrounding whitespace/newlines are ignored.
    """
    if isinstance(line, str):
        line = line.encode("ascii")
    data = line.strip()
    n, consumed = _decode_header(data)
    if n == 0:
        raise MalformedHeader("graph6 record with zero vertices")
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"graph6 record has n={n} > {MAX_VERTICES}")
    body = data[consumed:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise BadLength(f"expected {need} adjacency bytes, got {len(body)}")
    rows = [0] * n
    idx = 0  # position in the packed bit sequence
    col, row = 1, 0
    for b in body:
        if not 63 <= b <= 126:
            raise BadByte(f"adjacency byte {b} outside 63..126")
        group = b - 63
        for shift in range(5, -1, -1):
            if idx >= nbits:
                if group >> shift & 1:
                    raise BadByte("nonzero padding bits")
                continue
            if group >> shift & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
            row += 1
            if row == col:
                col += 1
                row = 0
    return from_rows(rows)


def emit_graph6(g: Graph) -> bytes:
    """Encode a Graph as one graph6 record (no trailing newline)."""
    if g.n <= 62:
        head = bytes([g.n + 63])
    else:
        head = bytes([126, (g.n >> 12 & 63) + 63, (g.n >> 6 & 63) + 63,
                      (g.n & 63) + 63])
    out = bytearray(head)
    group, filled = 0, 0
    for col in range(1, g.n):
        for row in range(col):
            group = group << 1 | (g.adj[row] >> col & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group, filled = 0, 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return bytes(out)


def read_graph_stream(
    stream: IO[bytes] | IO[str] | Iterable[bytes] | Iterable[str],
    source: str = "<stream>",
    on_error: str = "abort",
    error_log: list[tuple[int, str]] | None = None,
) -> Iterator[GraphRecord]:
    """Yield GraphRecords from a line-oriented graph6 stream.

    Blank lines are skipped.  Under ``on_error="abort"`` the first bad
    line re-raises; under ``"skip"`` bad lines are appended to
    ``error_log`` as (line number, message) and reading continues.
    """
    if on_error not in ("abort", "skip"):
        raise ValueError(f"on_error must be 'abort' or 'skip', got {on_error!r}")
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip() if isinstance(raw, bytes) else raw.strip().encode("ascii", "replace")
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except (Graph6Error, CapacityExceeded) as exc:
            if on_error == "abort":
                raise type(exc)(f"{source}:{lineno}: {exc}") from exc
            if error_log is not None:
                error_log.append((lineno, str(exc)))
            continue
        yield GraphRecord(g, f"{source}:{lineno}")


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: first line n, then one "i j" per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise TrifreeError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise TrifreeError(f"bad vertex count line {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InvalidEdge(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return make_graph(n, edges)
