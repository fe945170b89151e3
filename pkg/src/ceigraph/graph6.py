"""graph6 encoding and decoding.

Bits of the upper triangle are taken column by column, ``(0,1), (0,2),
(1,2), (0,3), ...``, packed big-endian into 6-bit groups and offset by 63.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"graph too large for graph6: n={n}")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def encode(g: Graph) -> str:
    n = g.n
    rows = g.rows
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = rows[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, str):
        try:
            data = text.strip().encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("graph6 text must be ASCII") from exc
    else:
        data = bytes(text).strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range 63..126")
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} edge bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing garbage after {need} edge bytes for n={n}")
    rows = [0] * n
    k = 0
    u, v = 0, 1
    for b in body:
        val = b - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                if val & ((1 << (shift + 1)) - 1):
                    raise Graph6Error("non-zero padding bits")
                break
            if (val >> shift) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
            u += 1
            if u == v:
                u = 0
                v += 1
    return Graph._trusted(n, rows)


def read_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a newline-delimited stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield decode(line)
