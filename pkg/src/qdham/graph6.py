"""graph6 encoding and decoding (McKay's format, undirected simple graphs)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import ParseError
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    start = 0
    if line.startswith(HEADER):
        start = len(HEADER)
    data = line[start:]
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} outside graph6 range 63..126", start + k)
    if not data:
        raise ParseError("empty graph6 string", start)

    def values(lo: int, hi: int) -> list[int]:
        if len(data) < hi:
            raise ParseError("truncated order header", start + len(data))
        return [ord(c) - 63 for c in data[lo:hi]]

    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    elif len(data) > 1 and data[1] == "~":
        n, pos = 0, 8
        for v in values(2, 8):
            n = (n << 6) | v
    else:
        n, pos = 0, 4
        for v in values(1, 4):
            n = (n << 6) | v
    if n < 1:
        raise ParseError("graph6 order must be at least 1", start)

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != expected:
        raise ParseError(
            f"expected {expected} adjacency bytes for n={n}, got {len(body)}",
            start + pos + min(len(body), expected),
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero padding bits", start + len(data) - 1)
    return Graph(n, tuple(rows))


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, stripped_line)`` for non-blank, non-``#`` lines."""
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path) as fh:
        return [parse_graph6(line) for _, line in iter_graph6_lines(fh)]


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")
