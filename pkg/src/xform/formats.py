"""graph6 and edge-list text formats.

graph6 follows the format used by nauty/geng: a size header followed by the
upper triangle of the adjacency matrix, column by column, packed six bits
per printable byte (offset 63). Only the undirected short form (n <= 62),
the 4-byte form (n <= 258047) and the 8-byte form are handled.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import Graph, GraphError, graph_from_edge_list

_HEADER = ">>graph6<<"
_MAX_FOUR_BYTE = 258047
_MAX_EIGHT_BYTE = 68719476735


class Graph6Error(ValueError):
    """Base class for graph6 decoding failures."""


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6TrailingDataError(Graph6Error):
    pass


class InputError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise Graph6HeaderError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6HeaderError("incomplete 8-byte size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        if n <= _MAX_FOUR_BYTE:
            raise Graph6HeaderError(f"n={n} must use a shorter size header")
        return n, 8
    if len(data) < 4:
        raise Graph6HeaderError("incomplete 4-byte size header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    if n <= 62:
        raise Graph6HeaderError(f"n={n} must use the 1-byte size header")
    return n, 4


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= _MAX_FOUR_BYTE:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= _MAX_EIGHT_BYTE:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} is too large for graph6")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if s.startswith(":") or s.startswith("&") or s.startswith(";"):
        raise Graph6HeaderError("sparse6/digraph6 input is not supported")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6HeaderError("graph6 strings are printable ASCII") from None
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6HeaderError(f"invalid graph6 character {chr(b)!r} at offset {pos}")

    n, start = _decode_size(data)
    if n < 1:
        raise Graph6HeaderError("graph6 string encodes an empty graph (n=0)")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nbytes:
        raise Graph6TruncatedError(f"expected {nbytes} data bytes for n={n}, found {len(body)}")
    if len(body) > nbytes:
        raise Graph6TrailingDataError(f"{len(body) - nbytes} unexpected bytes after graph data")

    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6TrailingDataError("non-zero padding bits")
    bits >>= pad

    adj = [0] * n
    k = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if (bits >> k) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k -= 1
    return Graph(n, adj)


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = 0
    nbits = 0
    masks = g.masks
    for v in range(1, n):
        col = masks[v]
        for u in range(v):
            bits = (bits << 1) | ((col >> u) & 1)
        nbits += v
    pad = (-nbits) % 6
    bits <<= pad
    total = nbits + pad
    out = [_encode_size(n)]
    out.extend(chr(((bits >> s) & 63) + 63) for s in range(total - 6, -1, -6))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors carry the line number."""
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            yield lineno, parse_graph6(s)
        except (Graph6Error, GraphError) as exc:
            raise InputError(str(exc), lineno) from exc


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; ``#`` starts a comment."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise InputError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    try:
        return graph_from_edge_list(n, edges)
    except GraphError as exc:
        raise InputError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graphs(stream: IO[str]) -> Iterator[tuple[int, Graph]]:
    """Read a stream of graph6 lines, or a single edge-list document.

    The first significant line decides: two integers means edge list.
    """
    lines = iter(stream)
    buffered: list[str] = []
    for line in lines:
        buffered.append(line)
        s = line.split("#", 1)[0].strip()
        if s:
            break
    else:
        return
    first = buffered[-1].split("#", 1)[0].split()
    if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
        text = "".join(buffered) + "".join(lines)
        yield 1, parse_edge_list(text)
        return

    def chained() -> Iterator[str]:
        yield from buffered
        yield from lines

    yield from iter_graph6(chained())
