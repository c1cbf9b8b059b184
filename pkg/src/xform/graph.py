"""Labeled simple undirected graphs.

Vertices are the dense integer labels ``0..n-1``. Adjacency is kept as one
bitmask per vertex, so membership is a single bit test and complementation
is a mask operation.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Tuple

EdgeLabel = Tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction input."""


def canonical_edge(u: int, v: int) -> EdgeLabel:
    return (u, v) if u < v else (v, u)


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable labeled simple graph.

    Use :func:`graph_from_edge_list` (or :meth:`from_masks` when the
    adjacency masks are already known) rather than calling the constructor
    with hand-built masks.
    """

    __slots__ = ("_n", "_adj", "_m", "_edges")

    def __init__(self, n: int, adjacency: Iterable[int]):
        if n < 1:
            raise GraphError(f"graph must have at least one vertex, got n={n}")
        adj = tuple(adjacency)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for u, mask in enumerate(adj):
            if mask & ~full or mask < 0:
                raise GraphError(f"vertex {u} has a neighbour outside 0..{n - 1}")
            if (mask >> u) & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in _iter_bits(mask):
                if not (adj[v] >> u) & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        self._n = n
        self._adj = adj
        self._m = sum(mask.bit_count() for mask in adj) // 2
        self._edges: tuple[EdgeLabel, ...] | None = None

    @classmethod
    def from_masks(cls, adjacency: Iterable[int]) -> "Graph":
        adj = tuple(adjacency)
        return cls(len(adj), adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    @property
    def edges(self) -> tuple[EdgeLabel, ...]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                (u, v)
                for u in range(self._n)
                for v in _iter_bits(self._adj[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self._adj]

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in _iter_bits(frontier):
                reach |= self._adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self._n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def graph_from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with the given edges.

    Duplicate pairs (in either orientation) collapse to one edge.
    """
    if n < 1:
        raise GraphError(f"graph must have at least one vertex, got n={n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a label outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~mask & ~(1 << u) for u, mask in enumerate(g.masks)])


def graphs_equal(g: Graph, h: Graph) -> bool:
    """Labeled equality under the identity labeling (not isomorphism)."""
    return g == h
