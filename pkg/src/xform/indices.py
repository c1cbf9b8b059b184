"""Degree-based invariants: Zagreb indices, F-index, xi4 and ReZG3.

All values are exact integers. Python ints do not wrap, but results are
meant to be portable to 64-bit consumers, so graphs whose order exceeds
:data:`MAX_SAFE_ORDER` (for the graph itself or any transform of it) are
rejected by :func:`check_order`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph import Graph

# Largest N with N * (N - 1)**3 < 2**63, the biggest term the closed forms
# evaluate when N = n + m.
MAX_SAFE_ORDER = 55109


class IndexOverflowError(OverflowError):
    pass


def check_order(order: int) -> None:
    if order > MAX_SAFE_ORDER:
        raise IndexOverflowError(
            f"order {order} exceeds the 64-bit safe bound {MAX_SAFE_ORDER}"
        )


@dataclass(frozen=True)
class IndexSet:
    n: int
    m: int
    M1: int
    M2: int
    F: int
    xi4: int
    rezg3: int

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


def index_set(g: Graph) -> IndexSet:
    check_order(g.n + g.m)
    deg = g.degrees()
    m1 = f = xi4 = 0
    for d in deg:
        d2 = d * d
        m1 += d2
        f += d2 * d
        xi4 += d2 * d2
    m2 = rezg3 = 0
    for u, v in g.edges:
        p = deg[u] * deg[v]
        m2 += p
        rezg3 += p * (deg[u] + deg[v])
    return IndexSet(g.n, g.m, m1, m2, f, xi4, rezg3)


def forgotten_index(g: Graph) -> int:
    """Sum of cubed degrees."""
    return sum(d ** 3 for d in g.degrees())


def first_zagreb(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def edge_form_check(g: Graph) -> bool:
    """Check the edge-sum forms of M1, F and xi4 against their vertex sums.

    Each vertex contributes ``d**k`` once per incident edge as ``d**(k-1)``,
    so summing ``d(u)**(k-1) + d(v)**(k-1)`` over edges recovers
    ``sum(d**k)`` over vertices.
    """
    deg = g.degrees()
    vertex = [sum(d ** k for d in deg) for k in (2, 3, 4)]
    edge = [0, 0, 0]
    for u, v in g.edges:
        du, dv = deg[u], deg[v]
        edge[0] += du + dv
        edge[1] += du * du + dv * dv
        edge[2] += du ** 3 + dv ** 3
    return vertex == edge
