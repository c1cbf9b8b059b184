"""Semitotal graphs T1, T2 and the eight total transformation graphs G^xyz.

Every transform lives on ``V(G) ∪ E(G)``. Labels ``0..n-1`` are the
vertices of ``g``; label ``n + j`` is ``g.edges[j]``, so edge-vertices are
in lexicographic :data:`~xform.graph.EdgeLabel` order. The fixed labeling
makes complementary transforms comparable by labeled equality.

Adjacency is decided separately for the three pair classes. For each class
a transform either follows the relation of ``g`` (``+``), its negation
(``-``), or never joins the pair (semitotal graphs only):

* vertex-vertex: adjacent in ``g``
* edge-edge: the two edges share an endpoint
* vertex-edge: the vertex is an endpoint of the edge
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .graph import EdgeLabel, Graph, complement

Rule = Optional[bool]  # True: "+", False: "-", None: never adjacent


class TransformKind(Enum):
    T1 = "t1"
    T2 = "t2"
    PPP = "+++"
    PPM = "++-"
    PMP = "+-+"
    PMM = "+--"
    MPP = "-++"
    MPM = "-+-"
    MMP = "--+"
    MMM = "---"

    @classmethod
    def parse(cls, text: str) -> "TransformKind":
        """Accept the CLI spelling; Unicode minus signs are normalised."""
        key = text.strip().lower().replace("−", "-")
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown transform kind {text!r}; expected one of {choices}") from None

    @classmethod
    def xyz(cls, x: str, y: str, z: str) -> "TransformKind":
        return cls.parse(x + y + z)

    @property
    def is_xyz(self) -> bool:
        return self not in (TransformKind.T1, TransformKind.T2)

    @property
    def rules(self) -> tuple[Rule, Rule, Rule]:
        """``(vertex-vertex, edge-edge, vertex-edge)`` adjacency rules."""
        if self is TransformKind.T1:
            return (True, None, True)
        if self is TransformKind.T2:
            return (None, True, True)
        return tuple(c == "+" for c in self.value)  # type: ignore[return-value]

    def opposite(self) -> "TransformKind":
        if not self.is_xyz:
            raise ValueError(f"{self.value} has no opposite sign-triple")
        flip = {"+": "-", "-": "+"}
        return TransformKind("".join(flip[c] for c in self.value))


XYZ_KINDS = tuple(k for k in TransformKind if k.is_xyz)
ALL_KINDS = tuple(TransformKind)
COMPLEMENT_PAIRS = (
    (TransformKind.PPP, TransformKind.MMM),
    (TransformKind.PPM, TransformKind.MMP),
    (TransformKind.MPP, TransformKind.PMM),
    (TransformKind.PMP, TransformKind.MPM),
)


def _apply(rule: Rule, related: int, full: int) -> int:
    if rule is None:
        return 0
    return related if rule else full & ~related


def transform(g: Graph, kind: TransformKind) -> Graph:
    n, edges = g.n, g.edges
    m = len(edges)
    vv, ee, ve = kind.rules
    all_vertices = (1 << n) - 1
    all_edges = (1 << m) - 1

    incident = [0] * n
    for j, (a, b) in enumerate(edges):
        incident[a] |= 1 << j
        incident[b] |= 1 << j

    adj = []
    for u in range(n):
        vpart = _apply(vv, g.masks[u], all_vertices & ~(1 << u))
        epart = _apply(ve, incident[u], all_edges)
        adj.append(vpart | (epart << n))
    for j, (a, b) in enumerate(edges):
        own = 1 << j
        vpart = _apply(ve, (1 << a) | (1 << b), all_vertices)
        epart = _apply(ee, (incident[a] | incident[b]) & ~own, all_edges & ~own)
        adj.append(vpart | (epart << n))
    return Graph(n + m, adj)


# Degree of each transform vertex in terms of g. Vertex rules take
# (d(u), n, m); edge rules take (d(u) + d(v), n, m) for the edge uv.
DegreeRule = Callable[[int, int, int], int]

VERTEX_DEGREE_RULES: dict[TransformKind, DegreeRule] = {
    TransformKind.T1: lambda d, n, m: 2 * d,
    TransformKind.T2: lambda d, n, m: d,
    TransformKind.PPP: lambda d, n, m: 2 * d,
    TransformKind.MMM: lambda d, n, m: m + n - 1 - 2 * d,
    TransformKind.PPM: lambda d, n, m: m,
    TransformKind.MMP: lambda d, n, m: n - 1,
    TransformKind.MPP: lambda d, n, m: n - 1,
    TransformKind.PMM: lambda d, n, m: m,
    TransformKind.PMP: lambda d, n, m: 2 * d,
    TransformKind.MPM: lambda d, n, m: m + n - 1 - 2 * d,
}

EDGE_DEGREE_RULES: dict[TransformKind, DegreeRule] = {
    TransformKind.T1: lambda s, n, m: 2,
    TransformKind.T2: lambda s, n, m: s,
    TransformKind.PPP: lambda s, n, m: s,
    TransformKind.MMM: lambda s, n, m: m + n - 1 - s,
    TransformKind.PPM: lambda s, n, m: s + n - 4,
    TransformKind.MMP: lambda s, n, m: m + 3 - s,
    TransformKind.MPP: lambda s, n, m: s,
    TransformKind.PMM: lambda s, n, m: m + n - 1 - s,
    TransformKind.PMP: lambda s, n, m: m + 3 - s,
    TransformKind.MPM: lambda s, n, m: s + n - 4,
}


@dataclass(frozen=True)
class DegreePrediction:
    vertex_rule: dict[int, int]
    edge_rule: dict[EdgeLabel, int]

    def sequence(self) -> list[int]:
        """Predicted degrees in transform label order."""
        return [self.vertex_rule[u] for u in sorted(self.vertex_rule)] + [
            self.edge_rule[e] for e in sorted(self.edge_rule)
        ]


def predicted_degrees(g: Graph, kind: TransformKind) -> DegreePrediction:
    n, m = g.n, g.m
    deg = g.degrees()
    vrule = VERTEX_DEGREE_RULES[kind]
    erule = EDGE_DEGREE_RULES[kind]
    vertex = {u: vrule(deg[u], n, m) for u in range(n)}
    edge = {(u, v): erule(deg[u] + deg[v], n, m) for u, v in g.edges}
    # n - 4 terms go negative for tiny n, but the full degree must not
    assert all(0 <= d <= n + m - 1 for d in vertex.values())
    assert all(0 <= d <= n + m - 1 for d in edge.values())
    return DegreePrediction(vertex, edge)


def verify_complement_pairing(g: Graph) -> bool:
    """Check ``transform(g, opposite(k)) == complement(transform(g, k))`` for the four pairs."""
    return all(transform(g, b) == complement(transform(g, a)) for a, b in COMPLEMENT_PAIRS)
