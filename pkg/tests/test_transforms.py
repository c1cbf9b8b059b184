from __future__ import annotations

from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given

from xform.generators import complete, cycle, path, star
from xform.graph import complement, graph_from_edge_list
from xform.indices import index_set
from xform.transforms import (
    ALL_KINDS,
    COMPLEMENT_PAIRS,
    XYZ_KINDS,
    TransformKind,
    predicted_degrees,
    transform,
    verify_complement_pairing,
)

from conftest import graphs

K = TransformKind
K1 = graph_from_edge_list(1, [])

# sign for (vertex-vertex, edge-edge, vertex-edge); None = never joined
SEMITOTAL = {"t1": ("+", None, "+"), "t2": (None, "+", "+")}


def naive_transform(g, kind):
    """Pairwise construction over V ∪ E straight from the adjacency rules."""
    signs = SEMITOTAL.get(kind.value) or tuple(kind.value)
    items = [("v", u) for u in range(g.n)] + [("e", e) for e in g.edges]
    edges = []
    for i, j in combinations(range(len(items)), 2):
        (ka, a), (kb, b) = items[i], items[j]
        if ka == kb == "v":
            sign, related = signs[0], g.has_edge(a, b)
        elif ka == kb == "e":
            sign, related = signs[1], bool(set(a) & set(b))
        else:
            vertex, edge = (a, b) if ka == "v" else (b, a)
            sign, related = signs[2], vertex in edge
        if sign is not None and related == (sign == "+"):
            edges.append((i, j))
    return graph_from_edge_list(len(items), edges)


def test_kind_spellings():
    assert len(ALL_KINDS) == 10 and len(XYZ_KINDS) == 8
    assert K.parse("+-+") is K.PMP
    assert K.parse("−−−") is K.MMM
    assert K.parse("T1") is K.T1
    assert K.xyz("-", "+", "-") is K.MPM
    with pytest.raises(ValueError):
        K.parse("++")


def test_opposite_is_involution():
    for kind in XYZ_KINDS:
        assert kind.opposite() is not kind
        assert kind.opposite().opposite() is kind
    with pytest.raises(ValueError):
        K.T1.opposite()


def test_t1_of_c4():
    t = transform(cycle(4), K.T1)
    assert (t.n, t.m) == (8, 12)
    assert Counter(t.degrees()) == Counter({4: 4, 2: 4})


def test_total_graph_of_c4():
    t = transform(cycle(4), K.PPP)
    assert (t.n, t.m) == (8, 16)
    assert set(t.degrees()) == {4}


def test_k1_degenerate():
    for kind in ALL_KINDS:
        assert transform(K1, kind) == K1


def test_labeling_convention():
    g = path(3)
    t = transform(g, K.T1)
    # vertices 0..2, then edge (0,1) -> 3, edge (1,2) -> 4
    assert set(t.edges) == {(0, 1), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4)}


def test_predicted_c4_mmm():
    p = predicted_degrees(cycle(4), K.MMM)
    assert set(p.vertex_rule.values()) == {3}
    assert set(p.edge_rule.values()) == {3}


def test_predicted_k13_mpp():
    p = predicted_degrees(star(4), K.MPP)
    assert set(p.vertex_rule.values()) == {3}
    assert p.edge_rule == {(0, 1): 4, (0, 2): 4, (0, 3): 4}


def test_predicted_p3_ppm():
    p = predicted_degrees(path(3), K.PPM)
    assert p.sequence() == [2, 2, 2, 2, 2]


@pytest.mark.parametrize("g", [cycle(4), star(4), K1], ids=["C4", "K13", "K1"])
def test_complement_pairing_hand(g):
    assert verify_complement_pairing(g)


@given(graphs(max_n=7))
def test_matches_naive_construction(g):
    for kind in ALL_KINDS:
        assert transform(g, kind) == naive_transform(g, kind), kind


@given(graphs(max_n=8))
def test_degree_rules(g):
    for kind in ALL_KINDS:
        assert transform(g, kind).degrees() == predicted_degrees(g, kind).sequence(), kind


@given(graphs(max_n=8))
def test_sizes(g):
    idx = index_set(g)
    for kind in ALL_KINDS:
        assert transform(g, kind).n == g.n + g.m
    assert transform(g, K.T1).m == 3 * g.m
    assert 2 * transform(g, K.T2).m == idx.M1 + 2 * g.m


@given(graphs(max_n=8))
def test_pairs_are_labeled_complements(g):
    for a, b in COMPLEMENT_PAIRS:
        assert a.opposite() is b
        assert transform(g, b) == complement(transform(g, a))


@given(graphs(max_n=7))
def test_total_graph_parts(g):
    nx = pytest.importorskip("networkx")
    t = transform(g, K.PPP)
    n, edges = g.n, g.edges
    assert [e for e in t.edges if e[1] < n] == list(g.edges)
    G = nx.Graph(list(edges))
    pos = {e: j for j, e in enumerate(edges)}
    line = {
        frozenset((pos[tuple(sorted(a))], pos[tuple(sorted(b))]))
        for a, b in nx.line_graph(G).edges()
    }
    got = {frozenset((a - n, b - n)) for a, b in t.edges if a >= n}
    assert got == line
    incidence = {(a, b) for a, b in t.edges if a < n <= b}
    assert incidence == {(u, n + j) for j, e in enumerate(edges) for u in e}


def test_t2_vertex_rule_is_plain_degree():
    g = star(5)
    t = transform(g, K.T2)
    assert t.degrees()[: g.n] == g.degrees()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_small_n_edge_rules_nonnegative(n):
    g = complete(n)
    for kind in (K.PPM, K.MPM):
        assert min(predicted_degrees(g, kind).sequence(), default=0) >= 0
