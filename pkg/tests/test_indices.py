from __future__ import annotations

import pytest
from hypothesis import given

from xform.generators import complete, cycle, star
from xform.graph import graph_from_edge_list
from xform.indices import IndexOverflowError, IndexSet, check_order, edge_form_check, index_set

from conftest import graphs


def naive_indices(g):
    """Dense-matrix recomputation straight from the definitions."""
    n = g.n
    a = [[int(g.has_edge(i, j)) for j in range(n)] for i in range(n)]
    d = [sum(row) for row in a]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]]
    return IndexSet(
        n=n,
        m=len(pairs),
        M1=sum(x ** 2 for x in d),
        M2=sum(d[i] * d[j] for i, j in pairs),
        F=sum(x ** 3 for x in d),
        xi4=sum(x ** 4 for x in d),
        rezg3=sum(d[i] ** 2 * d[j] + d[i] * d[j] ** 2 for i, j in pairs),
    )


def test_c4():
    assert index_set(cycle(4)) == IndexSet(4, 4, 16, 16, 32, 64, 64)


def test_k13():
    assert index_set(star(4)) == IndexSet(4, 3, 12, 9, 30, 84, 36)


def test_edgeless():
    assert index_set(graph_from_edge_list(5, [])) == IndexSet(5, 0, 0, 0, 0, 0, 0)


def test_to_dict_keys():
    assert list(index_set(cycle(4)).to_dict()) == ["n", "m", "M1", "M2", "F", "xi4", "rezg3"]


def test_edge_forms_on_hand_graphs():
    # F edge form: C4 4 * (4 + 4) = 32, K1,3 3 * (9 + 1) = 30
    assert edge_form_check(cycle(4))
    assert edge_form_check(star(4))


@given(graphs())
def test_matches_naive(g):
    assert index_set(g) == naive_indices(g)


@given(graphs())
def test_edge_form_identity(g):
    assert edge_form_check(g)


@pytest.mark.parametrize("k, g", [(2, cycle(7)), (4, complete(5)), (3, complete(4))])
def test_regular(k, g):
    idx = index_set(g)
    n, m = idx.n, idx.m
    assert (idx.M1, idx.F, idx.xi4) == (n * k ** 2, n * k ** 3, n * k ** 4)
    assert (idx.M2, idx.rezg3) == (m * k ** 2, 2 * m * k ** 3)


@given(graphs(min_n=2))
def test_adding_an_edge_increases_m1_and_f(g):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing:
        return
    h = graph_from_edge_list(g.n, list(g.edges) + [missing[0]])
    assert index_set(h).M1 > index_set(g).M1
    assert index_set(h).F > index_set(g).F


def test_order_guard():
    check_order(55109)
    with pytest.raises(IndexOverflowError):
        check_order(55110)
    assert 55109 * 55108 ** 3 < 2 ** 63 <= 55110 * 55109 ** 3
