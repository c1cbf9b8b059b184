from __future__ import annotations

import io
import random

import pytest
from hypothesis import given

from xform.formats import (
    Graph6HeaderError,
    Graph6TrailingDataError,
    Graph6TruncatedError,
    InputError,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    read_graphs,
    to_graph6,
)
from xform.generators import complete, cycle, random_gnm
from xform.graph import graph_from_edge_list

from conftest import graphs


def test_k4_hand_decode():
    # 'C' = 67 - 63 = 4 vertices; '~' = 126 - 63 = 0b111111, all six pairs present
    g = parse_graph6("C~")
    assert (g.n, g.m) == (4, 6)
    assert to_graph6(complete(4)) == "C~"


def test_k1():
    g = parse_graph6("@")
    assert (g.n, g.m) == (1, 0)
    assert to_graph6(graph_from_edge_list(1, [])) == "@"


def test_cr_round_trip():
    # 'r' = 114 - 63 = 51 = 0b110011 over pairs 01 02 12 03 13 23
    g = parse_graph6("Cr")
    assert set(g.edges) == {(0, 1), (0, 2), (1, 3), (2, 3)}
    assert to_graph6(g) == "Cr"


def test_c4_string():
    # pairs 01 02 12 03 13 23 -> 1 0 1 1 0 1 = 45 -> chr(108) = 'l'
    assert to_graph6(cycle(4)) == "Cl"


def test_optional_header_is_stripped():
    assert parse_graph6(">>graph6<<C~") == complete(4)


@pytest.mark.parametrize(
    "text, error",
    [
        ("", Graph6HeaderError),
        ("C!", Graph6HeaderError),
        ("~??", Graph6HeaderError),
        ("~??@", Graph6HeaderError),  # n=1 must use the 1-byte header
        ("~??~", Graph6TruncatedError),  # n=63 needs 326 data bytes
        ("?", Graph6HeaderError),
        ("C", Graph6TruncatedError),
        ("C~~", Graph6TrailingDataError),
        ("B@", Graph6TrailingDataError),  # n=3 uses 3 bits; low padding bit set
    ],
)
def test_parse_errors_are_distinct(text, error):
    with pytest.raises(error):
        parse_graph6(text)


def test_long_form_header():
    g = random_gnm(70, 300, seed=3)
    code = to_graph6(g)
    assert code.startswith("~?@E")  # 70 = 0b000000 000001 000110
    assert parse_graph6(code) == g


@pytest.mark.parametrize("n", list(range(1, 71)))
def test_round_trip_every_order(n):
    rng = random.Random(n)
    m = rng.randint(0, n * (n - 1) // 2)
    g = random_gnm(n, m, seed=n)
    assert parse_graph6(to_graph6(g)) == g


@given(graphs(max_n=12))
def test_round_trip_property(g):
    assert parse_graph6(to_graph6(g)) == g


def test_matches_networkx_encoder():
    nx = pytest.importorskip("networkx")
    for n in (2, 5, 17, 62, 63, 90):
        G = nx.gnp_random_graph(n, 0.3, seed=n)
        ours = to_graph6(graph_from_edge_list(n, G.edges()))
        assert ours == nx.to_graph6_bytes(G, header=False).decode().strip()


def test_edge_list_round_trip():
    text = "# a square\n4 4\n0 1\n1 2\n2 3 # last but one\n3 0\n"
    g = parse_edge_list(text)
    assert g == cycle(4)
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize(
    "text",
    ["", "4 4\n0 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n", "3 1\n0 5\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


def test_read_graphs_detects_format():
    g6 = list(read_graphs(io.StringIO("Cl\n\nC~\n")))
    assert [line for line, _ in g6] == [1, 3]
    el = list(read_graphs(io.StringIO("# header\n3 2\n0 1\n1 2\n")))
    assert len(el) == 1 and el[0][1].m == 2
    assert list(read_graphs(io.StringIO(""))) == []


def test_read_graphs_reports_line_number():
    with pytest.raises(InputError) as info:
        list(read_graphs(io.StringIO("Cl\nC~\nC\n")))
    assert info.value.line == 3
