"""Deterministic graph families used to build verification corpora."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, GraphError, graph_from_edge_list

FAMILIES = ("path", "cycle", "complete", "star", "complete_bipartite", "random_gnm")


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return graph_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return graph_from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return graph_from_edge_list(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 2:
        raise GraphError(f"star needs n >= 2, got {n}")
    return graph_from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; parts are ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError(f"complete_bipartite needs a, b >= 1, got ({a}, {b})")
    return graph_from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with exactly ``m`` edges.

    Algorithm (fixed so corpora are reproducible): list the ``n(n-1)/2``
    pairs ``(u, v)``, ``u < v``, in lexicographic order and take the ones at
    the indices returned by ``random.Random(seed).sample(range(len(pairs)), m)``
    (CPython's Mersenne Twister).
    """
    if n < 1:
        raise GraphError(f"random_gnm needs n >= 1, got {n}")
    pairs = list(combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise GraphError(f"random_gnm needs 0 <= m <= {len(pairs)}, got {m}")
    picks = random.Random(seed).sample(range(len(pairs)), m)
    return graph_from_edge_list(n, (pairs[i] for i in picks))


def generate(family: str, **params: int) -> Graph:
    """Dispatch by family name, e.g. ``generate("star", n=4)``."""
    try:
        if family == "path":
            return path(params["n"])
        if family == "cycle":
            return cycle(params["n"])
        if family == "complete":
            return complete(params["n"])
        if family == "star":
            return star(params["n"])
        if family == "complete_bipartite":
            return complete_bipartite(params["a"], params["b"])
        if family == "random_gnm":
            return random_gnm(params["n"], params["m"], params["seed"])
    except KeyError as exc:
        raise GraphError(f"{family} is missing parameter {exc.args[0]!r}") from None
    raise GraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
