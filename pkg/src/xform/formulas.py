"""Closed-form F-index expressions for the transforms, evaluated from an IndexSet.

Nothing here looks at a graph: every expression is a polynomial in
``n, m, M1, M2, F, xi4, rezg3``. That keeps the formula route independent
of the construction route in :mod:`xform.verify`.

Intermediate terms are signed (``(3n - 20) F`` and ``m (n - 4)**3`` are
negative for small ``n``); only the final values are non-negative.
"""

from __future__ import annotations

from .indices import IndexSet, check_order
from .transforms import TransformKind

K = TransformKind

FORMULA_ID_OF_KIND: dict[TransformKind, str] = {
    K.T1: "thm2-t1",
    K.T2: "thm2-t2",
    K.PPP: "thm3",
    K.MMM: "thm4",
    K.PPM: "thm5",
    K.MMP: "thm6",
    K.MPP: "thm7",
    K.PMM: "thm8",
    K.PMP: "thm9",
    K.MPM: "thm10",
}
COMPLEMENT_FORMULA_ID = "prop1"

# Kinds for which edge-count and M1 closed forms exist.
AUX_KINDS = (K.PPP, K.PPM, K.MPP, K.PMP)


def aux_formula_ids(kind: TransformKind) -> tuple[str, str]:
    return f"aux-e-{kind.value}", f"aux-m1-{kind.value}"


def f_formula(idx: IndexSet, kind: TransformKind) -> int:
    """F-index of ``transform(g, kind)`` from the invariants of ``g``."""
    n, m = idx.n, idx.m
    M1, M2, F, xi4, R = idx.M1, idx.M2, idx.F, idx.xi4, idx.rezg3
    check_order(n + m)
    s = m + n - 1

    if kind is K.T1:
        return 8 * F + 8 * m
    if kind is K.T2:
        return F + xi4 + 3 * R
    if kind is K.PPP:
        return 8 * F + xi4 + 3 * R
    if kind is K.MMM:
        return (
            (3 * m + 3 * n - 11) * F
            - 3 * s * (m + n - 5) * M1
            + 6 * s * M2
            - xi4
            - 3 * R
            + (m + n) * s ** 3
            - 12 * m * s ** 2
        )
    if kind is K.PPM:
        return (
            3 * (n - 4) * F
            + 3 * (n - 4) ** 2 * M1
            + 6 * (n - 4) * M2
            + xi4
            + 3 * R
            + n * m ** 3
            + m * (n - 4) ** 3
        )
    if kind is K.MMP:
        return (
            3 * (m + 3) * F
            - 3 * (m + 3) ** 2 * M1
            + 6 * (m + 3) * M2
            - xi4
            - 3 * R
            + n * (n - 1) ** 3
            + m * (m + 3) ** 3
        )
    if kind is K.MPP:
        return n * (n - 1) ** 3 + xi4 + 3 * R
    if kind is K.PMM:
        return (
            3 * s * F
            - xi4
            - 3 * R
            - 3 * s ** 2 * M1
            + 6 * s * M2
            + m * s ** 3
            + n * m ** 3
        )
    if kind is K.PMP:
        return (
            (3 * m + 17) * F
            - 3 * (m + 3) ** 2 * M1
            + 6 * (m + 3) * M2
            - xi4
            - 3 * R
            + m * (m + 3) ** 3
        )
    if kind is K.MPM:
        return (
            (3 * n - 20) * F
            + (3 * n * n - 12 * n + 12 * m + 36) * M1
            + 6 * (n - 4) * M2
            + xi4
            + 3 * R
            + s ** 2 * (n * s - 12 * m)
            + m * (n - 4) ** 3
        )
    raise ValueError(f"no F-index formula for {kind!r}")


def f_complement_formula(idx: IndexSet) -> int:
    """F-index of the complement of ``g``."""
    n, m = idx.n, idx.m
    check_order(n + m)
    m_bar = n * (n - 1) // 2 - m
    return 2 * (n - 1) ** 2 * (m_bar - 2 * m) + 3 * (n - 1) * idx.M1 - idx.F


def aux_edge_count_formula(idx: IndexSet, kind: TransformKind) -> int:
    """Number of edges of ``transform(g, kind)`` for ``kind`` in :data:`AUX_KINDS`."""
    n, m, M1 = idx.n, idx.m, idx.M1
    if kind is K.PPP:
        twice = 4 * m + M1
    elif kind is K.PPM:
        twice = 2 * m * (n - 2) + M1
    elif kind is K.MPP:
        twice = n * (n - 1) + M1
    elif kind is K.PMP:
        twice = m * (m + 7) - M1
    else:
        raise ValueError(f"no edge-count formula for {kind.value}")
    return twice // 2


def aux_m1_formula(idx: IndexSet, kind: TransformKind) -> int:
    """First Zagreb index of ``transform(g, kind)`` for ``kind`` in :data:`AUX_KINDS`."""
    n, m = idx.n, idx.m
    M1, M2, F = idx.M1, idx.M2, idx.F
    check_order(n + m)
    if kind is K.PPP:
        return 4 * M1 + 2 * M2 + F
    if kind is K.PPM:
        return m * n * (m + n - 8) + 16 * m + 2 * (n - 4) * M1 + 2 * M2 + F
    if kind is K.MPP:
        return n * (n - 1) ** 2 + 2 * M2 + F
    if kind is K.PMP:
        return m * (m + 3) ** 2 - 2 * (m + 1) * M1 + 2 * M2 + F
    raise ValueError(f"no M1 formula for {kind.value}")
