"""Brute-force oracle and corpus harness.

The oracle builds each transform and sums cubed degrees; it never imports
:mod:`xform.formulas`. :func:`verify_graph` puts the two routes side by
side, and :func:`verify_corpus` runs that over a whole corpus.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, product
from typing import Any, Callable, Iterable, Iterator

from . import generators
from .formats import parse_graph6, to_graph6
from .formulas import (
    AUX_KINDS,
    COMPLEMENT_FORMULA_ID,
    FORMULA_ID_OF_KIND,
    aux_edge_count_formula,
    aux_formula_ids,
    aux_m1_formula,
    f_complement_formula,
    f_formula,
)
from .graph import Graph, complement, graph_from_edge_list
from .indices import check_order, first_zagreb, forgotten_index, index_set
from .transforms import ALL_KINDS, COMPLEMENT_PAIRS, TransformKind, predicted_degrees, transform

MAX_EXHAUSTIVE_N = 7


def oracle_f(g: Graph, kind: TransformKind) -> int:
    """F-index of the constructed transform."""
    check_order(g.n + g.m)
    return forgotten_index(transform(g, kind))


@dataclass(frozen=True)
class FormulaCheck:
    formula_value: int | None
    oracle_value: int | None
    error: str | None = None

    @property
    def match(self) -> bool:
        return self.error is None and self.formula_value == self.oracle_value

    @property
    def difference(self) -> int | None:
        if self.formula_value is None or self.oracle_value is None:
            return None
        return self.formula_value - self.oracle_value

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "formula_value": self.formula_value,
            "oracle_value": self.oracle_value,
            "match": self.match,
            "difference": self.difference,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class VerificationReport:
    graph_id: str
    per_formula: dict[str, FormulaCheck] = field(default_factory=dict)
    degree_rule_match: bool = False
    complement_pairing_match: bool = False
    connected: bool | None = None
    errors: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            self.degree_rule_match
            and self.complement_pairing_match
            and not self.errors
            and all(c.match for c in self.per_formula.values())
        )

    @property
    def n_checks(self) -> int:
        return len(self.per_formula) + 2

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "graph_id": self.graph_id,
            "per_formula": {k: v.to_dict() for k, v in self.per_formula.items()},
            "degree_rule_match": self.degree_rule_match,
            "complement_pairing_match": self.complement_pairing_match,
            "connected": self.connected,
        }
        if self.errors:
            out["errors"] = dict(self.errors)
        return out


def _check(formula: Callable[[], int], oracle: Callable[[], int]) -> FormulaCheck:
    fv = ov = None
    try:
        fv = formula()
        ov = oracle()
    except (ValueError, OverflowError) as exc:
        return FormulaCheck(fv, ov, f"{type(exc).__name__}: {exc}")
    return FormulaCheck(fv, ov)


def degree_rules_hold(g: Graph, kind: TransformKind, built: Graph | None = None) -> bool:
    t = built if built is not None else transform(g, kind)
    return t.degrees() == predicted_degrees(g, kind).sequence()


def verify_graph(g: Graph) -> VerificationReport:
    """Compare every closed form with the constructed transforms of ``g``."""
    report = VerificationReport(to_graph6(g), connected=g.is_connected())
    try:
        idx = index_set(g)
        built = {kind: transform(g, kind) for kind in ALL_KINDS}
    except (ValueError, OverflowError) as exc:
        report.errors["construction"] = f"{type(exc).__name__}: {exc}"
        return report

    report.per_formula[COMPLEMENT_FORMULA_ID] = _check(
        lambda: f_complement_formula(idx), lambda: forgotten_index(complement(g))
    )
    for kind in ALL_KINDS:
        report.per_formula[FORMULA_ID_OF_KIND[kind]] = _check(
            lambda: f_formula(idx, kind), lambda: forgotten_index(built[kind])
        )
    for kind in AUX_KINDS:
        e_id, _ = aux_formula_ids(kind)
        report.per_formula[e_id] = _check(
            lambda: aux_edge_count_formula(idx, kind), lambda: built[kind].m
        )
    for kind in AUX_KINDS:
        _, m1_id = aux_formula_ids(kind)
        report.per_formula[m1_id] = _check(
            lambda: aux_m1_formula(idx, kind), lambda: first_zagreb(built[kind])
        )

    try:
        report.degree_rule_match = all(degree_rules_hold(g, k, built[k]) for k in ALL_KINDS)
    except (ValueError, AssertionError) as exc:
        report.errors["degree-rules"] = f"{type(exc).__name__}: {exc}"
    report.complement_pairing_match = all(
        built[b] == complement(built[a]) for a, b in COMPLEMENT_PAIRS
    )
    return report


def _verify_graph6(text: str) -> VerificationReport:
    return verify_graph(parse_graph6(text))


# ---------------------------------------------------------------------------
# Corpora


@dataclass(frozen=True)
class FamilyCall:
    family: str
    params: tuple[tuple[str, int], ...]

    def build(self) -> Graph:
        return generators.generate(self.family, **dict(self.params))

    def __str__(self) -> str:
        return self.family + ":" + "/".join(f"{k}={v}" for k, v in self.params)


_DEFAULT_PARAM = {"path": "n", "cycle": "n", "complete": "n", "star": "n"}


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise ValueError(f"bad integer range {text!r}") from None
    if b < a:
        raise ValueError(f"empty range {text!r}")
    return range(a, b + 1)


def parse_family_calls(text: str) -> list[FamilyCall]:
    """Parse a family list such as ``"cycle:3..12,star:3..12,random_gnm:n=8/m=12/seed=42"``.

    Each item is ``family:ARGS``. ARGS is either a bare value or range
    (the ``n`` parameter) or ``key=value`` pairs joined by ``/``. Ranges
    ``A..B`` are inclusive and expand as a cartesian product.
    """
    calls: list[FamilyCall] = []
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        family, sep, args = item.partition(":")
        family = family.strip()
        if family not in generators.FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        if not sep or not args.strip():
            raise ValueError(f"family {family!r} needs parameters, e.g. {family}:3..6")
        if "=" in args:
            keys, ranges = [], []
            for part in args.split("/"):
                k, eq, v = part.partition("=")
                if not eq:
                    raise ValueError(f"expected key=value in {item!r}")
                keys.append(k.strip())
                ranges.append(_parse_range(v.strip()))
        else:
            if family not in _DEFAULT_PARAM:
                raise ValueError(f"family {family!r} needs key=value parameters")
            keys, ranges = [_DEFAULT_PARAM[family]], [_parse_range(args.strip())]
        for values in product(*ranges):
            calls.append(FamilyCall(family, tuple(zip(keys, values))))
    return calls


@dataclass(frozen=True)
class CorpusSpec:
    """Which graphs to verify.

    ``mode`` is ``"exhaustive"`` (every labeled graph on 1..max_n vertices),
    ``"families"``, ``"random"`` or ``"input"`` (an explicit graph list).
    """

    mode: str
    max_n: int | None = None
    families: tuple[FamilyCall, ...] = ()
    count: int | None = None
    n_min: int | None = None
    n_max: int | None = None
    seed: int | None = None
    source: str | None = None
    dedupe: bool = False
    graphs: tuple[Graph, ...] | None = field(default=None, compare=False, repr=False)

    @classmethod
    def exhaustive(cls, max_n: int, dedupe: bool = False) -> "CorpusSpec":
        return cls("exhaustive", max_n=max_n, dedupe=dedupe)

    @classmethod
    def from_families(cls, calls: Iterable[FamilyCall] | str, dedupe: bool = False) -> "CorpusSpec":
        if isinstance(calls, str):
            calls = parse_family_calls(calls)
        return cls("families", families=tuple(calls), dedupe=dedupe)

    @classmethod
    def random(cls, count: int, n_min: int, n_max: int, seed: int, dedupe: bool = False) -> "CorpusSpec":
        return cls("random", count=count, n_min=n_min, n_max=n_max, seed=seed, dedupe=dedupe)

    @classmethod
    def from_graphs(cls, graphs: Iterable[Graph], source: str = "<input>", dedupe: bool = False) -> "CorpusSpec":
        return cls("input", source=source, graphs=tuple(graphs), dedupe=dedupe)

    def validate(self) -> None:
        if self.mode == "exhaustive":
            if self.max_n is None or not 1 <= self.max_n <= MAX_EXHAUSTIVE_N:
                raise ValueError(f"exhaustive max_n must be in 1..{MAX_EXHAUSTIVE_N}, got {self.max_n}")
        elif self.mode == "random":
            if self.count is None or self.count < 0:
                raise ValueError("random corpus needs count >= 0")
            if self.n_min is None or self.n_max is None or not 1 <= self.n_min <= self.n_max:
                raise ValueError(f"random corpus needs 1 <= nmin <= nmax, got {self.n_min}..{self.n_max}")
            if self.seed is None:
                raise ValueError("random corpus needs a seed")
        elif self.mode == "families":
            if not self.families:
                raise ValueError("families corpus is empty")
        elif self.mode == "input":
            if self.graphs is None:
                raise ValueError("input corpus has no graphs")
        else:
            raise ValueError(f"unknown corpus mode {self.mode!r}")

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"mode": self.mode}
        if self.mode == "exhaustive":
            out["max_n"] = self.max_n
        elif self.mode == "families":
            out["families"] = [str(c) for c in self.families]
        elif self.mode == "random":
            out.update(count=self.count, n_min=self.n_min, n_max=self.n_max, seed=self.seed)
        else:
            out["source"] = self.source
        out["dedupe"] = self.dedupe
        return out


def exhaustive_graphs(max_n: int) -> Iterator[Graph]:
    """Every labeled simple graph on 1..max_n vertices, in graph6 order.

    The graph6 body is the upper-triangle bit vector with pair (0, 1) as the
    most significant bit, so counting up through the integers visits the
    strings of each order in lexicographic order.
    """
    for n in range(1, max_n + 1):
        pairs = [(u, v) for v in range(1, n) for u in range(v)]
        k = len(pairs)
        for code in range(1 << k):
            yield graph_from_edge_list(
                n, [pairs[i] for i in range(k) if (code >> (k - 1 - i)) & 1]
            )


def random_graphs(count: int, n_min: int, n_max: int, seed: int) -> list[Graph]:
    """Draw ``count`` G(n, m) graphs: n and m uniform, then :func:`generators.random_gnm`."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        m = rng.randint(0, n * (n - 1) // 2)
        out.append(generators.random_gnm(n, m, rng.getrandbits(32)))
    return out


def corpus_graph6(spec: CorpusSpec) -> Iterator[str]:
    """graph6 strings of the corpus, in deterministic (graph6-lexicographic) order."""
    spec.validate()
    if spec.mode == "exhaustive":
        # already sorted and duplicate-free
        yield from (to_graph6(g) for g in exhaustive_graphs(spec.max_n))
        return
    if spec.mode == "families":
        graphs: Iterable[Graph] = [c.build() for c in spec.families]
    elif spec.mode == "random":
        graphs = random_graphs(spec.count, spec.n_min, spec.n_max, spec.seed)
    else:
        graphs = spec.graphs or ()
    codes = sorted(to_graph6(g) for g in graphs)
    if spec.dedupe:
        codes = sorted(set(codes))
    yield from codes


def _batched(it: Iterable[str], size: int) -> Iterator[list[str]]:
    it = iter(it)
    while batch := list(islice(it, size)):
        yield batch


def iter_reports(spec: CorpusSpec, threads: int = 1) -> Iterator[VerificationReport]:
    """Verify every corpus graph; reports come back in corpus order for any ``threads``."""
    codes = corpus_graph6(spec)
    if threads <= 1:
        for code in codes:
            yield _verify_graph6(code)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for batch in _batched(codes, 512 * threads):
            yield from pool.map(_verify_graph6, batch, chunksize=32)


@dataclass
class CorpusReport:
    spec: CorpusSpec
    total: int
    failures: list[VerificationReport]
    elapsed_ms: float
    reports: list[VerificationReport] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        """JSON-ready dict; ``elapsed_ms`` is null unless ``timing`` so output is reproducible."""
        return {
            "spec": self.spec.to_dict(),
            "total": self.total,
            "failures": [r.to_dict() for r in self.failures],
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else None,
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        write_csv(buf, self.reports if self.reports is not None else self.failures)
        return buf.getvalue()


CSV_COLUMNS = ("graph6", "formula_id", "formula_value", "oracle_value", "match")


def write_csv(out: io.TextIOBase, reports: Iterable[VerificationReport]) -> None:
    """One row per check. Degree-rule and pairing checks have empty value columns."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        for fid, c in r.per_formula.items():
            writer.writerow([r.graph_id, fid, c.formula_value, c.oracle_value, str(c.match).lower()])
        writer.writerow([r.graph_id, "degree-rules", "", "", str(r.degree_rule_match).lower()])
        writer.writerow(
            [r.graph_id, "complement-pairing", "", "", str(r.complement_pairing_match).lower()]
        )


def verify_corpus(spec: CorpusSpec, threads: int = 1, keep_reports: bool = False) -> CorpusReport:
    spec.validate()
    start = time.perf_counter()
    total = 0
    failures: list[VerificationReport] = []
    kept: list[VerificationReport] | None = [] if keep_reports else None
    for report in iter_reports(spec, threads):
        total += 1
        if not report.passed:
            failures.append(report)
        if kept is not None:
            kept.append(report)
    elapsed = (time.perf_counter() - start) * 1000.0
    return CorpusReport(spec, total, failures, elapsed, kept)
