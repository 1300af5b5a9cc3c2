"""Bilinear fusion of formal sums and the exhaustive ring-axiom verifier."""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import reference
from .formal import FormalSum
from .labels import Level, OspFusionError, OspOrbLabel, Twist, as_level, enumerate_labels, unit_label
from .orbifold import (
    component_weight,
    counts,
    decompose,
    dual,
    fuse,
    fuse_twisted_twisted,
    weight_collisions,
    weight_profile,
)
from .sl2 import sl2_weight
from .virasoro import vir_central_charge, vir_weight

MAX_COUNTEREXAMPLES = 20
DEFAULT_MAX_ASSOC_LEVEL = 3

CHECKS = (
    "counts",
    "unit",
    "commutativity",
    "associativity",
    "duality_frobenius",
    "symmetry_identity",
    "formula_fidelity",
    "weight_additivity",
    "weight_collisions",
    "grouping_independence",
)


class UnknownCheckError(OspFusionError, ValueError):
    pass


def fuse_sums(level: Level | int, a: FormalSum, b: FormalSum, product: Callable | None = None) -> FormalSum:
    """Bilinear extension of ``product`` (orbifold fusion by default)."""
    level = as_level(level)
    product = product or (lambda x, y: fuse(level, x, y))
    acc: list = []
    for x, m in a.items():
        for y, n in b.items():
            acc.extend((z, m * n * c) for z, c in product(x, y).items())
    return FormalSum(acc)


@dataclass
class VerificationReport:
    check: str
    level: int
    passed: bool
    cases: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    total_counterexamples: int = 0
    findings: list[dict] = field(default_factory=list)
    skipped: bool = False
    note: str = ""
    elapsed: float = 0.0

    def add_failure(self, op: str, inputs: Iterable, expected, got):
        self.total_counterexamples += 1
        self.passed = False
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(
                {"op": op, "inputs": [str(x) for x in inputs], "expected": str(expected), "got": str(got)}
            )

    def to_dict(self, with_timing: bool = True) -> dict:
        d = {
            "check": self.check,
            "level": self.level,
            "passed": self.passed,
            "cases": self.cases,
            "skipped": self.skipped,
            "note": self.note,
            "total_counterexamples": self.total_counterexamples,
            "counterexamples": self.counterexamples,
            "findings": self.findings,
        }
        if with_timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def summary(self) -> str:
        status = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        line = f"{status} {self.check} k={self.level} cases={self.cases}"
        if self.total_counterexamples:
            line += f" counterexamples={self.total_counterexamples}"
        if self.findings:
            line += f" findings={len(self.findings)}"
        return line


class FusionTable:
    """Structure constants ``N[a, b, c]`` of the orbifold fusion ring at one level."""

    def __init__(self, level: Level | int):
        self.level = as_level(level)
        self.labels = enumerate_labels(self.level)
        self.index = {lab: n for n, lab in enumerate(self.labels)}
        size = len(self.labels)
        self.N = np.zeros((size, size, size), dtype=np.int64)
        for a, x in enumerate(self.labels):
            for b, y in enumerate(self.labels):
                for z, m in fuse(self.level, x, y).items():
                    self.N[a, b, self.index[z]] = m
        self.dual_index = np.array([self.index[dual(self.level, x)] for x in self.labels])

    def product(self, a: int, b: int) -> FormalSum:
        return FormalSum((self.labels[c], int(m)) for c, m in enumerate(self.N[a, b]) if m)

    def vector_sum(self, v) -> FormalSum:
        return FormalSum((self.labels[c], int(m)) for c, m in enumerate(v) if m)


def _associativity_block(N: np.ndarray, a: int) -> list[tuple[int, int]]:
    size = N.shape[0]
    flat = N.reshape(size, size * size)
    # left[b, c, e] = sum_d N[a,b,d] N[d,c,e]; right[b, c, e] = sum_d N[b,c,d] N[a,d,e]
    left = (N[a] @ flat).reshape(size, size, size)
    right = (N.reshape(size * size, size) @ N[a]).reshape(size, size, size)
    bad = np.argwhere((left != right).any(axis=2))
    return [(a, int(b), int(c)) for b, c in bad]


def _check_counts(level: Level, rep: VerificationReport, **_):
    k = level.k
    got = counts(level)
    expected = {"untwisted_even_algebra": 2 * (2 * k + 2), "twisted_even_algebra": 4 * k + 4, "orbifold": 16 * k + 16}
    rep.cases = 1
    if got.as_dict() != expected:
        rep.add_failure("counts", [k], expected, got.as_dict())
    labels = enumerate_labels(level)
    if len(set(labels)) != len(labels):
        rep.add_failure("distinct labels", [k], "no duplicates", f"{len(labels) - len(set(labels))} duplicates")


def _check_unit(level: Level, rep: VerificationReport, table: FusionTable, **_):
    e = table.index[unit_label()]
    for a, x in enumerate(table.labels):
        rep.cases += 1
        want = FormalSum.of(x)
        for got, inputs in ((table.product(e, a), (unit_label(), x)), (table.product(a, e), (x, unit_label()))):
            if got != want:
                rep.add_failure("unit", inputs, want, got)


def _check_commutativity(level: Level, rep: VerificationReport, table: FusionTable, **_):
    N = table.N
    size = len(table.labels)
    rep.cases = size * size
    bad = np.argwhere((N != N.transpose(1, 0, 2)).any(axis=2))
    for a, b in bad:
        rep.add_failure("a x b = b x a", (table.labels[a], table.labels[b]), table.product(b, a), table.product(a, b))


def _check_associativity(level: Level, rep: VerificationReport, table: FusionTable, max_assoc_level: int, workers: int, **_):
    if level.k > max_assoc_level:
        rep.skipped = True
        rep.note = f"level above max_assoc_level={max_assoc_level}"
        return
    N = table.N
    size = len(table.labels)
    rep.cases = size ** 3
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(lambda a: _associativity_block(N, a), range(size)))
    else:
        blocks = [_associativity_block(N, a) for a in range(size)]
    for a, b, c in sorted(t for block in blocks for t in block):
        left = N[a, b] @ N[:, c]
        right = N[b, c] @ N[a]
        rep.add_failure(
            "(a x b) x c = a x (b x c)",
            (table.labels[i] for i in (a, b, c)),
            table.vector_sum(right),
            table.vector_sum(left),
        )


def _check_duality(level: Level, rep: VerificationReport, table: FusionTable, **_):
    for x in table.labels:
        rep.cases += 1
        y = dual(level, x)
        if dual(level, y) != x:
            rep.add_failure("dual(dual(a)) = a", (x,), x, dual(level, y))
        if y.twist is not x.twist:
            rep.add_failure("dual keeps twist", (x,), x.twist.token, y.twist.token)
        if not x.twisted and weight_profile(level, x) != weight_profile(level, y):
            rep.add_failure("dual keeps weights", (x,), weight_profile(level, x), weight_profile(level, y))
    for src, dst in reference.TWISTED_DUAL_CASES[level.k % 4]:
        for r in range(1, level.r_max + 1):
            rep.cases += 1
            x = OspOrbLabel(Twist.TWISTED, src, r)
            want = OspOrbLabel(Twist.TWISTED, dst, level.p - r)
            if dual(level, x) != want:
                rep.add_failure("printed dual", (x,), want, dual(level, x))
    e = table.index[unit_label()]
    size = len(table.labels)
    rep.cases += size * size
    expected = np.zeros((size, size), dtype=np.int64)
    expected[np.arange(size), table.dual_index] = 1
    for a, b in np.argwhere(table.N[:, :, e] != expected):
        rep.add_failure(
            "unit multiplicity in a x b", (table.labels[a], table.labels[b]), expected[a, b], table.N[a, b, e]
        )


def _check_symmetry(level: Level, rep: VerificationReport, table: FusionTable, **_):
    # N[a, b, c] == N[a, dual c, dual b]
    N, d = table.N, table.dual_index
    rhs = N[:, d][:, :, d].transpose(0, 2, 1)
    rep.cases = N.size
    for a, b, c in np.argwhere(N != rhs):
        rep.add_failure(
            "N[a,b;c] = N[a,dual c;dual b]", (table.labels[i] for i in (a, b, c)), int(rhs[a, b, c]), int(N[a, b, c])
        )


def _check_formula_fidelity(level: Level, rep: VerificationReport, **_):
    for rule in reference.PRINTED_RULES:
        for plus in (True, False):
            for r in range(1, level.r_max + 1):
                for r1 in range(1, level.r_max + 1):
                    left, right, want = reference.printed_product(level, rule, plus, r, r1)
                    rep.cases += 1
                    got = fuse(level, left, right)
                    if got != want:
                        rep.add_failure(rule.name, (left, right), want, got)


def _check_weight_additivity(level: Level, rep: VerificationReport, **_):
    k, p, q = level.k, level.p, level.q
    for i in range(k + 1):
        for r in range(1, level.r_max + 1):
            rep.cases += 1
            lhs = component_weight(level, i, r)
            rhs = sl2_weight(level, i) + vir_weight(p, q, i + 1, r)
            if lhs != rhs:
                rep.add_failure("component weight", (k, i, r), rhs, lhs)
    rep.cases += 1
    c_total = Fraction(3 * k, k + 2) + vir_central_charge(p, q)
    if c_total != Fraction(2 * k, 2 * k + 3):
        rep.add_failure("central charge", (k,), Fraction(2 * k, 2 * k + 3), c_total)
    for x in enumerate_labels(level):
        if x.twisted:
            continue
        rep.cases += 1
        comps = decompose(level, x)
        via_parts = sorted(sl2_weight(level, c.sl2.i) + vir_weight(p, q, c.vir.r, c.vir.s) for c in comps)
        if weight_profile(level, x) != via_parts:
            rep.add_failure("weight profile", (x,), via_parts, weight_profile(level, x))


def _check_weight_collisions(level: Level, rep: VerificationReport, **_):
    rep.cases = (level.k + 1) * level.r_max
    for col in weight_collisions(level):
        rep.findings.append(
            {"weight": str(col.weight), "pairs": [list(p) for p in col.pairs], "kind": col.kind}
        )
    if rep.findings:
        rep.note = "coinciding component weights found; distinctness is not asserted"


def _check_grouping(level: Level, rep: VerificationReport, table: FusionTable, **_):
    twisted = [x for x in table.labels if x.twisted]
    untwisted = [x for x in table.labels if not x.twisted]
    for t1 in twisted:
        for t2 in twisted:
            closed = fuse_twisted_twisted(level, t1, t2)
            for u in untwisted:
                rep.cases += 1
                want = closed.get(u)
                # N_{T1,T2}^U = N_{U',T1}^{T2'} and N_{T2,T1}^U = N_{U',T2}^{T1'}
                g1 = fuse(level, dual(level, u), t1).get(dual(level, t2))
                g2 = fuse(level, dual(level, u), t2).get(dual(level, t1))
                if not want == g1 == g2:
                    rep.add_failure("N[t1,t2;u] by both groupings", (t1, t2, u), want, f"{g1}, {g2}")


_RUNNERS = {
    "counts": _check_counts,
    "unit": _check_unit,
    "commutativity": _check_commutativity,
    "associativity": _check_associativity,
    "duality_frobenius": _check_duality,
    "symmetry_identity": _check_symmetry,
    "formula_fidelity": _check_formula_fidelity,
    "weight_additivity": _check_weight_additivity,
    "weight_collisions": _check_weight_collisions,
    "grouping_independence": _check_grouping,
}
_NEEDS_TABLE = {"unit", "commutativity", "associativity", "duality_frobenius", "symmetry_identity", "grouping_independence"}


def verify(
    level: Level | int,
    checks: Iterable[str] | None = None,
    *,
    max_assoc_level: int = DEFAULT_MAX_ASSOC_LEVEL,
    workers: int = 1,
) -> list[VerificationReport]:
    """Run the named checks at one level; reports come back in :data:`CHECKS` order."""
    level = as_level(level)
    wanted = set(CHECKS if checks is None else checks)
    unknown = wanted - set(CHECKS)
    if unknown:
        raise UnknownCheckError(f"unknown check(s): {', '.join(sorted(unknown))}")
    table = FusionTable(level) if wanted & _NEEDS_TABLE else None
    reports = []
    for name in CHECKS:
        if name not in wanted:
            continue
        rep = VerificationReport(name, level.k, True)
        t0 = time.perf_counter()
        _RUNNERS[name](level, rep, table=table, max_assoc_level=max_assoc_level, workers=workers)
        rep.elapsed = time.perf_counter() - t0
        reports.append(rep)
    return reports

