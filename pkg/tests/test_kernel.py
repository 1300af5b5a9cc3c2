import pytest

from ospfusion import kernel
from ospfusion.formal import FormalSum
from ospfusion.kernel import CHECKS, MAX_COUNTEREXAMPLES, UnknownCheckError, VerificationReport, fuse_sums, verify
from ospfusion.labels import OspOrbLabel, Twist, enumerate_labels, parse_label


def L(k, text):
    return parse_label(k, text)


def test_formal_sum_basics():
    a, b = L(1, "U:even+:1"), L(1, "T:odd-:2")
    s = FormalSum([(b, 1), (a, 2), (b, 0)])
    assert list(s) == [a, b]
    assert s[a] == 2 and s.get(L(1, "U:even+:2")) == 0
    assert str(s) == "2*U:even+:1 + T:odd-:2"
    assert str(FormalSum()) == "0"
    assert s + FormalSum.of(b) == FormalSum({a: 2, b: 2})
    assert 3 * FormalSum.of(a) == FormalSum({a: 3})
    with pytest.raises(ValueError):
        FormalSum({a: -1})


def test_formal_sum_order_is_sector_twist_r():
    k = 1
    items = [L(k, t) for t in ("T:even+:1", "U:odd+:2", "U:even-:4", "U:even+:3", "T:even-:1")]
    order = [str(x) for x in FormalSum.of(*items)]
    assert order == ["U:even+:3", "T:even+:1", "U:even-:4", "T:even-:1", "U:odd+:2"]


def test_fuse_sums_examples():
    x = FormalSum.of(L(1, "U:even+:2"))
    assert fuse_sums(1, x, FormalSum()) == FormalSum()
    unit = FormalSum.of(L(1, "U:even+:1"))
    B = FormalSum.of(L(1, "T:odd+:3"), L(1, "U:even-:2"), L(1, "U:even-:2"))
    assert fuse_sums(1, unit, B) == B
    two = FormalSum({L(1, "U:even+:2"): 2})
    assert fuse_sums(1, two, x) == FormalSum({L(1, "U:even+:1"): 2, L(1, "U:even+:3"): 2})


def test_verify_unit_and_associativity_k1():
    unit, assoc = verify(1, ["associativity", "unit"])
    assert unit.check == "unit" and unit.passed and unit.cases == 32
    assert assoc.check == "associativity" and assoc.passed and assoc.cases == 32 ** 3


def test_verify_weight_collisions_k2():
    (rep,) = verify(2, ["weight_collisions"])
    assert rep.passed
    assert {"weight": "1", "pairs": [[1, 1], [1, 6]], "kind": "kac"} in rep.findings


def test_verify_unknown_check():
    with pytest.raises(UnknownCheckError):
        verify(1, ["unit", "pentagon"])


def test_associativity_cap():
    (rep,) = verify(2, ["associativity"], max_assoc_level=1)
    assert rep.skipped and rep.cases == 0


def _strip(reports):
    return sorted((r.to_dict(with_timing=False) for r in reports), key=lambda d: d["check"])


def test_verify_deterministic_across_workers_and_order():
    a = verify(2, CHECKS, workers=1)
    b = verify(2, list(reversed(CHECKS)), workers=4)
    assert _strip(a) == _strip(b)
    assert [r.check for r in a] == [r.check for r in b] == list(CHECKS)


def test_report_truncation():
    rep = VerificationReport("x", 1, True)
    for n in range(MAX_COUNTEREXAMPLES + 5):
        rep.add_failure("op", [n], 0, 1)
    assert not rep.passed
    assert len(rep.counterexamples) == MAX_COUNTEREXAMPLES
    assert rep.total_counterexamples == MAX_COUNTEREXAMPLES + 5


def test_broken_dual_yields_reproducible_counterexamples(monkeypatch):
    def bad_dual(level, x):
        return x

    monkeypatch.setattr(kernel, "dual", bad_dual)
    (rep,) = verify(1, ["duality_frobenius"])
    assert not rep.passed and rep.counterexamples
    labels = {str(x) for x in enumerate_labels(1)}
    for ce in rep.counterexamples:
        assert all(s in labels for s in ce["inputs"])


def _patched(monkeypatch, transform):
    real = kernel.fuse
    monkeypatch.setattr(kernel, "fuse", lambda level, a, b: transform(a, b, real(level, a, b)))


def test_twisted_sector_shift_is_fixed_by_duality_not_associativity(monkeypatch):
    # any constant sector shift on twisted x twisted keeps the ring associative;
    # only the unit/dual pairing pins it down
    def drop_shift(a, b, out):
        if a.twisted and b.twisted:
            return FormalSum((OspOrbLabel(Twist.UNTWISTED, a.sector * b.sector, z.r), m) for z, m in out.items())
        return out

    _patched(monkeypatch, drop_shift)
    reports = {r.check: r for r in verify(1, ["associativity", "duality_frobenius"])}
    assert reports["associativity"].passed
    assert not reports["duality_frobenius"].passed


def test_broken_fuse_fails_associativity(monkeypatch):
    def drop_top_channel(a, b, out):
        if not a.twisted and not b.twisted and len(out) > 1:
            return FormalSum(out.items()[:-1])
        return out

    _patched(monkeypatch, drop_top_channel)
    reports = {r.check: r for r in verify(1, ["associativity", "commutativity"])}
    assert not reports["associativity"].passed
    rep = reports["associativity"]
    assert 0 < len(rep.counterexamples) <= MAX_COUNTEREXAMPLES <= rep.total_counterexamples
    labels = {str(x) for x in enumerate_labels(1)}
    assert all(len(ce["inputs"]) == 3 and set(ce["inputs"]) <= labels for ce in rep.counterexamples)
