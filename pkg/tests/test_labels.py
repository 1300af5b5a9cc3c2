import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ospfusion.labels import (
    SECTOR_ORDER,
    DomainError,
    LabelParseError,
    Level,
    OspOrbLabel,
    Sector,
    Twist,
    enumerate_labels,
    format_label,
    parse_label,
    sector_mul,
)


def test_level_parameters():
    lv = Level(1)
    assert (lv.k, lv.p, lv.q, lv.r_max) == (1, 5, 3, 4)


@pytest.mark.parametrize("bad", [0, -3, 1.0, True, "2"])
def test_level_rejects(bad):
    with pytest.raises(DomainError):
        Level(bad)


@given(st.integers(1, 500))
def test_level_invariants(k):
    lv = Level(k)
    assert lv.p == 2 * lv.q - 1
    assert lv.p >= 5 and lv.q >= 3


@pytest.mark.parametrize("k,n", [(1, 32), (2, 48)])
def test_enumerate_counts(k, n):
    labels = enumerate_labels(k)
    assert len(labels) == n == len(set(labels))


def test_enumerate_order():
    labels = enumerate_labels(1)
    assert labels[0] == OspOrbLabel(Twist.UNTWISTED, Sector.EVEN_PLUS, 1)
    assert [str(x) for x in labels[:5]] == ["U:even+:1", "U:even+:2", "U:even+:3", "U:even+:4", "U:even-:1"]
    assert str(labels[-1]) == "T:odd-:4"
    assert labels == sorted(labels)


@pytest.mark.parametrize("k", range(1, 9))
def test_enumerate_size_formula(k):
    assert len(enumerate_labels(k)) == 16 * k + 16


def test_sector_mul_examples():
    assert sector_mul(Sector.ODD_PLUS, Sector.ODD_PLUS) is Sector.EVEN_MINUS
    assert sector_mul(Sector.ODD_PLUS, Sector.ODD_MINUS) is Sector.EVEN_PLUS
    for x in Sector:
        assert sector_mul(Sector.EVEN_PLUS, x) is x


def test_sector_values_are_fourth_roots():
    assert Sector.EVEN_PLUS.as_complex() == 1
    assert Sector.EVEN_MINUS.as_complex() == -1
    assert Sector.ODD_PLUS.as_complex() == -1j
    assert Sector.ODD_MINUS.as_complex() == 1j


def test_sector_group_laws_exhaustive():
    for a, b in itertools.product(Sector, repeat=2):
        assert a * b is b * a
        # oracle: complex multiplication
        assert (a * b).as_complex() == a.as_complex() * b.as_complex()
        for c in Sector:
            assert (a * b) * c is a * (b * c)
    for a in Sector:
        assert a * a.inverse() is Sector.EVEN_PLUS


def test_sector_order():
    assert [s.token for s in SECTOR_ORDER] == ["even+", "even-", "odd+", "odd-"]


def test_parse_examples():
    assert parse_label(2, "U:even+:3") == OspOrbLabel(Twist.UNTWISTED, Sector.EVEN_PLUS, 3)
    assert parse_label(1, "T:odd-:1") == OspOrbLabel(Twist.TWISTED, Sector.ODD_MINUS, 1)
    with pytest.raises(DomainError):
        parse_label(1, "U:even+:9")
    with pytest.raises(DomainError):
        parse_label(1, "U:even+:0")


@pytest.mark.parametrize("text", ["", "U:even:1", "X:even+:1", "U:even+:", "U:even+:1 ", "u:even+:1", "U:odd+:-1", "U:odd*:2"])
def test_parse_errors(text):
    with pytest.raises(LabelParseError):
        parse_label(3, text)


@pytest.mark.parametrize("k", range(1, 6))
def test_round_trip(k):
    for x in enumerate_labels(k):
        assert parse_label(k, format_label(x)) == x
        assert format_label(parse_label(k, str(x))) == str(x)


def test_pretty_names():
    assert OspOrbLabel(Twist.UNTWISTED, Sector.ODD_PLUS, 2).pretty() == "M_2^{odd,1}"
    assert OspOrbLabel(Twist.TWISTED, Sector.ODD_MINUS, 3).pretty() == "bar(M_3^{odd,2})"
