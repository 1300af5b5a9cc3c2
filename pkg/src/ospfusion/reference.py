"""Hand-transcribed published tables, kept separate from the computing code.

These are the case-by-case statements of the branching rules, contragredient
pairings and fusion products.  The engine in :mod:`ospfusion.orbifold` uses
closed forms instead; the verifier compares the two.
"""

from __future__ import annotations

from typing import NamedTuple

from .formal import FormalSum
from .labels import Level, OspOrbLabel, Sector, Twist, as_level

EP, EM, OP, OM = Sector.EVEN_PLUS, Sector.EVEN_MINUS, Sector.ODD_PLUS, Sector.ODD_MINUS

# sector -> {i mod 4: sign of the sl2 component}
BRANCHING_SIGNS = {
    EP: {0: +1, 2: -1},
    EM: {0: -1, 2: +1},
    OP: {1: +1, 3: -1},
    OM: {1: -1, 3: +1},
}

# k mod 4 -> printed pairings (source sector, target sector) for twisted modules,
# with r -> 2k+3-r.  Only the printed direction is listed.
TWISTED_DUAL_CASES = {
    0: [(EP, EP), (EM, EM), (OP, OM)],
    1: [(EP, OP), (OM, EM)],
    2: [(EP, EM), (OP, OP), (OM, OM)],
    3: [(EP, OM), (OP, EM)],
}


class PrintedRule(NamedTuple):
    """``left_r x right_r' = sum_r'' N * out_r''`` for both choices of the right-hand sign.

    ``right`` and ``out`` are (family, sign-relation) data: the right factor runs
    over the two sectors of ``right_family``; the output sector is in
    ``out_family`` with the same sign as the right factor if ``flip`` is False,
    the opposite sign otherwise.
    """

    name: str
    left: Sector
    right_family: str
    right_twist: Twist
    out_family: str
    flip: bool


def _fam(family: str, plus: bool) -> Sector:
    return {("even", True): EP, ("even", False): EM, ("odd", True): OP, ("odd", False): OM}[(family, plus)]


U, T = Twist.UNTWISTED, Twist.TWISTED

PRINTED_RULES = (
    PrintedRule("even+ x even", EP, "even", U, "even", False),
    PrintedRule("even- x even", EM, "even", U, "even", True),
    PrintedRule("even+ x bar even", EP, "even", T, "even", False),
    PrintedRule("even- x bar even", EM, "even", T, "even", True),
    PrintedRule("odd+ x odd", OP, "odd", U, "even", True),
    PrintedRule("odd- x odd", OM, "odd", U, "even", False),
    PrintedRule("odd+ x bar odd", OP, "odd", T, "even", True),
    PrintedRule("odd- x bar odd", OM, "odd", T, "even", False),
    PrintedRule("odd+ x even", OP, "even", U, "odd", False),
    PrintedRule("odd- x even", OM, "even", U, "odd", True),
    PrintedRule("odd+ x bar even", OP, "even", T, "odd", False),
    PrintedRule("odd- x bar even", OM, "even", T, "odd", True),
)


def window(u: int, r: int, r1: int) -> range:
    """Indices ``r''`` with nonzero coefficient, listed as an explicit stepped range."""
    lo = abs(r - r1) + 1
    hi = min(r + r1 - 1, 2 * u - r - r1 - 1)
    return range(lo, hi + 1, 2)


def printed_product(level: Level | int, rule: PrintedRule, plus: bool, r: int, r1: int):
    """Return ``(left, right, expected FormalSum)`` for one instance of a printed rule."""
    level = as_level(level)
    left = OspOrbLabel(U, rule.left, r)
    right = OspOrbLabel(rule.right_twist, _fam(rule.right_family, plus), r1)
    out_sector = _fam(rule.out_family, plus != rule.flip)
    expected = FormalSum(
        (OspOrbLabel(rule.right_twist, out_sector, r2), 1)
        for r2 in window(level.p, r, r1)
        if 1 <= r2 <= level.r_max
    )
    return left, right, expected
