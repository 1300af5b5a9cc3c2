"""The Z2-orbifold of the affine sl2 algebra at level k.

Signs are stored as the integers +1 / -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .formal import FormalSum
from .labels import DomainError, Level, Sector, Twist, UnsupportedSectorError, as_level


@dataclass(frozen=True, order=True)
class Sl2OrbLabel:
    twist: Twist
    i: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")

    def render(self, k: int) -> str:
        head = "TL" if self.twist is Twist.TWISTED else "L"
        return f"{head}[{k},{self.i}]{'+' if self.sign > 0 else '-'}"

    def __str__(self):
        return self.render("k")


def sl2_labels(level: Level | int) -> list[Sl2OrbLabel]:
    level = as_level(level)
    return [
        Sl2OrbLabel(tw, i, sign)
        for tw in Twist
        for i in range(level.k + 1)
        for sign in (1, -1)
    ]


def sign_plus(i: int, j: int, l: int) -> int:
    if (i + j + l) % 2:
        raise DomainError(f"i+j+l must be even, got ({i}, {j}, {l})")
    return 1 if (i + j - l) % 4 == 0 else -1


def sign_minus(i: int, j: int, l: int) -> int:
    return -sign_plus(i, j, l)


def sl2_weight(level: Level | int, i: int) -> Fraction:
    """Lowest weight ``i(i+2) / (4(k+2))`` of the sl2 module of spin ``i``."""
    level = as_level(level)
    if not 0 <= i <= level.k:
        raise DomainError(f"spin i={i} outside [0, {level.k}]")
    return Fraction(i * (i + 2), 4 * (level.k + 2))


def sl2_sigma_eigenvalue(i: int) -> Sector:
    """Eigenvalue of the automorphism on the top-level lowest weight vector of spin ``i``."""
    if i < 0:
        raise DomainError(f"spin must be nonnegative, got {i}")
    # i = 0, 1, 2, 3 (mod 4) -> 1, -i, -1, +i
    return (Sector.EVEN_PLUS, Sector.ODD_PLUS, Sector.EVEN_MINUS, Sector.ODD_MINUS)[i % 4]


def fusion_channels(level: Level | int, i: int, j: int) -> range:
    """Spins ``l`` with ``|i-j| <= l <= i+j``, ``i+j+l`` even and ``i+j+l <= 2k``."""
    level = as_level(level)
    return range(abs(i - j), min(i + j, 2 * level.k - i - j) + 1, 2)


def sl2_fuse(level: Level | int, a: Sl2OrbLabel, b: Sl2OrbLabel) -> FormalSum:
    level = as_level(level)
    for x in (a, b):
        if not 0 <= x.i <= level.k:
            raise DomainError(f"spin i={x.i} outside [0, {level.k}]")
    if a.twist is Twist.TWISTED and b.twist is Twist.TWISTED:
        raise UnsupportedSectorError("twisted x twisted fusion is not available for the sl2 orbifold")
    twist = a.twist ^ b.twist
    return FormalSum(
        (Sl2OrbLabel(twist, l, a.sign * b.sign * sign_plus(a.i, b.i, l)), 1)
        for l in fusion_channels(level, a.i, b.i)
    )
