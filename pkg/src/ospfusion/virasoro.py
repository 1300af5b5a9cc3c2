"""Minimal Virasoro models: Kac weights, central charges and fusion."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .formal import FormalSum
from .labels import DomainError, Level, as_level


class ChannelMergeWarning(UserWarning):
    """Two raw fusion channels collapsed onto one canonical Virasoro label."""

    def __init__(self, p: int, q: int, left, right, label, raw_channels):
        self.p, self.q = p, q
        self.left, self.right, self.label = left, right, label
        self.raw_channels = tuple(raw_channels)
        super().__init__(
            f"vir_fuse(p={p}, q={q}): {left} x {right} merges raw channels "
            f"{', '.join(map(str, self.raw_channels))} into {label}"
        )


@dataclass(frozen=True, order=True)
class VirLabel:
    r: int
    s: int

    def canonical(self, p: int, q: int) -> VirLabel:
        """Lexicographic minimum of ``(r, s)`` and ``(q - r, p - s)``."""
        other = VirLabel(q - self.r, p - self.s)
        return min(self, other)

    def __str__(self):
        return f"V[{self.r},{self.s}]"


def _check_pq(p: int, q: int):
    if p < 2 or q < 2:
        raise DomainError(f"need p, q >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise DomainError(f"p={p} and q={q} are not coprime")


def _check_rs(p: int, q: int, r: int, s: int):
    if not (1 <= r <= q - 1 and 1 <= s <= p - 1):
        raise DomainError(f"(r, s)=({r}, {s}) outside the Kac table for (p, q)=({p}, {q})")


def vir_central_charge(p: int, q: int) -> Fraction:
    _check_pq(p, q)
    return 1 - Fraction(6 * (p - q) ** 2, p * q)


def vir_weight(p: int, q: int, r: int, s: int) -> Fraction:
    """Lowest conformal weight ``((sq - rp)^2 - (p - q)^2) / (4pq)`` of ``V[r,s]``."""
    _check_pq(p, q)
    _check_rs(p, q, r, s)
    return Fraction((s * q - r * p) ** 2 - (p - q) ** 2, 4 * p * q)


def n_coeff(u: int, r: int, r1: int, r2: int) -> int:
    """Fusion coefficient of the minimal series with parameter ``u``.

    Equal to 1 when ``|r - r1| + 1 <= r2 <= min(r + r1 - 1, 2u - r - r1)`` and
    ``r + r1 + r2`` is odd, and 0 otherwise.
    """
    if abs(r - r1) + 1 <= r2 <= min(r + r1 - 1, 2 * u - r - r1) and (r + r1 + r2) % 2 == 1:
        return 1
    return 0


def canonical_labels(level: Level | int) -> list[VirLabel]:
    level = as_level(level)
    p, q = level.p, level.q
    return sorted(
        {VirLabel(r, s).canonical(p, q) for r in range(1, q) for s in range(1, p)}
    )


def vir_fuse(level: Level | int, a: VirLabel, b: VirLabel) -> FormalSum:
    """Fusion product of two modules of the minimal model with ``(p, q) = (2k+3, k+2)``.

    Raw channels are canonicalized; a :class:`ChannelMergeWarning` is issued if
    two raw channels land on the same canonical label.
    """
    level = as_level(level)
    p, q = level.p, level.q
    _check_rs(p, q, a.r, a.s)
    _check_rs(p, q, b.r, b.s)
    hits: dict[VirLabel, list[VirLabel]] = {}
    for r2 in range(1, q):
        nr = n_coeff(q, a.r, b.r, r2)
        if not nr:
            continue
        for s2 in range(1, p):
            if n_coeff(p, a.s, b.s, s2):
                raw = VirLabel(r2, s2)
                hits.setdefault(raw.canonical(p, q), []).append(raw)
    for label, raws in hits.items():
        if len(raws) > 1:
            warnings.warn(ChannelMergeWarning(p, q, a, b, label, raws), stacklevel=2)
    return FormalSum((label, len(raws)) for label, raws in hits.items())
