"""Decompositions, conformal weights, contragredients and fusion of the orbifold modules."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .formal import FormalSum
from .labels import (
    DomainError,
    Level,
    OspOrbLabel,
    Twist,
    UnsupportedSectorError,
    as_level,
    check_label,
    enumerate_labels,
    imaginary_power,
)
from .sl2 import Sl2OrbLabel, sl2_sigma_eigenvalue
from .virasoro import VirLabel, n_coeff


class Component(NamedTuple):
    sl2: Sl2OrbLabel
    vir: VirLabel


def decompose(level: Level | int, label: OspOrbLabel) -> list[Component]:
    """Branching of an orbifold module into sl2-orbifold x Virasoro components.

    Spins run over the parity of the sector; a component carries sign ``+``
    exactly when the automorphism eigenvalue at its spin equals the sector.
    The Virasoro label is the raw pair ``(i+1, r)``.
    """
    level = as_level(level)
    check_label(level, label)
    start = 0 if label.sector.is_even else 1
    return [
        Component(
            Sl2OrbLabel(label.twist, i, 1 if sl2_sigma_eigenvalue(i) is label.sector else -1),
            VirLabel(i + 1, label.r),
        )
        for i in range(start, level.k + 1, 2)
    ]


def component_weight(level: Level | int, i: int, r: int) -> Fraction:
    level = as_level(level)
    k = level.k
    if not 0 <= i <= k:
        raise DomainError(f"spin i={i} outside [0, {k}]")
    if not 1 <= r <= level.r_max:
        raise DomainError(f"r={r} outside [1, {level.r_max}]")
    m = i + 1
    return Fraction(1, 4) * (2 * m * m - 2 * m * r + Fraction((k + 2) * (r * r - 1), 2 * k + 3))


def weight_profile(level: Level | int, label: OspOrbLabel) -> list[Fraction]:
    """Sorted component weights of an untwisted label."""
    if label.twisted:
        raise UnsupportedSectorError(f"conformal weights of twisted label {label} are not available")
    return sorted(component_weight(level, c.sl2.i, c.vir.s) for c in decompose(level, label))


def dual(level: Level | int, label: OspOrbLabel) -> OspOrbLabel:
    """Contragredient module.

    Untwisted: the sector is inverted and ``r`` kept.  Twisted: ``r -> 2k+3-r``
    and the sector becomes ``(-i)**k`` times its inverse, which realizes the
    four residue-class tables of k mod 4 as one involution.
    """
    level = as_level(level)
    check_label(level, label)
    if not label.twisted:
        return OspOrbLabel(label.twist, label.sector.inverse(), label.r)
    sector = imaginary_power(-level.k) * label.sector.inverse()
    return OspOrbLabel(label.twist, sector, level.p - label.r)


def fuse(level: Level | int, a: OspOrbLabel, b: OspOrbLabel) -> FormalSum:
    """Fusion product of two orbifold modules.

    At least one untwisted factor: ``n_coeff(2k+3, r, r', r'')`` on the indices,
    sectors multiply, twists add mod 2.  Two twisted factors go through
    :func:`fuse_twisted_twisted`.
    """
    level = as_level(level)
    check_label(level, a)
    check_label(level, b)
    if a.twisted and b.twisted:
        return fuse_twisted_twisted(level, a, b)
    twist = a.twist ^ b.twist
    sector = a.sector * b.sector
    u = level.p
    return FormalSum(
        (OspOrbLabel(twist, sector, r2), 1)
        for r2 in range(1, level.r_max + 1)
        if n_coeff(u, a.r, b.r, r2)
    )


def fuse_twisted_twisted(level: Level | int, a: OspOrbLabel, b: OspOrbLabel) -> FormalSum:
    """Derived product of two twisted modules; lands in the untwisted sector ``i**k * a * b``."""
    level = as_level(level)
    check_label(level, a)
    check_label(level, b)
    if not (a.twisted and b.twisted):
        raise DomainError(f"both factors must be twisted, got {a} and {b}")
    sector = imaginary_power(level.k) * a.sector * b.sector
    u = level.p
    return FormalSum(
        (OspOrbLabel(Twist.UNTWISTED, sector, r2), 1)
        for r2 in range(1, level.r_max + 1)
        if n_coeff(u, a.r, b.r, u - r2)
    )


@dataclass(frozen=True)
class Counts:
    untwisted_even_algebra: int
    twisted_even_algebra: int
    orbifold: int

    def as_dict(self) -> dict[str, int]:
        return {
            "untwisted_even_algebra": self.untwisted_even_algebra,
            "twisted_even_algebra": self.twisted_even_algebra,
            "orbifold": self.orbifold,
        }


def counts(level: Level | int) -> Counts:
    """Number of simple modules, counted from the label sets.

    A module of the even subalgebra is a (parity, r) class of labels: the two
    sectors of one parity are the automorphism eigenspaces of the same module.
    """
    level = as_level(level)
    labels = enumerate_labels(level)
    untwisted = {(lab.sector.is_even, lab.r) for lab in labels if not lab.twisted}
    twisted = {(lab.sector.is_even, lab.r) for lab in labels if lab.twisted}
    return Counts(len(untwisted), len(twisted), len(labels))


class WeightCollision(NamedTuple):
    weight: Fraction
    pairs: tuple[tuple[int, int], ...]
    kind: str


def weight_collisions(level: Level | int) -> list[WeightCollision]:
    """Groups of distinct ``(i, r)`` whose component weights coincide.

    ``kind`` is ``"kac"`` when all pairs share one spin and one Virasoro module
    under the Kac identification, ``"mixed"`` when only some of them do, and
    ``"accidental"`` otherwise.
    """
    level = as_level(level)
    groups: dict[Fraction, list[tuple[int, int]]] = defaultdict(list)
    for i in range(level.k + 1):
        for r in range(1, level.r_max + 1):
            groups[component_weight(level, i, r)].append((i, r))
    out = []
    for w in sorted(groups):
        pairs = groups[w]
        if len(pairs) < 2:
            continue
        classes = {(i, VirLabel(i + 1, r).canonical(level.p, level.q)) for i, r in pairs}
        if len(classes) == 1:
            kind = "kac"
        elif len(classes) < len(pairs):
            kind = "mixed"
        else:
            kind = "accidental"
        out.append(WeightCollision(w, tuple(pairs), kind))
    return out
