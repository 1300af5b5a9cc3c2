"""Levels, module labels, and the Z4 sector grading of the orbifold.

Sectors are the fourth roots of unity.  A sector is stored as the exponent
``n`` of ``sqrt(-1)**n`` so that multiplication is addition mod 4::

    even+ -> 1    (n = 0)
    even- -> -1   (n = 2)
    odd+  -> -i   (n = 3)
    odd-  -> +i   (n = 1)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction

Rational = Fraction


class OspFusionError(Exception):
    """Base class for errors raised by this package."""


class LabelParseError(OspFusionError, ValueError):
    """Malformed label text."""


class DomainError(OspFusionError, ValueError):
    """A value lies outside the range allowed at the given level."""


class UnsupportedSectorError(DomainError):
    """The requested quantity is not available for this sector."""


@dataclass(frozen=True)
class Level:
    """Positive integer level ``k`` with minimal-model parameters ``p = 2k+3``, ``q = k+2``."""

    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int):
            raise DomainError(f"level must be an integer, got {self.k!r}")
        if self.k < 1:
            raise DomainError(f"level must be positive, got {self.k}")

    @property
    def p(self) -> int:
        return 2 * self.k + 3

    @property
    def q(self) -> int:
        return self.k + 2

    @property
    def r_max(self) -> int:
        """Largest orbifold index ``r``, equal to ``2k+2``."""
        return 2 * self.k + 2


def as_level(level: Level | int) -> Level:
    return level if isinstance(level, Level) else Level(level)


class Twist(IntEnum):
    UNTWISTED = 0
    TWISTED = 1

    @property
    def token(self) -> str:
        return "U" if self is Twist.UNTWISTED else "T"

    def __xor__(self, other):
        if isinstance(other, Twist):
            return Twist(int(self) ^ int(other))
        return NotImplemented


class Sector(Enum):
    """Element of the group of fourth roots of unity; the value is the exponent of ``i``."""

    EVEN_PLUS = 0
    EVEN_MINUS = 2
    ODD_PLUS = 3
    ODD_MINUS = 1

    @classmethod
    def from_power(cls, n: int) -> Sector:
        return cls(n % 4)

    @property
    def power(self) -> int:
        return self.value

    @property
    def token(self) -> str:
        return _SECTOR_TOKENS[self]

    @property
    def is_even(self) -> bool:
        return self.value % 2 == 0

    @property
    def order_index(self) -> int:
        """Position in the canonical order even+, even-, odd+, odd-."""
        return SECTOR_ORDER.index(self)

    def inverse(self) -> Sector:
        return Sector.from_power(-self.value)

    conjugate = inverse

    def __mul__(self, other):
        if isinstance(other, Sector):
            return sector_mul(self, other)
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Sector):
            return self.order_index < other.order_index
        return NotImplemented

    def __str__(self):
        return self.token

    def as_complex(self) -> complex:
        return (1, 1j, -1, -1j)[self.value]


SECTOR_ORDER = (Sector.EVEN_PLUS, Sector.EVEN_MINUS, Sector.ODD_PLUS, Sector.ODD_MINUS)

_SECTOR_TOKENS = {
    Sector.EVEN_PLUS: "even+",
    Sector.EVEN_MINUS: "even-",
    Sector.ODD_PLUS: "odd+",
    Sector.ODD_MINUS: "odd-",
}
_TOKEN_SECTORS = {v: k for k, v in _SECTOR_TOKENS.items()}


def sector_mul(a: Sector, b: Sector) -> Sector:
    return Sector.from_power(a.value + b.value)


def imaginary_power(n: int) -> Sector:
    """Return ``sqrt(-1)**n`` as a sector."""
    return Sector.from_power(n)


@dataclass(frozen=True, order=True)
class OspOrbLabel:
    """Label of a simple module of the orbifold.

    Ordering follows enumeration order: twist, then sector (even+, even-,
    odd+, odd-), then ``r``.
    """

    twist: Twist
    sector: Sector
    r: int

    @property
    def twisted(self) -> bool:
        return self.twist is Twist.TWISTED

    def sum_key(self):
        # FormalSum iteration order
        return (self.sector.order_index, int(self.twist), self.r)

    def __str__(self):
        return f"{self.twist.token}:{self.sector.token}:{self.r}"

    def pretty(self) -> str:
        fam = {
            Sector.EVEN_PLUS: "even,+",
            Sector.EVEN_MINUS: "even,-",
            Sector.ODD_PLUS: "odd,1",
            Sector.ODD_MINUS: "odd,2",
        }[self.sector]
        name = f"M_{self.r}^{{{fam}}}"
        return f"bar({name})" if self.twisted else name


def format_label(label: OspOrbLabel) -> str:
    return str(label)


def check_label(level: Level | int, label: OspOrbLabel) -> OspOrbLabel:
    level = as_level(level)
    if not 1 <= label.r <= level.r_max:
        raise DomainError(f"r={label.r} outside [1, {level.r_max}] for k={level.k}")
    return label


def make_label(level: Level | int, twist: Twist | str, sector: Sector | str, r: int) -> OspOrbLabel:
    if isinstance(twist, str):
        twist = {"U": Twist.UNTWISTED, "T": Twist.TWISTED}[twist]
    if isinstance(sector, str):
        sector = _TOKEN_SECTORS[sector]
    return check_label(level, OspOrbLabel(Twist(twist), sector, r))


_LABEL_RE = re.compile(r"(U|T):(even\+|even-|odd\+|odd-):([0-9]+)")


def parse_label(level: Level | int, text: str) -> OspOrbLabel:
    """Parse ``<twist>:<sector>:<r>``, e.g. ``T:even-:5``."""
    m = _LABEL_RE.fullmatch(text)
    if m is None:
        raise LabelParseError(f"malformed label {text!r}")
    twist, sector, r = m.groups()
    return make_label(level, twist, sector, int(r))


def enumerate_labels(level: Level | int) -> list[OspOrbLabel]:
    level = as_level(level)
    return [
        OspOrbLabel(tw, sec, r)
        for tw in Twist
        for sec in SECTOR_ORDER
        for r in range(1, level.r_max + 1)
    ]


def unit_label() -> OspOrbLabel:
    return OspOrbLabel(Twist.UNTWISTED, Sector.EVEN_PLUS, 1)
