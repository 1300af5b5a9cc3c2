"""Finite formal sums of labels with positive integer multiplicities."""

from __future__ import annotations

from collections.abc import Iterable, Mapping


def _key(label):
    sk = getattr(label, "sum_key", None)
    return sk() if sk is not None else label


class FormalSum(Mapping):
    """Immutable multiset of labels.

    Zero multiplicities are dropped on construction and iteration is in
    canonical order (``label.sum_key()`` when the label defines it).
    """

    __slots__ = ("_items", "_map")

    def __init__(self, data: Mapping | Iterable | None = None):
        acc: dict = {}
        if data is not None:
            pairs = data.items() if isinstance(data, Mapping) else data
            for label, mult in pairs:
                if mult < 0:
                    raise ValueError(f"negative multiplicity {mult} for {label}")
                if mult:
                    acc[label] = acc.get(label, 0) + int(mult)
        self._items = tuple(sorted(acc.items(), key=lambda kv: _key(kv[0])))
        self._map = dict(self._items)

    @classmethod
    def of(cls, *labels) -> FormalSum:
        """Sum of the given labels, each with multiplicity one (repeats accumulate)."""
        return cls((lab, 1) for lab in labels)

    def __getitem__(self, label):
        return self._map[label]

    def get(self, label, default=0):
        return self._map.get(label, default)

    def __iter__(self):
        return (lab for lab, _ in self._items)

    def __len__(self):
        return len(self._items)

    def items(self):
        return list(self._items)

    def __eq__(self, other):
        if isinstance(other, FormalSum):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self == FormalSum(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._items)

    def __add__(self, other: FormalSum) -> FormalSum:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return FormalSum(list(self._items) + list(other._items))

    def __rmul__(self, n: int) -> FormalSum:
        if not isinstance(n, int):
            return NotImplemented
        return FormalSum((lab, n * m) for lab, m in self._items)

    def total(self) -> int:
        return sum(m for _, m in self._items)

    def __str__(self):
        if not self._items:
            return "0"
        return " + ".join(str(lab) if m == 1 else f"{m}*{lab}" for lab, m in self._items)

    def __repr__(self):
        return f"FormalSum({str(self)})"
