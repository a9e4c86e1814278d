"""Tri-state truth values and integer intervals.

Dimensions that the genericity rules cannot pin down are carried as closed
integer intervals; predicates over them answer ``Tri.UNKNOWN`` instead of
guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class Tri(Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"

    @classmethod
    def of(cls, flag: bool) -> "Tri":
        return cls.TRUE if flag else cls.FALSE

    def __bool__(self):
        raise TypeError("Tri has no implicit truth value; compare with Tri.TRUE")

    def negate(self) -> "Tri":
        if self is Tri.UNKNOWN:
            return self
        return Tri.FALSE if self is Tri.TRUE else Tri.TRUE

    def and_(self, other: "Tri") -> "Tri":
        return tri_all((self, other))

    def or_(self, other: "Tri") -> "Tri":
        return tri_any((self, other))


def tri_all(values: Iterable[Tri]) -> Tri:
    seen_unknown = False
    for v in values:
        if v is Tri.FALSE:
            return Tri.FALSE
        if v is Tri.UNKNOWN:
            seen_unknown = True
    return Tri.UNKNOWN if seen_unknown else Tri.TRUE


def tri_any(values: Iterable[Tri]) -> Tri:
    seen_unknown = False
    for v in values:
        if v is Tri.TRUE:
            return Tri.TRUE
        if v is Tri.UNKNOWN:
            seen_unknown = True
    return Tri.UNKNOWN if seen_unknown else Tri.FALSE


@dataclass(frozen=True)
class ExactOrInterval:
    """Closed integer interval ``[lo, hi]``; exact when the endpoints agree."""

    lo: int
    hi: int
    reason: str = ""

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: int, reason: str = "") -> "ExactOrInterval":
        return cls(value, value, reason)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"interval [{self.lo}, {self.hi}] is not exact")
        return self.lo

    def _coerce(self, other):
        if isinstance(other, ExactOrInterval):
            return other
        return ExactOrInterval(other, other)

    def _merge_reason(self, other):
        parts = [r for r in (self.reason, other.reason) if r]
        return "; ".join(dict.fromkeys(parts))

    def __add__(self, other):
        o = self._coerce(other)
        return ExactOrInterval(self.lo + o.lo, self.hi + o.hi, self._merge_reason(o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return ExactOrInterval(self.lo - o.hi, self.hi - o.lo, self._merge_reason(o))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def shift(self, k: int) -> "ExactOrInterval":
        return ExactOrInterval(self.lo + k, self.hi + k, self.reason)

    def clamp_min(self, floor: int) -> "ExactOrInterval":
        return ExactOrInterval(max(self.lo, floor), max(self.hi, floor), self.reason)

    def map_monotone(self, fn) -> "ExactOrInterval":
        """Apply a non-decreasing integer function endpoint-wise."""
        return ExactOrInterval(fn(self.lo), fn(self.hi), self.reason)

    def intersect(self, other: "ExactOrInterval") -> "ExactOrInterval | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return None
        return ExactOrInterval(lo, hi, self._merge_reason(other))

    def hull(self, other: "ExactOrInterval") -> "ExactOrInterval":
        return ExactOrInterval(min(self.lo, other.lo), max(self.hi, other.hi),
                               self._merge_reason(other))

    def contains(self, value: int) -> bool:
        return self.lo <= value <= self.hi

    # tri-state comparisons against an integer threshold
    def eq(self, value: int) -> Tri:
        if self.is_exact:
            return Tri.of(self.lo == value)
        if not self.contains(value):
            return Tri.FALSE
        return Tri.UNKNOWN

    def ge(self, value: int) -> Tri:
        if self.lo >= value:
            return Tri.TRUE
        if self.hi < value:
            return Tri.FALSE
        return Tri.UNKNOWN

    def gt(self, value: int) -> Tri:
        return self.ge(value + 1)

    def le(self, value: int) -> Tri:
        return self.gt(value).negate()

    def lt(self, value: int) -> Tri:
        return self.ge(value).negate()

    def to_json(self):
        if self.is_exact:
            return self.lo
        return {"lo": self.lo, "hi": self.hi, "reason": self.reason or "undetermined"}

    def __str__(self):
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"


def interval_sum(values: Iterable[ExactOrInterval]) -> ExactOrInterval:
    total = ExactOrInterval.exact(0)
    for v in values:
        total = total + v
    return total
