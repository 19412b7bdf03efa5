"""Negative continued fractions over exact rationals.

Every negative rational r has a unique expansion

    r = c0 - 1/(c1 - 1/(... - 1/cm))

with c0 <= -1 and ci <= -2 for i >= 1.  These expansions drive the
conversion of a rational surgery coefficient into a chain of integer
framings: entry c0 corresponds to a knot that gets -c0 - 1 stabilizations
and every later entry ci to a pushoff with -ci - 2 stabilizations.

All arithmetic is exact.  Scalars are `fractions.Fraction` (arbitrary
precision), so no coefficient can overflow or lose precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConditionViolation, NonNegativeCoefficient

__all__ = [
    "NegContinuedFraction",
    "neg_cf_expand",
    "neg_cf_value",
    "stabilization_counts",
]


@dataclass(frozen=True)
class NegContinuedFraction:
    """Expansion [c0, c1, ..., cm] with c0 <= -1 and ci <= -2 for i >= 1."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(c) for c in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("expansion needs at least one entry")
        if entries[0] > -1:
            raise ConditionViolation(f"leading entry must be <= -1, got {entries[0]}")
        for c in entries[1:]:
            if c > -2:
                raise ConditionViolation(f"tail entries must be <= -2, got {c}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def neg_cf_expand(r: Fraction | int) -> NegContinuedFraction:
    """Expand a negative rational into its unique negative continued fraction.

    The leading entry is floor(r) (r itself when integral); the remainder
    recurses on -1/(r - floor(r)), which is always < -1, so every tail
    entry lands at or below -2.

    Raises NonNegativeCoefficient for r >= 0.
    """
    r = Fraction(r)
    if r >= 0:
        raise NonNegativeCoefficient(f"expected a negative coefficient, got {r}")
    entries = []
    while True:
        if r.denominator == 1:
            entries.append(r.numerator)
            break
        c = r.numerator // r.denominator  # floor for negative r
        entries.append(c)
        r = -1 / (r - c)
    return NegContinuedFraction(tuple(entries))


def neg_cf_value(cf: NegContinuedFraction) -> Fraction:
    """Evaluate c0 - 1/(c1 - 1/(... - 1/cm)) exactly.

    Inverse of neg_cf_expand; serves as the back-substitution oracle in
    round-trip tests.  The entry bounds keep every partial tail below -1,
    so no division by zero can occur.
    """
    value = Fraction(cf.entries[-1])
    for c in reversed(cf.entries[:-1]):
        value = c - 1 / value
    return value


def stabilization_counts(cf: NegContinuedFraction) -> list[int]:
    """Per-component stabilization counts for the surgery chain of `cf`.

    The first component absorbs -c0 - 1 stabilizations, each later one
    -ci - 2.  All counts are >= 0 by the entry bounds, and the number of
    sign choices for the whole chain is the product of (count + 1).
    """
    first = -cf.entries[0] - 1
    rest = [-c - 2 for c in cf.entries[1:]]
    return [first] + rest
