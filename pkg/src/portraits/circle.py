"""Open arcs of the circle R/Z with exact rational endpoints.

Arcs are stored as (start, length) rather than (start, end) so the full arc
(0, 1) — the characteristic arc of the zero portrait — is representable.
Membership and containment are computed via lifts to [0, 2), exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .angles import Angle


@dataclass(frozen=True)
class CircleArc:
    """The open arc (start, start + length) on R/Z, with 0 < length <= 1."""

    start: Angle
    length: Fraction

    def __post_init__(self):
        if not 0 < self.length <= 1:
            raise ValueError(f"arc length {self.length} outside (0, 1]")

    @classmethod
    def between(cls, a: Angle, b: Angle) -> "CircleArc":
        """Arc running counterclockwise from a to b; (a, a) is the full arc."""
        return cls(a, (Fraction(b) - a) % 1 or Fraction(1))

    @property
    def end(self) -> Angle:
        return Angle(self.start + self.length)

    @property
    def midpoint(self) -> Angle:
        return Angle(self.start + self.length / 2)

    def contains(self, t) -> bool:
        """Exact membership of the angle t in the open arc."""
        return 0 < (Fraction(t) - self.start) % 1 < self.length

    def contains_arc(self, other: "CircleArc") -> bool:
        """True if other (as an open set) is a subset of this open arc."""
        offset = (other.start - self.start) % 1
        return offset + other.length <= self.length

    def contains_closure(self, other: "CircleArc") -> bool:
        """True if the closure of other lies inside this open arc."""
        offset = (other.start - self.start) % 1
        return offset > 0 and offset + other.length < self.length

    def is_disjoint(self, other: "CircleArc") -> bool:
        return not (
            self.contains(other.start)
            or other.contains(self.start)
            or self.start == other.start
        )

    def endpoints(self) -> tuple[Angle, Angle]:
        return self.start, self.end

    def __str__(self) -> str:
        hi = Fraction(self.start) + self.length
        return f"({self.start},{hi.numerator}/{hi.denominator})"
