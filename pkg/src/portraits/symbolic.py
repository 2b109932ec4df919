"""Symbolic dynamics of the doubling map relative to a critical value angle.

A critical value angle tau in (0, 1] splits the circle into two half-arcs at
the preimages tau/2 and (tau+1)/2.  Itineraries of angle orbits through that
partition decide which rays land together; monotone degree-one lifts built
from a bit word compute combinatorial rotation numbers exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING

from .angles import Angle, orbit, preperiod_period
from .circle import CircleArc

if TYPE_CHECKING:  # pragma: no cover
    from .portrait import OrbitPortrait


class _BoundarySymbol:
    """Marker for an orbit point hitting a partition endpoint exactly."""

    __slots__ = ()

    def __repr__(self):
        return "*"


BOUNDARY = _BoundarySymbol()


class BoundaryCollision(ValueError):
    """An orbit hit a partition boundary where a 0/1 symbol was required."""


def _tau_value(tau) -> Fraction:
    """Critical value angle as a number in (0, 1]; the zero angle reads as 1."""
    tau = Fraction(tau) % 1
    return Fraction(1) if tau == 0 else tau


def partition_arcs(tau) -> tuple[CircleArc, CircleArc]:
    """The two open half-arcs I(0) = ((tau-1)/2, tau/2) and I(1) = (tau/2, (tau+1)/2)."""
    tau = _tau_value(tau)
    half = Fraction(1, 2)
    return (
        CircleArc(Angle((tau - 1) / 2), half),
        CircleArc(Angle(tau / 2), half),
    )


@dataclass(frozen=True)
class Itinerary:
    """Eventually periodic symbol sequence over {0, 1, BOUNDARY}.

    ``symbols`` stores preperiod + period entries; later symbols repeat the
    final block.  Printed as e.g. "11(0)" with the repeating block in
    parentheses and BOUNDARY rendered as "*".
    """

    symbols: tuple
    preperiod: int
    period: int

    def symbol(self, k: int):
        if k < self.preperiod:
            return self.symbols[k]
        return self.symbols[self.preperiod + (k - self.preperiod) % self.period]

    def take(self, length: int) -> tuple:
        return tuple(self.symbol(k) for k in range(length))

    def __str__(self) -> str:
        def chunk(symbols):
            return "".join("*" if s is BOUNDARY else str(s) for s in symbols)

        head = chunk(self.symbols[: self.preperiod])
        block = chunk(self.symbols[self.preperiod :])
        return f"{head}({block})"


def _classify(t: Angle, tau: Fraction):
    boundary = (Angle(tau / 2), Angle((tau + 1) / 2))
    if t in boundary:
        return BOUNDARY
    i1 = CircleArc(boundary[0], Fraction(1, 2))
    return 1 if i1.contains(t) else 0


def itinerary(t: Angle, tau, length: int | None = None) -> Itinerary:
    """Symbol sequence of the doubling orbit of t through the tau-partition.

    Symbol k says which half-arc contains 2^k t, with BOUNDARY when the point
    equals tau/2 or (tau+1)/2 exactly.  The structural preperiod and period
    are minimized; ``length`` only asks for at least that many symbols to be
    directly available via ``take``.
    """
    tau = _tau_value(tau)
    t = Angle(t)
    pre, per = preperiod_period(t)
    pts = orbit(t)
    symbols = [_classify(u, tau) for u in pts]
    # Minimize the symbolic period, then absorb matching prefix symbols.
    block = symbols[pre:]
    for d in range(1, per + 1):
        if per % d == 0 and block == block[d:] + block[:d]:
            per = d
            block = block[:d]
            break
    while pre > 0 and symbols[pre - 1] == block[-1]:
        pre -= 1
        block = block[-1:] + block[:-1]
    itin = Itinerary(tuple(symbols[:pre] + block), pre, per)
    if length is not None:
        itin.take(length)
    return itin


def kneading_sequence(tau, length: int | None = None) -> Itinerary:
    """Itinerary of tau with respect to its own partition.

    For tau periodic of period n the symbols at indices n-1, 2n-1, ... hit the
    partition boundary and come out as BOUNDARY; callers wanting a one-sided
    resolution should perturb tau themselves.
    """
    return itinerary(Angle(tau), tau, length)


def rays_coland(t: Angle, u: Angle, tau) -> bool:
    """Whether two periodic angles have identical tau-itineraries.

    Raises BoundaryCollision if either orbit meets a partition endpoint;
    comparison length is twice the lcm of the angle periods.
    """
    it_t = itinerary(t, tau)
    it_u = itinerary(u, tau)
    if BOUNDARY in it_t.symbols or BOUNDARY in it_u.symbols:
        raise BoundaryCollision(f"orbit hits the tau/2 boundary for tau={tau}")
    span = 2 * (it_t.period * it_u.period) // gcd(it_t.period, it_u.period)
    span += max(it_t.preperiod, it_u.preperiod)
    return it_t.take(span) == it_u.take(span)


def admissible_tau(arc: CircleArc, avoid: set[Angle], tries: int = 16) -> Angle:
    """A tau in the open arc whose partition boundary misses the given orbit set.

    tau collides with the partition boundary of an angle set closed under
    doubling exactly when tau itself lies in the set, so the midpoint is
    tried first and then odd subdivisions k/(2*tries+1) across the arc.
    """
    tau = arc.midpoint
    if tau not in avoid:
        return tau
    for k in range(1, tries + 1):
        tau = Angle(arc.start + arc.length * Fraction(k, 2 * tries + 1))
        if tau not in avoid:
            return tau
    raise RuntimeError(f"no admissible critical value angle found in {arc}")


# ---------------------------------------------------------------------------
# Monotone degree-one lifts and translation numbers


def _word_bits(word: str) -> list[int]:
    if not word or set(word) - {"0", "1"}:
        raise ValueError(f"not a bit word: {word!r}")
    return [int(b) for b in word]


def lift_eval(word: str, tau, u) -> Fraction:
    """Exact value of the composite lift of the word at a rational point.

    Each bit b contributes the monotone map sending u to min(2u, tau) for
    b = 0 and max(2u, tau) for b = 1 on the fundamental window
    [(tau-1)/2, (tau+1)/2), extended by commuting with unit translation.
    Bits apply left to right: word[0] acts first.
    """
    tau = _tau_value(tau)
    u = Fraction(u)
    for b in _word_bits(word):
        m = (2 * u - tau + 1) // 2  # floor; shifts u into the window
        v = 2 * (u - m)
        u = (min(v, tau) if b == 0 else max(v, tau)) + m
    return u


def translation_number(word: str, tau, cap: int = 100_000):
    """Translation number of the word's composite lift, exact when possible.

    Iterates the lift from u = 0 with cycle detection on u mod 1; once the
    orbit revisits a residue the translation number is the accumulated integer
    displacement over the cycle length, an exact rational.  If no cycle shows
    up within ``cap`` applications of the word, returns a (lo, hi) interval
    of width <= 2/cap instead.

    The iteration runs on integers over the fixed denominator of tau: the
    lift doubles or resets to tau, so every iterate of 0 stays on that grid.
    """
    tau = _tau_value(tau)
    bits = _word_bits(word)
    den = tau.denominator
    top = tau.numerator
    a = 0  # current lift value is a/den
    seen: dict[int, tuple[int, int]] = {}
    for k in range(cap):
        residue = a % den
        if residue in seen:
            k0, a0 = seen[residue]
            return Fraction(a - a0, den * (k - k0))
        seen[residue] = (k, a)
        for b in bits:
            m = (2 * a - top + den) // (2 * den)
            v = 2 * (a - m * den)
            a = (min(v, top) if b == 0 else max(v, top)) + m * den
    return (Fraction(a - den, den * cap), Fraction(a + den, den * cap))


# ---------------------------------------------------------------------------
# Portrait symbol words


def sigma(portrait: "OrbitPortrait") -> str:
    """Length-p symbol word of the orbit point on the critical piece boundary.

    Uses the angle set that doubles onto the characteristic set, with any
    admissible critical value angle inside the characteristic arc; the word
    for the zero portrait is "0".
    """
    if portrait.kind.name == "ZERO":
        return "0"
    arc = portrait.characteristic_arc
    avoid = set(portrait.all_angles())
    tau = admissible_tau(arc, avoid)
    t0 = portrait.angle_sets[-1][0]  # the set mapping onto the characteristic set
    symbols = itinerary(t0, tau).take(portrait.orbit_period)
    assert BOUNDARY not in symbols
    return "".join(str(s) for s in symbols)


def sigma_star(portrait: "OrbitPortrait") -> str:
    """Ray-period-length word equal to repeated sigma with the first bit flipped."""
    word = sigma(portrait)
    n = portrait.ray_period
    repeated = word * (n // len(word))
    return ("1" if repeated[0] == "0" else "0") + repeated[1:]
