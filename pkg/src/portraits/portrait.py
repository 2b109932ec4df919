"""Formal orbit portraits: validation, derived statistics, and construction.

An orbit portrait is a cyclically ordered family A_1..A_p of angle sets, one
per point of a periodic orbit, listing the external rays landing there.  The
four defining conditions (rational-periodic angles, order-preserving
bijections under doubling, one common ray period, pairwise unlinked sets) are
checked exactly, and every derived quantity — valence, rotation number,
characteristic arc, primitive/satellite kind — comes out of the same
combinatorics.
"""

from __future__ import annotations

import enum
import json
import re
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from functools import cached_property

from .angles import Angle, angles_of_period, double, exact_period, orbit
from .circle import CircleArc
from .symbolic import admissible_tau


class PortraitError(ValueError):
    """Base class for portrait validation and construction failures."""


class NotPeriodic(PortraitError):
    """Condition (1) failed: some angle is not periodic under doubling."""


class DoublingNotBijective(PortraitError):
    """Condition (2) failed: doubling does not map A_j onto A_{j+1} bijectively."""


class CyclicOrderViolated(PortraitError):
    """Condition (2) failed: doubling does not preserve cyclic order on some A_j."""


class PeriodsDiffer(PortraitError):
    """Condition (3) failed: the angles do not share one exact period."""


class Linked(PortraitError):
    """Condition (4) failed: two angle sets interleave on the circle."""


class NotARayPair(PortraitError):
    """The two angles never land at a common point."""


class PeriodMismatch(PortraitError):
    """Ray-pair construction needs two angles of equal exact period."""


class ZeroPortraitError(PortraitError):
    """Operation undefined for the zero portrait."""


class PortraitKind(enum.Enum):
    ZERO = "zero"
    PRIMITIVE = "primitive"
    SATELLITE = "satellite"


@dataclass(frozen=True)
class OrbitPortrait:
    """A validated portrait in canonical form.

    ``angle_sets[0]`` is the critical value set A_1 (the one whose
    complementary arcs include the characteristic arc), each set is sorted
    ascending, and consecutive sets are related by angle doubling.  Use
    ``validate`` or the parsers to build instances.
    """

    angle_sets: tuple[tuple[Angle, ...], ...]
    orbit_period: int
    valence: int
    ray_period: int
    rotation: Fraction
    kind: PortraitKind

    @property
    def is_nontrivial(self) -> bool:
        return self.valence >= 2 or self.kind is PortraitKind.ZERO

    def all_angles(self) -> list[Angle]:
        return sorted(t for s in self.angle_sets for t in s)

    def complementary_arcs(self, j: int) -> list[CircleArc]:
        """The v connected arcs of the complement of A_{j+1} (0-based j)."""
        pts = self.angle_sets[j]
        return [
            CircleArc.between(pts[i], pts[(i + 1) % len(pts)])
            for i in range(len(pts))
        ]

    def critical_and_value_arcs(self) -> list[tuple[CircleArc, CircleArc]]:
        """Per index j, the critical arc of A_j and the value arc of A_{j+1}.

        The critical arc is the unique complementary arc longer than 1/2; its
        image under doubling wraps once around the circle and double-covers
        the returned critical value arc, of length 2*len - 1.
        """
        if self.kind is PortraitKind.ZERO:
            raise ZeroPortraitError("the zero portrait has no critical arcs")
        if self.valence < 2:
            raise PortraitError("critical arcs need valence >= 2")
        out = []
        for j in range(self.orbit_period):
            longs = [a for a in self.complementary_arcs(j) if a.length > Fraction(1, 2)]
            assert len(longs) == 1, "exactly one critical arc per orbit point"
            crit = longs[0]
            value = CircleArc(double(crit.start), 2 * crit.length - 1)
            nxt = (j + 1) % self.orbit_period
            assert value in self.complementary_arcs(nxt)
            out.append((crit, value))
        return out

    @cached_property
    def characteristic_arc(self) -> CircleArc:
        """The unique shortest complementary arc; unique by the general theory."""
        if self.kind is PortraitKind.ZERO:
            return CircleArc(Angle(0), Fraction(1))
        if self.valence < 2:
            raise PortraitError("a valence-1 portrait has no characteristic arc")
        arcs = [a for j in range(self.orbit_period) for a in self.complementary_arcs(j)]
        arcs.sort(key=lambda a: a.length)
        assert arcs[0].length < arcs[1].length, "shortest arc must be unique"
        shortest = arcs[0]
        value_arcs = [v for _, v in self.critical_and_value_arcs()]
        assert shortest in value_arcs
        assert all(v.contains_arc(shortest) for v in value_arcs)
        return shortest

    def __str__(self) -> str:
        return (
            "{"
            + ",".join("{" + ",".join(map(str, s)) + "}" for s in self.angle_sets)
            + "}"
        )

    def to_json(self) -> dict:
        try:
            arc = self.characteristic_arc
            arc_json = [str(arc.start), str(arc.end)]
        except PortraitError:
            arc_json = None
        return {
            "sets": [[str(t) for t in s] for s in self.angle_sets],
            "orbit_period": self.orbit_period,
            "valence": self.valence,
            "ray_period": self.ray_period,
            "rotation": f"{self.rotation.numerator}/{self.rotation.denominator}",
            "kind": self.kind.value,
            "characteristic_arc": arc_json,
        }


ZERO_PORTRAIT: OrbitPortrait  # defined after validate()


def _cyclic_shift(order: list[int]) -> int | None:
    """The shift s with order[i] = (i + s) mod v for all i, if one exists."""
    v = len(order)
    s = order[0]
    if all(order[i] == (i + s) % v for i in range(v)):
        return s
    return None


def validate(sets) -> OrbitPortrait:
    """Check the four portrait conditions and return the canonical portrait.

    ``sets`` is an iterable of angle collections listed in dynamical order
    (doubling maps each onto the next, cyclically).  Raises the subclass of
    PortraitError naming the first violated condition.

    All checks run on integers over the common denominator of the angles.
    """
    angle_sets = [tuple(sorted(Angle(t) for t in s)) for s in sets]
    if not angle_sets or any(not s for s in angle_sets):
        raise PortraitError("portrait needs non-empty angle sets")
    p = len(angle_sets)

    # (1) rational and periodic under doubling
    periods = []
    for s in angle_sets:
        for t in s:
            n = exact_period(t)
            if n is None:
                raise NotPeriodic(f"{t} is not periodic under doubling")
            periods.append(n)

    denom = 1
    for s in angle_sets:
        for t in s:
            denom = denom * t.denominator // gcd(denom, t.denominator)
    grid = [[t.numerator * (denom // t.denominator) for t in s] for s in angle_sets]

    # (2) doubling carries A_j bijectively onto A_{j+1}, preserving cyclic order
    v = len(grid[0])
    for j, s in enumerate(grid):
        nxt = grid[(j + 1) % p]
        image = [2 * a % denom for a in s]
        if len(s) != v or set(image) != set(nxt):
            raise DoublingNotBijective(
                f"doubling does not map set {j} onto set {(j + 1) % p}"
            )
        positions = [nxt.index(a) for a in image]
        if _cyclic_shift(positions) is None:
            raise CyclicOrderViolated(f"cyclic order broken from set {j}")

    # (3) one common period
    ray_period = periods[0]
    if any(n != ray_period for n in periods):
        raise PeriodsDiffer(f"angle periods {sorted(set(periods))} differ")

    # (4) pairwise unlinked
    for i in range(p):
        for j in range(i + 1, p):
            a, b = grid[i], grid[j]
            if set(a) & set(b):
                raise Linked(f"sets {i} and {j} share an angle")
            gaps = {bisect_left(a, x) for x in b}
            if len(gaps) > 1 and not (gaps == {0, len(a)}):
                raise Linked(f"sets {i} and {j} are linked")

    # Rotation number from the action of 2^p on each set; it must come out
    # the same for every set, so compute on all and compare.
    mult = pow(2, p, denom)
    rotations = set()
    for s in grid:
        image = [a * mult % denom for a in s]
        shift = _cyclic_shift([s.index(a) for a in image])
        assert shift is not None
        rotations.add(Fraction(shift, v))
    assert len(rotations) == 1, "rotation number must not depend on the orbit point"
    rotation = rotations.pop()
    r = rotation.denominator if rotation else 1
    assert ray_period == r * p, "ray period must equal r * orbit period"
    assert v == r or (r == 1 and v <= 2), "cycle number v/r must be 1 or 2"

    if grid == [[0]]:
        kind = PortraitKind.ZERO
    elif r > 1:
        kind = PortraitKind.SATELLITE
    else:
        kind = PortraitKind.PRIMITIVE

    # Canonical indexing: rotate so the set owning the shortest complementary
    # arc (the critical value set) comes first.
    if v >= 2:
        best = None
        for j, s in enumerate(grid):
            for i in range(v):
                length = (s[(i + 1) % v] - s[i]) % denom
                if best is None or length < best[0]:
                    best = (length, j)
        angle_sets = angle_sets[best[1] :] + angle_sets[: best[1]]
    elif kind is not PortraitKind.ZERO:
        j = min(range(p), key=lambda i: angle_sets[i][0])
        angle_sets = angle_sets[j:] + angle_sets[:j]

    return OrbitPortrait(
        angle_sets=tuple(angle_sets),
        orbit_period=p,
        valence=v,
        ray_period=ray_period,
        rotation=rotation,
        kind=kind,
    )


ZERO_PORTRAIT = validate([[Angle(0)]])


_LITERAL = re.compile(r"\{([^{}]*)\}")


def parse_portrait(text: str) -> OrbitPortrait:
    """Parse a portrait literal like "{{22/63,25/63,37/63},{11/63,44/63,50/63}}".

    Also accepts the JSON form produced by ``OrbitPortrait.to_json`` and a
    bare comma-separated ray pair "t-,t+" (built via portrait_from_ray_pair).
    """
    text = text.strip()
    if text.startswith("{{"):
        inner = text[1:-1]
        groups = _LITERAL.findall(inner)
        if not groups:
            raise PortraitError(f"cannot parse portrait literal: {text!r}")
        return validate([[Angle(a) for a in g.split(",")] for g in groups])
    if text.startswith("{") or text.startswith("["):
        data = json.loads(text)
        sets = data["sets"] if isinstance(data, dict) else data
        return validate([[Angle(a) for a in s] for s in sets])
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) == 2:
        portrait, _ = portrait_from_ray_pair(Angle(parts[0]), Angle(parts[1]))
        return portrait
    raise PortraitError(f"cannot parse portrait: {text!r}")


def _grouped_portrait(t_minus: Angle, t_plus: Angle) -> OrbitPortrait | None:
    """Group both doubling orbits by itinerary for a tau inside (t-, t+).

    Returns the resulting portrait when the endpoint itineraries agree (they
    then land together for any parameter with external angle tau), else None.

    Runs on integers over the period grid k/(2^n - 1): the symbol of an angle
    a/d is 1 exactly when (a/d - tau/2) mod 1 < 1/2, and the itinerary of
    2^k t is the k-shift of the itinerary of t, so one symbol pass per orbit
    suffices.
    """
    n = exact_period(t_minus)
    d = 2**n - 1
    a_minus = int(t_minus * d)
    a_plus = int(t_plus * d)

    def int_orbit(a: int) -> list[int]:
        out = [a]
        for _ in range(n - 1):
            out.append(out[-1] * 2 % d)
        return out

    orbits = [int_orbit(a_minus)]
    if a_plus not in orbits[0]:
        orbits.append(int_orbit(a_plus))
    pts = {a for orb in orbits for a in orb}
    forbidden = {Angle(a, d) for a in pts}
    tau = admissible_tau(CircleArc.between(t_minus, t_plus), forbidden)
    p, q = tau.numerator, tau.denominator

    # symbol(a/d) = 1 iff (2aq - pd) mod 2qd < qd; tau avoids the orbit set,
    # so no point hits the partition boundary.
    modulus, half = 2 * q * d, q * d
    keys: dict[int, tuple] = {}
    for orb in orbits:
        symbols = [1 if (2 * a * q - p * d) % modulus < half else 0 for a in orb]
        symbols += symbols
        for k, a in enumerate(orb):
            keys[a] = tuple(symbols[k : k + n])
    if keys[a_minus] != keys[a_plus]:
        return None

    classes: dict[tuple, list[int]] = {}
    for a, key in keys.items():
        classes.setdefault(key, []).append(a)
    if len({len(c) for c in classes.values()}) != 1:
        return None
    # Walk the classes in dynamical order starting from the endpoint class.
    sets = []
    key = keys[a_minus]
    while True:
        sets.append([Angle(a, d) for a in classes[key]])
        key = keys[classes[key][0] * 2 % d]
        if key == keys[a_minus]:
            break
    assert sum(len(s) for s in sets) == len(pts)
    try:
        return validate(sets)
    except PortraitError:
        return None


def portrait_from_ray_pair(t_minus, t_plus) -> tuple[OrbitPortrait, bool]:
    """Portrait landing the two rays together, plus a characteristic flag.

    The flag is True exactly when (t-, t+) is the characteristic arc of the
    returned portrait.  Non-characteristic co-landing pairs (the non-extreme
    angle pairs inside one set of a satellite portrait) still resolve, via the
    conjugate of t-; genuinely unrelated pairs raise NotARayPair.
    """
    t_minus, t_plus = Angle(t_minus), Angle(t_plus)
    if t_minus == t_plus:
        if t_minus == 0:
            return ZERO_PORTRAIT, True
        raise NotARayPair("a ray pair needs two distinct angles")
    n_minus, n_plus = exact_period(t_minus), exact_period(t_plus)
    if n_minus is None or n_plus is None:
        raise NotPeriodic("ray pair angles must be periodic under doubling")
    if n_minus != n_plus:
        raise PeriodMismatch(f"periods {n_minus} and {n_plus} differ")

    arc = CircleArc.between(t_minus, t_plus)
    portrait = _grouped_portrait(t_minus, t_plus)
    if portrait is not None:
        return portrait, portrait.characteristic_arc == arc

    partner = conjugate_angle(t_minus)
    if partner is not None:
        lo, hi = min(t_minus, partner), max(t_minus, partner)
        portrait = _grouped_portrait(lo, hi)
        assert portrait is not None
        for s in portrait.angle_sets:
            if t_minus in s:
                if t_plus in s:
                    return portrait, False
                break
    raise NotARayPair(f"rays {t_minus} and {t_plus} never land together")


def conjugate_angle(t) -> Angle | None:
    """The unique partner angle bounding the same wake (None only for t = 0).

    Scans the angles of equal exact period, cheaply discarding candidates
    whose joint arc contains points of either doubling orbit (a
    characteristic arc contains none), then confirms with the full itinerary
    grouping.  Wake uniqueness makes the first confirmed candidate the
    partner regardless of scan order.
    """
    t = Angle(t)
    if t == 0:
        return None
    n = exact_period(t)
    if n is None:
        raise NotPeriodic(f"{t} is not periodic under doubling")
    orb_t = sorted(orbit(t))
    for cand in sorted(angles_of_period(n), key=lambda u: abs(u - t)):
        if cand == t:
            continue
        lo, hi = min(t, cand), max(t, cand)
        i, j = bisect_right(orb_t, lo), bisect_left(orb_t, hi)
        if i != j:  # an orbit point of t sits strictly inside (lo, hi)
            continue
        if any(lo < u < hi for u in orbit(cand)):
            continue
        portrait = _grouped_portrait(lo, hi)
        if portrait is None:
            continue
        arc = portrait.characteristic_arc
        if arc.start == lo and arc.end == hi:
            return cand
    return None
