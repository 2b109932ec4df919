"""Counting and exhaustive enumeration of portraits, wakes, and forcing.

The number of angles of exact period n under doubling is nu2(n), obtained by
Moebius inversion of 2^k = sum of nu2(n) over n | k.  Pairing those angles
into characteristic arcs enumerates all non-trivial portraits of a given ray
period; nesting of the arcs yields the forcing partial order, which is a
tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .angles import Angle, angles_of_period, exact_period, orbit
from .circle import CircleArc
from .portrait import (
    ZERO_PORTRAIT,
    OrbitPortrait,
    PortraitError,
    _grouped_portrait,
)


def _mobius(n: int) -> int:
    mu, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            mu = -mu
        k += 1
    return -mu if n > 1 else mu


def nu2(n: int) -> int:
    """Number of angles of exact period n under doubling (n >= 1).

    nu2(1) = 2 by the defining recursion even though only the angle 0 is
    actually fixed; see angles_of_period for the n = 1 exception.
    """
    if n < 1:
        raise ValueError("period must be >= 1")
    return sum(_mobius(n // d) * 2**d for d in range(1, n + 1) if n % d == 0)


_pairing_cache: dict[int, dict[Angle, Angle]] = {}
_portrait_cache: dict[int, tuple[OrbitPortrait, ...]] = {}


def conjugate_pairing(n: int) -> dict[Angle, Angle]:
    """The involution pairing each period-n angle with its wake partner.

    Computed by scanning: the smallest unpaired angle is always the left end
    of its characteristic arc, and candidates are tested in increasing order
    after discarding any whose joint arc contains points of either orbit.
    Results are memoized per period.
    """
    if n in _pairing_cache:
        return _pairing_cache[n]
    enumerate_portraits(n)
    return _pairing_cache[n]


def enumerate_portraits(n: int) -> tuple[OrbitPortrait, ...]:
    """All non-trivial portraits of ray period exactly n, sorted by arc start.

    For n >= 2 there are nu2(n)/2 of them (one per conjugate angle pair);
    n = 1 yields only the zero portrait.
    """
    if n in _portrait_cache:
        return _portrait_cache[n]
    if n < 1:
        raise ValueError("period must be >= 1")
    if n == 1:
        _pairing_cache[1] = {}
        _portrait_cache[1] = (ZERO_PORTRAIT,)
        return _portrait_cache[1]

    unpaired = list(angles_of_period(n))
    orbits = {t: sorted(orbit(t)) for t in unpaired}
    pairing: dict[Angle, Angle] = {}
    portraits: list[OrbitPortrait] = []
    index = 0
    while index < len(unpaired):
        t = unpaired[index]
        index += 1
        if t in pairing:
            continue
        found = None
        for cand in unpaired[index:]:
            if cand in pairing:
                continue
            if any(t < u < cand for u in orbits[t]):
                break  # no admissible partner beyond the next orbit point
            if any(t < u < cand for u in orbits[cand]):
                continue
            portrait = _grouped_portrait(t, cand)
            if portrait is None:
                continue
            arc = portrait.characteristic_arc
            if arc.start == t and arc.end == cand:
                found = (cand, portrait)
                break
        assert found is not None, f"no partner found for {t} at period {n}"
        cand, portrait = found
        pairing[t] = cand
        pairing[cand] = t
        portraits.append(portrait)

    assert len(portraits) == nu2(n) // 2
    portraits.sort(key=lambda P: P.characteristic_arc.start)
    _pairing_cache[n] = pairing
    _portrait_cache[n] = tuple(portraits)
    return _portrait_cache[n]


def portraits_up_to(max_period: int) -> list[OrbitPortrait]:
    return [P for n in range(1, max_period + 1) for P in enumerate_portraits(n)]


def forces(p: OrbitPortrait, q: OrbitPortrait) -> bool:
    """Whether an orbit with portrait p forces a repelling orbit with portrait q.

    True exactly when the closure of p's characteristic arc lies strictly
    inside q's (so every parameter in p's wake also lies in q's wake).
    """
    if not (p.is_nontrivial and q.is_nontrivial):
        raise PortraitError("forcing is defined for non-trivial portraits")
    if p == q:
        return False
    return q.characteristic_arc.contains_closure(p.characteristic_arc)


@dataclass
class TreeNode:
    portrait: OrbitPortrait
    parent: int | None
    children: list[int] = field(default_factory=list)


@dataclass
class ForcingTree:
    """Forcing relations among all portraits of ray period <= max_period.

    Node 0 is the zero portrait with arc (0, 1); every other node's parent is
    the portrait with the smallest characteristic arc strictly containing its
    own (arcs of distinct portraits are nested or disjoint, never crossing).
    """

    max_period: int
    nodes: list[TreeNode]

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    def to_json(self) -> dict:
        return {
            "max_period": self.max_period,
            "nodes": [
                {
                    "id": i,
                    "parent": node.parent,
                    "children": node.children,
                    "portrait": node.portrait.to_json(),
                }
                for i, node in enumerate(self.nodes)
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph forcing {", "  rankdir=TB;"]
        for i, node in enumerate(self.nodes):
            P = node.portrait
            arc = P.characteristic_arc
            rot = f"{P.rotation.numerator}/{P.rotation.denominator}"
            label = (
                f"{arc}\\np={P.orbit_period} v={P.valence} "
                f"rot={rot}\\n{P.kind.value}"
            )
            lines.append(f'  n{i} [label="{label}"];')
        for i, node in enumerate(self.nodes):
            for child in node.children:
                lines.append(f"  n{i} -> n{child};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def forcing_tree(max_period: int) -> ForcingTree:
    """Nesting tree of all characteristic arcs with ray period <= max_period."""
    ordered = sorted(
        portraits_up_to(max_period),
        key=lambda P: (-P.characteristic_arc.length, P.characteristic_arc.start),
    )
    nodes = [TreeNode(ordered[0], None)]
    assert ordered[0].kind.name == "ZERO"
    for P in ordered[1:]:
        arc = P.characteristic_arc
        parent = None
        for i, node in enumerate(nodes):
            candidate = node.portrait.characteristic_arc
            if candidate.length > arc.length and candidate.contains_arc(arc):
                if parent is None or candidate.length < nodes[parent].portrait.characteristic_arc.length:
                    parent = i
        assert parent is not None
        nodes.append(TreeNode(P, parent))
        nodes[parent].children.append(len(nodes) - 1)
    return ForcingTree(max_period, nodes)


class OnWakeBoundary(PortraitError):
    """The queried angle is an endpoint of some characteristic arc."""

    def __init__(self, portrait: OrbitPortrait):
        super().__init__(
            f"angle lies on the wake boundary of {portrait.characteristic_arc}"
        )
        self.portrait = portrait


def wake_address(tau, max_period: int) -> list[OrbitPortrait]:
    """All portraits of ray period <= max_period whose wake contains tau.

    Sorted outermost to innermost; the chain is totally ordered by arc
    nesting.  An angle equal to a wake boundary raises OnWakeBoundary with
    the portrait attached.
    """
    tau = Fraction(tau) % 1
    if tau == 0:
        raise ValueError("wake addresses are defined for angles in (0, 1)")
    chain = []
    for P in portraits_up_to(max_period):
        arc = P.characteristic_arc
        if tau in (arc.start, Fraction(arc.end)):
            raise OnWakeBoundary(P)
        if arc.contains(tau):
            chain.append(P)
    chain.sort(key=lambda P: -P.characteristic_arc.length)
    for outer, inner in zip(chain, chain[1:]):
        assert outer.characteristic_arc.contains_arc(inner.characteristic_arc)
    return chain
