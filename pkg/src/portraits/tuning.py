"""Tuning: composing portraits by rewriting binary expansions of angles.

A non-trivial portrait P with characteristic arc (t-, t+) of ray period n
turns the two n-bit blocks of t- and t+ into a substitution on binary
digits.  Applied to every angle of another portrait's characteristic arc it
composes portraits; applied to all of [0, 1] it parametrizes the Cantor set
of angles whose rays accumulate on the small copy of the connectedness locus
inside P's wake.
"""

from __future__ import annotations

from fractions import Fraction

from .angles import (
    Angle,
    SideRequired,
    binary_block,
    binary_expansion,
    bits_value,
)
from .portrait import OrbitPortrait, PortraitKind, portrait_from_ray_pair


def tuning_words(portrait: OrbitPortrait) -> tuple[str, str]:
    """The substitution words (W0, W1): binary blocks of the arc endpoints.

    For the zero portrait these are "0" and "1", making tuning the identity.
    """
    if not portrait.is_nontrivial:
        raise ValueError("tuning words need a non-trivial portrait")
    if portrait.kind is PortraitKind.ZERO:
        return "0", "1"
    arc = portrait.characteristic_arc
    return binary_block(arc.start), binary_block(arc.end)


def tune_angle(portrait: OrbitPortrait, t, side: str | None = None) -> Angle:
    """Image of the angle t in [0, 1] under tuning by the portrait.

    Every binary digit of t is replaced by the corresponding endpoint block;
    dyadic angles have two expansions and need side "L" or "R" to choose the
    one-sided limit (SideRequired otherwise).  The result is exact.
    """
    w0, w1 = tuning_words(portrait)
    prefix, block = binary_expansion(t, side)
    words = {"0": w0, "1": w1}
    new_prefix = "".join(words[b] for b in prefix)
    new_block = "".join(words[b] for b in block)
    return Angle(bits_value(new_prefix, new_block))


def tune_portrait(p: OrbitPortrait, q: OrbitPortrait) -> OrbitPortrait:
    """The composed portrait, with characteristic arc the tuned arc of q.

    Ray periods multiply.  The zero portrait is a two-sided identity.
    """
    if not (p.is_nontrivial and q.is_nontrivial):
        raise ValueError("tuning composes non-trivial portraits")
    arc = q.characteristic_arc
    lo = tune_angle(p, Fraction(arc.start), "R")
    hi = tune_angle(p, Fraction(arc.start) + arc.length, "L")
    composed, characteristic = portrait_from_ray_pair(lo, hi)
    assert characteristic, "tuned endpoints must bound the composed wake"
    assert composed.ray_period == p.ray_period * q.ray_period
    return composed


def renorm_window_angles(p: OrbitPortrait, k: int) -> list[tuple[Angle, Angle]]:
    """Boundary ray pairs added at level k of the renormalization windows.

    These are the one-sided tuning limits at the level-k dyadic angles
    (odd/2^k), bounding the 2^(k-1) sectors pruned from the wake at that
    level; level 1 reproduces the pulled-back pair t- + l/2^n, t+ - l/2^n.
    """
    if k < 1:
        raise ValueError("window level must be >= 1")
    pairs = []
    for odd in range(1, 2**k, 2):
        alpha = Fraction(odd, 2**k)
        pairs.append((tune_angle(p, alpha, "L"), tune_angle(p, alpha, "R")))
    return pairs


def _cantor_intervals(p: OrbitPortrait):
    arc = p.characteristic_arc
    n = p.ray_period
    lo = Fraction(arc.start)
    hi = lo + arc.length
    step = arc.length / 2**n
    return n, (lo, lo + step), (hi - step, hi)


def cantor_contains(p: OrbitPortrait, t) -> bool:
    """Whether t survives the middle-gap construction inside p's arc.

    True when the whole forward orbit of t under multiplication by 2^n stays
    in the union of the two closed end intervals of length l/2^n; the orbit
    of a rational angle is finite, so the test is exact.
    """
    n, left, right = _cantor_intervals(p)
    u = Fraction(t) % 1
    seen = set()
    while u not in seen:
        seen.add(u)
        if not (left[0] <= u <= left[1] or right[0] <= u <= right[1]):
            return False
        u = (u * 2**n) % 1
    return True


def cantor_decode(p: OrbitPortrait, t) -> Angle:
    """Inverse of tune_angle on the Cantor set: recover the source angle.

    Bit k is 0 or 1 according to the end interval holding the k-th iterate
    under multiplication by 2^n; points on both intervals (possible only for
    the zero portrait's degenerate construction) read as the left one.
    """
    if not cantor_contains(p, t):
        raise ValueError(f"{t} is not in the tuned Cantor set")
    n, left, right = _cantor_intervals(p)
    u = Fraction(t) % 1
    seen: dict[Fraction, int] = {}
    bits: list[str] = []
    while u not in seen:
        seen[u] = len(bits)
        bits.append("0" if left[0] <= u <= left[1] else "1")
        u = (u * 2**n) % 1
    start = seen[u]
    return Angle(bits_value("".join(bits[:start]), "".join(bits[start:])))
