"""Exact arithmetic on rational angles of the circle R/Z under the doubling map.

Angles are the universal currency of the whole package: external rays are
indexed by them, portraits are sets of them, and tuning rewrites their binary
expansions.  Everything here is exact (arbitrary-precision rationals); floats
never appear.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class Angle(Fraction):
    """A point of the circle R/Z, stored as a reduced fraction in [0, 1).

    Accepts anything ``Fraction`` accepts, including unreduced text such as
    ``"3/15"``; the value is reduced and taken modulo 1 (so ``Angle(1)`` is
    the zero angle).  Comparison, hashing and arithmetic are inherited from
    ``Fraction``; arithmetic results are plain fractions, re-wrap as needed.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        if denominator is not None and isinstance(numerator, int):
            return super().__new__(cls, numerator % denominator, denominator)
        value = Fraction(numerator, denominator) % 1
        return super().__new__(cls, value)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Angle({self.numerator}/{self.denominator})"


def double(t: Angle) -> Angle:
    """Image of t under the doubling map, 2t mod 1."""
    return Angle(2 * t)


def orbit(t: Angle) -> list[Angle]:
    """Forward orbit of t under doubling, listed until the first repeat.

    For a periodic angle this is exactly one cycle starting at t; for a
    preperiodic angle it is the tail followed by one full cycle.
    """
    seen: dict[Angle, int] = {}
    out: list[Angle] = []
    u = t
    while u not in seen:
        seen[u] = len(out)
        out.append(u)
        u = double(u)
    return out


def exact_period(t: Angle) -> int | None:
    """Smallest n >= 1 with 2^n t = t mod 1, or None if t is not periodic.

    An angle p/q in lowest terms is periodic under doubling exactly when q is
    odd, and its period is the multiplicative order of 2 modulo q.
    """
    q = t.denominator
    if q % 2 == 0:
        return None
    n = 1
    pow2 = 2 % q
    while pow2 != 1 % q:
        pow2 = (2 * pow2) % q
        n += 1
    return n


def preperiod_period(t: Angle) -> tuple[int, int]:
    """Smallest (k, n) with 2^(k+n) t = 2^k t mod 1 (n >= 1)."""
    q = t.denominator
    k = 0
    while q % 2 == 0:
        q //= 2
        k += 1
    period = exact_period(Angle(1, q)) if q > 1 else 1
    assert period is not None
    return k, period


@lru_cache(maxsize=64)
def angles_of_period(n: int) -> tuple[Angle, ...]:
    """All angles of exact period n under doubling, sorted ascending.

    For n >= 2 the count is nu2(n); n = 1 is the lone exception, returning
    only the fixed angle 0 although the counting function gives nu2(1) = 2
    (the convention counts the 0 = 1 endpoint identification twice).
    """
    if n < 1:
        raise ValueError("period must be >= 1")
    denom = 2**n - 1
    # i/(2^n - 1) has period dividing d | n  iff  (2^n-1)/(2^d-1) divides i.
    strides = [denom // (2**d - 1) for d in range(1, n) if n % d == 0]
    out = []
    for i in range(denom):
        if any(i % s == 0 for s in strides):
            continue
        out.append(Angle(i, denom))
    if n == 1:
        out = [Angle(0)]
    return tuple(out)


def binary_block(t: Angle) -> str:
    """Repeating block of the binary expansion of a periodic angle.

    The block has length equal to the exact period n, and satisfies
    value 0.(block block block ...) in base 2 = t, i.e. t = int(block, 2)
    divided by 2^n - 1.
    """
    n = exact_period(t)
    if n is None:
        raise ValueError(f"{t} is not periodic under doubling")
    scaled = t * (2**n - 1)
    assert scaled.denominator == 1
    return format(int(scaled), f"0{n}b")


def block_value(block: str) -> Angle:
    """Angle whose binary expansion repeats the given non-empty bit block."""
    if not block or set(block) - {"0", "1"}:
        raise ValueError(f"not a bit word: {block!r}")
    return Angle(int(block, 2), 2 ** len(block) - 1)


def bits_value(prefix: str, block: str) -> Fraction:
    """Value in [0, 1] of the binary expansion prefix + repeating block.

    Unlike ``block_value`` the result is not reduced modulo 1, so the all-ones
    expansion evaluates to 1 exactly.
    """
    head = Fraction(int(prefix, 2) if prefix else 0)
    tail = Fraction(int(block, 2), 2 ** len(block) - 1)
    return (head + tail) / 2 ** len(prefix)


def binary_expansion(t, side: str | None = None) -> tuple[str, str]:
    """Binary expansion of t in [0, 1] as a (prefix, repeating block) pair.

    Rationals with odd-free denominator (dyadics, including 0) have two
    expansions and require a side: "R" selects the expansion ending in
    repeating 0s (the right-hand limit), "L" the one ending in repeating 1s.
    For t = 0 side "L" is read as the expansion of 1, so bits_value of the
    result is 1.  Non-dyadic rationals have a unique expansion and ignore
    the side argument.
    """
    t = Fraction(t) % 1
    k, n = preperiod_period(Angle(t))
    dyadic = (t * 2**k).denominator == 1
    if not dyadic:
        bits = []
        u = t
        for _ in range(k + n):
            u = u * 2
            bits.append("1" if u >= 1 else "0")
            u = u % 1
        return "".join(bits[:k]), "".join(bits[k:])
    if side not in ("L", "R"):
        raise SideRequired(f"dyadic angle {t} needs side 'L' or 'R'")
    if side == "R":
        if t == 0:
            return "", "0"
        bits = []
        u = t
        while u != 0:
            u = u * 2
            bits.append("1" if u >= 1 else "0")
            u = u % 1
        return "".join(bits), "0"
    # Left-hand limit: terminate, then borrow the final 1 into repeating 1s.
    if t == 0:
        return "", "1"
    prefix, _ = binary_expansion(t, "R")
    assert prefix.endswith("1")
    return prefix[:-1] + "0", "1"


class SideRequired(ValueError):
    """A dyadic angle was used where a one-sided limit must be chosen."""
