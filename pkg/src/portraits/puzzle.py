"""Markov puzzles cut out by the rays of a portrait.

Pieces are tracked purely by their boundary arcs at infinity: each piece is
the finite union of closed angle arcs whose rays it contains, and those arcs
determine the full transition structure under doubling.  The corrected
puzzle splits the critical piece with the ray pair at the co-critical point,
giving a partition where every non-critical piece maps homeomorphically onto
a union of pieces and the critical piece double-covers the critical value
piece.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .angles import Angle
from .portrait import OrbitPortrait, PortraitError, PortraitKind

Arc = tuple[Fraction, Fraction]  # closed arc (start, length), start in [0, 1)


class PuzzleError(PortraitError):
    """Internal inconsistency in puzzle construction (should not happen)."""


@dataclass(frozen=True)
class PuzzlePiece:
    """A puzzle piece, as the closed arc union of its ray angles at infinity."""

    index: int
    arcs: tuple[Arc, ...]
    is_critical: bool = False
    is_critical_value: bool = False

    @property
    def total_length(self) -> Fraction:
        return sum((length for _, length in self.arcs), Fraction(0))

    def contains_interior(self, t) -> bool:
        """True when the angle lies strictly inside one of the closed arcs."""
        t = Fraction(t) % 1
        return any(0 < (t - start) % 1 < length for start, length in self.arcs)

    def smallest_boundary_angle(self) -> Fraction:
        return min(start for start, _ in self.arcs)


def _faces(classes: list[tuple[Angle, ...]]) -> list[tuple[tuple, tuple[Arc, ...]]]:
    """Faces of the chord diagram whose polygons are the given classes.

    A face is an intersection of one complementary region per polygon, so the
    atomic arcs between consecutive marked angles belong to the same face
    exactly when they sit in the same complementary arc of every class.
    Returns (key, arcs) per face, the key listing one gap index per class.
    """
    marked = sorted({Fraction(t) for cls in classes for t in cls})
    m = len(marked)
    atoms: list[Arc] = []
    keys: list[tuple] = []
    for i in range(m):
        a = marked[i]
        b = marked[(i + 1) % m]
        length = (b - a) % 1 or Fraction(1)
        mid = (a + length / 2) % 1
        key = tuple(bisect_left(cls, mid) % len(cls) for cls in classes)
        atoms.append((a, length))
        keys.append(key)

    # Runs of circularly consecutive atoms with one key merge into one arc.
    runs: list[tuple[tuple, list[Arc]]] = []
    for atom, key in zip(atoms, keys):
        if runs and runs[-1][0] == key:
            start, length = runs[-1][1][-1]
            runs[-1][1][-1] = (start, length + atom[1])
        else:
            runs.append((key, [atom]))
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        key, tail = runs.pop()
        start, length = tail[-1]
        first = runs[0][1]
        first[0] = (start, length + first[0][1])
        tail.pop()
        first.extend(tail)

    grouped: dict[tuple, list[Arc]] = {}
    for key, arcs in runs:
        grouped.setdefault(key, []).extend(arcs)
    return [
        (key, tuple(sorted((s % 1, l) for s, l in arcs)))
        for key, arcs in grouped.items()
    ]


def _face_with_interior_point(faces, t: Fraction) -> tuple[Arc, ...]:
    for _, arcs in faces:
        if any(0 < (t - start) % 1 < length for start, length in arcs):
            return arcs
    raise PuzzleError(f"no face contains angle {t}")


def _critical_gap_key(classes: list[tuple[Angle, ...]]) -> tuple:
    """Gap index per class of the complementary arc longer than 1/2."""
    key = []
    for cls in classes:
        v = len(cls)
        idx = [
            i
            for i in range(v)
            if (Fraction(cls[(i + 1) % v]) - cls[i]) % 1 > Fraction(1, 2)
        ]
        assert len(idx) == 1
        # bisect-style gap labels: points in (cls[i], cls[i+1]) get index i+1 mod v
        key.append((idx[0] + 1) % v)
    return tuple(key)


def _require_puzzle_portrait(portrait: OrbitPortrait):
    if portrait.kind is PortraitKind.ZERO or portrait.valence < 2:
        raise PortraitError("puzzles need a portrait of valence >= 2")


def preliminary_puzzle(portrait: OrbitPortrait) -> list[PuzzlePiece]:
    """The pv - p + 1 pieces cut out by the portrait rays alone.

    Pieces are numbered by increasing smallest boundary angle; the flags mark
    the piece containing the critical point (the one inside every critical
    sector) and the one containing the critical value.
    """
    _require_puzzle_portrait(portrait)
    classes = list(portrait.angle_sets)
    faces = _faces(classes)
    p, v = portrait.orbit_period, portrait.valence
    if len(faces) != p * v - p + 1:
        raise PuzzleError(f"expected {p * v - p + 1} pieces, found {len(faces)}")
    crit_key = _critical_gap_key(classes)
    crit_arcs = next(arcs for key, arcs in faces if key == crit_key)
    value_arcs = _face_with_interior_point(faces, Fraction(portrait.characteristic_arc.midpoint))
    ordered = sorted((arcs for _, arcs in faces), key=lambda a: min(s for s, _ in a))
    return [
        PuzzlePiece(
            index=i,
            arcs=arcs,
            is_critical=arcs == crit_arcs,
            is_critical_value=arcs == value_arcs,
        )
        for i, arcs in enumerate(ordered)
    ]


def co_critical_angles(portrait: OrbitPortrait) -> tuple[Angle, Angle]:
    """Angles of the two rays landing at the co-critical point.

    These are the doubling preimages of the characteristic arc endpoints that
    do not belong to the orbit set mapping onto the characteristic set.
    """
    _require_puzzle_portrait(portrait)
    arc = portrait.characteristic_arc
    a0 = set(portrait.angle_sets[-1])
    out = []
    for t in (arc.start, arc.end):
        halves = [Angle(Fraction(t) / 2), Angle(Fraction(t) / 2 + Fraction(1, 2))]
        other = [h for h in halves if h not in a0]
        assert len(other) == 1, "exactly one preimage must miss the orbit set"
        out.append(other[0])
    lo, hi = sorted(out)
    return lo, hi


def corrected_puzzle(portrait: OrbitPortrait) -> list[PuzzlePiece]:
    """The pv - p + 2 pieces obtained by also cutting along the co-critical rays.

    Piece 0 is the critical piece (the doubling preimage of piece 1), piece 1
    the critical value piece bounded by the characteristic ray pair; the
    remaining pieces are numbered by increasing smallest boundary angle.
    """
    _require_puzzle_portrait(portrait)
    arc = portrait.characteristic_arc
    classes = list(portrait.angle_sets) + [co_critical_angles(portrait)]
    faces = _faces(classes)
    p, v = portrait.orbit_period, portrait.valence
    if len(faces) != p * v - p + 2:
        raise PuzzleError(f"expected {p * v - p + 2} pieces, found {len(faces)}")

    crit = _face_with_interior_point(
        faces, (Fraction(arc.start) / 2 + arc.length / 4) % 1
    )
    value = _face_with_interior_point(faces, Fraction(arc.midpoint))
    rest = sorted(
        (arcs for _, arcs in faces if arcs not in (crit, value)),
        key=lambda a: min(s for s, _ in a),
    )
    pieces = [
        PuzzlePiece(0, crit, is_critical=True),
        PuzzlePiece(1, value, is_critical_value=True),
    ]
    pieces += [PuzzlePiece(i + 2, arcs) for i, arcs in enumerate(rest)]
    total = sum(piece.total_length for piece in pieces)
    assert total == 1, f"piece lengths sum to {total}, not 1"
    return pieces


# ---------------------------------------------------------------------------
# Transition structure under doubling


def _merge_closed(intervals: list[list[Fraction]]) -> list[list[Fraction]]:
    intervals.sort()
    merged = [intervals[0]]
    for lo, hi in intervals[1:]:
        if lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return merged


def _normalized_union(arcs) -> list[tuple[Fraction, Fraction]]:
    """Closed arc union as disjoint (lo, hi) intervals, split at angle 0."""
    intervals = []
    for start, length in arcs:
        start = Fraction(start) % 1
        end = start + length
        if end > 1:
            intervals.append([Fraction(0), end - 1])
            intervals.append([start, Fraction(1)])
        else:
            intervals.append([start, end])
    return [(lo, hi) for lo, hi in _merge_closed(intervals)]


def _union_covers(union, arcs) -> bool:
    """Whether the union contains every given closed arc of the circle."""
    wraps = union[0][0] == 0 and union[-1][1] == 1 and len(union) > 1
    for start, length in arcs:
        start = Fraction(start) % 1
        segments = [(start, start + length)]
        if start + length > 1:
            segments = [(start, Fraction(1)), (Fraction(0), start + length - 1)]
        for lo, hi in segments:
            if any(a <= lo and hi <= b for a, b in union):
                continue
            if wraps and (hi <= union[0][1] or lo >= union[-1][0]):
                continue
            return False
    return True


@dataclass(frozen=True)
class MarkovMatrix:
    """Transition matrix of a corrected puzzle under doubling.

    entries[i][j] = 1 when piece i maps homeomorphically over piece j, and
    entries[0] = [0, 2, 0, ...] for the critical piece double-covering the
    critical value piece.  Every column sums to 2 because the doubling map is
    two-to-one.
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def column_sums(self) -> list[int]:
        return [sum(row[j] for row in self.entries) for j in range(self.size)]

    def deleted(self) -> list[list[int]]:
        """The matrix with the critical row and column removed."""
        return [list(row[1:]) for row in self.entries[1:]]

    def to_dot(self) -> str:
        lines = ["digraph markov {"]
        for i in range(self.size):
            lines.append(f'  p{i} [label="{i}"];')
        for i, row in enumerate(self.entries):
            for j, mult in enumerate(row):
                lines.extend(f"  p{i} -> p{j};" for _ in range(mult))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def markov_matrix(pieces: list[PuzzlePiece]) -> MarkovMatrix:
    """Transition matrix of a corrected puzzle under the doubling map."""
    rows = []
    for piece in pieces:
        if piece.is_critical:
            row = [0] * len(pieces)
            row[1] = 2
            rows.append(row)
            continue
        doubled = []
        for start, length in piece.arcs:
            if 2 * length >= 1:
                raise PuzzleError("non-critical piece arc of length >= 1/2")
            doubled.append(((2 * start) % 1, 2 * length))
        image = _normalized_union(doubled)
        row = [1 if _union_covers(image, other.arcs) else 0 for other in pieces]
        rows.append(row)
    matrix = MarkovMatrix(tuple(tuple(row) for row in rows))
    sums = matrix.column_sums()
    if any(s != 2 for s in sums):
        raise PuzzleError(f"column sums {sums} should all be 2")
    return matrix


def markov_cycle_for(q: OrbitPortrait, p: OrbitPortrait) -> list[int] | None:
    """Periodic piece itinerary of q's rays through p's corrected puzzle.

    Step k gives the non-critical piece containing all angles of 2^k A_1(q)
    strictly inside its arcs; the answer is None as soon as any angle falls
    on a piece boundary, in the critical piece, or the set straddles pieces,
    meaning q is not forced through this puzzle.
    """
    pieces = corrected_puzzle(p)
    cycle = []
    for k in range(q.orbit_period):
        indices = set()
        for t in q.angle_sets[k]:
            hits = [piece.index for piece in pieces if piece.contains_interior(t)]
            if not hits:
                return None  # on a piece boundary
            indices.add(hits[0])
        if len(indices) != 1 or 0 in indices:
            return None
        cycle.append(indices.pop())
    return cycle


def subshift_orbit_count(portrait: OrbitPortrait, k: int) -> int:
    """Period-k symbol sequences of the subshift avoiding the critical piece.

    The trace of the k-th power of the Markov matrix with the critical row
    and column deleted, in exact integer arithmetic.
    """
    if k < 1:
        raise ValueError("period must be >= 1")
    matrix = markov_matrix(corrected_puzzle(portrait)).deleted()
    size = len(matrix)
    power = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    for _ in range(k):
        power = [
            [sum(power[i][l] * matrix[l][j] for l in range(size)) for j in range(size)]
            for i in range(size)
        ]
    return sum(power[i][i] for i in range(size))
