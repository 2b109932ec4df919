"""Combinatorics of external-ray portraits for quadratic polynomials.

Exact-arithmetic core: angles under doubling, orbit portraits, wakes and
forcing, tuning, symbolic dynamics, and Markov puzzles.  A floating-point
companion traces external rays and solves period-n curve equations to verify
the combinatorial predictions numerically.
"""

from .angles import (
    Angle,
    angles_of_period,
    binary_block,
    double,
    exact_period,
    preperiod_period,
)
from .circle import CircleArc
from .enumeration import (
    ForcingTree,
    OnWakeBoundary,
    enumerate_portraits,
    forces,
    forcing_tree,
    nu2,
    wake_address,
)
from .portrait import (
    ZERO_PORTRAIT,
    OrbitPortrait,
    PortraitError,
    PortraitKind,
    conjugate_angle,
    parse_portrait,
    portrait_from_ray_pair,
    validate,
)
from .puzzle import (
    MarkovMatrix,
    PuzzlePiece,
    corrected_puzzle,
    markov_cycle_for,
    markov_matrix,
    preliminary_puzzle,
    subshift_orbit_count,
)
from .symbolic import (
    BOUNDARY,
    Itinerary,
    itinerary,
    kneading_sequence,
    lift_eval,
    partition_arcs,
    rays_coland,
    sigma,
    sigma_star,
    translation_number,
)
from .tuning import (
    cantor_contains,
    cantor_decode,
    renorm_window_angles,
    tune_angle,
    tune_portrait,
    tuning_words,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
