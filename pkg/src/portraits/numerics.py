"""Floating-point verifier for the exact combinatorics.

External rays are traced by Newton pullback in both the dynamic and the
parameter plane, periodic orbits and their multipliers are solved on the
period-n curve, and hyperbolic centers come from the critical-orbit
polynomials.  Everything here is approximate by design: the combinatorial
modules predict, this one checks at desk scale.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .angles import Angle
from .enumeration import nu2
from .portrait import OrbitPortrait, PortraitKind

TWO_PI = 2 * math.pi


class NumericsError(ArithmeticError):
    pass


class OrbitDiverged(NumericsError):
    pass


class TooCloseToM(NumericsError):
    """Escape too slow for reliable external-angle digits."""


class NewtonDiverged(NumericsError):
    pass


@dataclass
class TraceConfig:
    """Knobs for ray tracing and landing detection.

    Potentials halve every ``substeps`` trace points, starting from
    log(escape_radius); a trace is converged when the last ``landing_window``
    points sit within ``landing_tol`` of each other.  Parameter rays landing
    at parabolic points converge polynomially, hence the larger default depth.
    """

    escape_radius: float = 100.0
    depth: int = 60
    parameter_depth: int = 130
    substeps: int = 5
    newton_tol: float = 1e-12
    newton_maxiter: int = 40
    landing_window: int = 5
    landing_tol: float = 1e-6


DEFAULT_CONFIG = TraceConfig()


@dataclass
class RayTrace:
    """A traced external ray, from the escape circle towards its landing point."""

    plane: str  # "dynamic" or "parameter"
    angle: Fraction
    c: complex | None
    points: list[complex] = field(default_factory=list)
    potentials: list[float] = field(default_factory=list)
    landing_estimate: complex = complex("nan")
    converged: bool = False
    error: str | None = None

    def csv_rows(self):
        for step, (z, g) in enumerate(zip(self.points, self.potentials)):
            yield (str(self.angle), step, z.real, z.imag, g)


@dataclass
class CurvePoint:
    """A numerically solved point (c, z) on the period-n curve."""

    c: complex
    z: complex
    n: int
    lambda_n: complex
    residual: float = 0.0


# ---------------------------------------------------------------------------
# Orbit evaluation with derivatives


def _orbit(c: complex, z: complex, n: int) -> list[complex]:
    zs = [z]
    for _ in range(n):
        z = z * z + c
        zs.append(z)
    return zs


def _orbit_jet(c: complex, z: complex, n: int):
    """Orbit plus first and second z/c-derivatives of z_k.

    Returns (zs, u, v, w, x) with u = dz_n/dz, v = dz_n/dc, w = du/dz,
    x = du/dc; u is exactly the multiplier of the n-th iterate at z.
    """
    zs = [z]
    u, v, w, x = 1 + 0j, 0j, 0j, 0j
    for _ in range(n):
        zk = zs[-1]
        w = 2 * (u * u + zk * w)
        x = 2 * (v * u + zk * x)
        u = 2 * zk * u
        v = 2 * zk * v + 1
        zs.append(zk * zk + c)
    return zs, u, v, w, x


def multiplier(c: complex, z: complex, n: int) -> complex:
    """Multiplier 2^n z_1 ... z_n along the computed orbit of z."""
    zs = _orbit(c, z, n)
    if any(abs(zk) > 1e9 for zk in zs):
        raise OrbitDiverged(f"orbit of {z} escapes for c={c}")
    out = 2.0**n
    for zk in zs[1:]:
        out *= zk
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


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


def q_n_eval(n: int, c: complex, z: complex) -> complex:
    """Value of the period-n polynomial at (c, z).

    Defined by f_c^k(z) - z = product of Q_n over n | k; evaluated as a
    quotient of the two sign-classes of divisor products so cancellation
    stays explicit.
    """
    zs = _orbit(c, z, n)
    num, den = 1 + 0j, 1 + 0j
    for d in _divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            num *= zs[d] - z
        elif mu == -1:
            den *= zs[d] - z
    return num / den


def q_n_degree(n: int) -> int:
    """Degree of Q_n in z: the angle count nu2(n)."""
    return nu2(n)


def _q_n_jet(n: int, c: complex, z: complex):
    """Q_n with its (c, z) gradient, safe at simple roots of period exactly n.

    The factor g_n = f^n(z) - z (exponent +1) is kept out of the logarithmic
    derivative so the gradient survives g_n = 0; proper-divisor factors are
    assumed non-zero there.
    """
    zs = [z]
    us, vs = [1 + 0j], [0j]
    for _ in range(n):
        zk, uk, vk = zs[-1], us[-1], vs[-1]
        zs.append(zk * zk + c)
        us.append(2 * zk * uk)
        vs.append(2 * zk * vk + 1)
    g = {d: zs[d] - z for d in _divisors(n)}
    dgz = {d: us[d] - 1 for d in _divisors(n)}
    dgc = {d: vs[d] for d in _divisors(n)}
    rest = 1 + 0j
    log_z, log_c = 0j, 0j
    for d in _divisors(n):
        if d == n:
            continue
        mu = _mobius(n // d)
        if mu == 0:
            continue
        rest *= g[d] ** mu
        log_z += mu * dgz[d] / g[d]
        log_c += mu * dgc[d] / g[d]
    value = g[n] * rest
    dz = dgz[n] * rest + g[n] * rest * log_z
    dc = dgc[n] * rest + g[n] * rest * log_c
    return value, dc, dz


# ---------------------------------------------------------------------------
# Ray tracing


def _angle_times_pow2(t: Fraction, m: int) -> float:
    """2^m t mod 1 as a float, computed exactly on the numerator."""
    num = (t.numerator * pow(2, m, t.denominator)) % t.denominator
    return num / t.denominator


def _richardson_tail(values: list[complex]) -> complex:
    """Limit of a sequence behaving like r + a/k along halving levels.

    One elimination pass; used for parabolic landings, where the trace point
    approaches the root like 1/(halving count) up to slowly varying
    corrections that higher-order elimination would amplify.
    """
    if len(values) < 2:
        return values[-1]
    k = len(values)
    va, vb = values[-2], values[-1]
    return k * vb - (k - 1) * va


def _check_landing(trace: RayTrace, cfg: TraceConfig):
    trace.landing_estimate = trace.points[-1]
    tail = trace.points[-cfg.landing_window :]
    if len(tail) == cfg.landing_window:
        spread = max(abs(a - b) for a in tail for b in tail)
        trace.converged = spread < cfg.landing_tol and trace.error is None
    levels = trace.points[:: cfg.substeps]
    if len(levels) < 3:
        return
    if trace.converged:
        # Geometric landing: one Aitken step squares the convergence rate.
        c0, c1, c2 = levels[-3:]
        den = (c2 - c1) - (c1 - c0)
        if abs(den) >= 0.1 * abs(c2 - c1) and abs(den) > 0:
            accel = c2 - (c2 - c1) ** 2 / den
            if abs(accel - c2) <= 10 * abs(c2 - c1) + cfg.landing_tol:
                trace.landing_estimate = accel
    else:
        # Polynomially slow (parabolic) landing: extrapolate the tail taken
        # at whole halving levels.
        trace.landing_estimate = _richardson_tail(levels)


def trace_dynamic_ray(c: complex, t, depth: int | None = None,
                      config: TraceConfig | None = None) -> RayTrace:
    """Trace the external ray of angle t for the filled Julia set of z^2 + c.

    The point at potential g on the ray is reached by seeding at potential
    2^m g (between half and full escape level) on the ray of angle 2^m t and
    pulling back through m square-root branches, each chosen by continuity
    with the previous pullback chain.  Inverse iteration contracts, so this
    is stable at any depth; a short Newton refinement on f^m(z) = seed is
    applied at depths where the chain derivative still fits in doubles.
    """
    cfg = config or DEFAULT_CONFIG
    depth = cfg.depth if depth is None else depth
    t = Fraction(t) % 1
    trace = RayTrace("dynamic", t, c)
    log_r = math.log(cfg.escape_radius)
    s = cfg.substeps
    chain: list[complex] = []  # chain[k]: point at potential 2^k g on ray 2^k t
    for j in range(depth * s + 1):
        m = j // s
        modulus = math.exp(log_r * 2.0 ** (m - j / s))
        w = modulus * cmath.exp(2j * math.pi * _angle_times_pow2(t, m))
        seed = w - c / (2 * w)
        new_chain = [seed]
        for k in range(m - 1, -1, -1):
            root = cmath.sqrt(new_chain[-1] - c)
            if abs(root) < 1e-9:
                trace.error = "NEAR_PRECRITICAL"
                break
            ref = chain[k] if k < len(chain) else None
            if ref is None:
                ref = abs(root) * cmath.exp(2j * math.pi * _angle_times_pow2(t, k))
            d_plus, d_minus = abs(root - ref), abs(root + ref)
            if min(d_plus, d_minus) > 0.8 * max(d_plus, d_minus) and abs(root) < 1e-3:
                trace.error = "NEAR_PRECRITICAL"
                break
            new_chain.append(root if d_plus <= d_minus else -root)
        if trace.error:
            break
        new_chain.reverse()
        z = new_chain[0]
        if 0 < m <= 40:
            # Newton refinement on f^m(z) = seed; beyond depth ~40 the chain
            # derivative amplifies float noise past the target itself.
            for _ in range(3):
                zk, deriv = z, 1 + 0j
                for _ in range(m):
                    deriv *= 2 * zk
                    zk = zk * zk + c
                if deriv == 0 or not cmath.isfinite(deriv):
                    break
                step = (zk - seed) / deriv
                if not cmath.isfinite(step) or abs(step) > 1e-2:
                    break
                z -= step
                if abs(step) < cfg.newton_tol * (1 + abs(z)):
                    break
            new_chain[0] = z
        chain = new_chain
        trace.points.append(chain[0])
        trace.potentials.append(log_r * 2.0 ** (-j / s))
    if trace.points:
        _check_landing(trace, cfg)
    return trace


def trace_parameter_ray(t, depth: int | None = None,
                        config: TraceConfig | None = None) -> RayTrace:
    """Trace the parameter-plane external ray of angle t towards the M boundary.

    Same pullback scheme with the critical value orbit: the parameter point
    at potential g solves f_c^m(c) = W, using d f_c^m(c)/dc along the orbit.
    """
    cfg = config or DEFAULT_CONFIG
    depth = cfg.parameter_depth if depth is None else depth
    t = Fraction(t) % 1
    trace = RayTrace("parameter", t, None)
    log_r = math.log(cfg.escape_radius)
    s = cfg.substeps
    c = cfg.escape_radius * cmath.exp(2j * math.pi * float(t))
    for j in range(depth * s + 1):
        m = j // s
        modulus = math.exp(log_r * 2.0 ** (m - j / s))
        w = modulus * cmath.exp(2j * math.pi * _angle_times_pow2(t, m))
        for _ in range(cfg.newton_maxiter):
            zk = c
            deriv = 1 + 0j
            for _ in range(m):
                deriv = 2 * zk * deriv + 1
                zk = zk * zk + c
            value = zk - (w - c / (2 * w))
            step = value / (deriv + 1 / (2 * w))
            if not cmath.isfinite(step) or abs(step) > 1e6:
                trace.error = "NOT_CONVERGED"
                break
            c -= step
            if abs(step) < cfg.newton_tol * (1 + abs(c)):
                break
        else:
            trace.error = "NOT_CONVERGED"
        if trace.error:
            break
        trace.points.append(c)
        trace.potentials.append(log_r * 2.0 ** (-j / s))
    if trace.points:
        _check_landing(trace, cfg)
    return trace


def external_angle_of(c: complex, bits: int = 24, escape_radius: float = 1e9,
                      max_iter: int = 2048) -> Fraction:
    """External angle of an escaping parameter, as a dyadic approximation.

    Iterates the critical value until far escape, reads the angle there, and
    halves back choosing the preimage branch nearest each orbit point's
    argument.  Ambiguous branch choices (points too deep for the straight-ray
    approximation) raise TooCloseToM rather than guessing.
    """
    zs = [c]
    while abs(zs[-1]) <= escape_radius:
        if len(zs) > max_iter:
            raise TooCloseToM(f"orbit of {c} escapes too slowly")
        zs.append(zs[-1] * zs[-1] + c)
    theta = (cmath.phase(zs[-1]) / TWO_PI) % 1.0
    for zk in reversed(zs[:-1]):
        ref = (cmath.phase(zk) / TWO_PI) % 1.0
        half = theta / 2.0
        candidates = (half, half + 0.5)
        dists = [min((cand - ref) % 1.0, (ref - cand) % 1.0) for cand in candidates]
        margin = abs(dists[0] - dists[1])
        if margin < 0.15 or (abs(zk) < 2.0 and margin < 0.35):
            raise TooCloseToM(f"ambiguous ray branch at |z| = {abs(zk):.3f}")
        theta = candidates[0] if dists[0] < dists[1] else candidates[1]
    return Fraction(round(theta * 2**bits), 2**bits) % 1


# ---------------------------------------------------------------------------
# Portrait verification


@dataclass
class VerificationReport:
    """Outcome of checking a portrait's co-landing pattern at a parameter."""

    portrait: OrbitPortrait
    c: complex
    tol: float
    passed: bool
    landings: dict[Fraction, complex]
    clusters: list[list[Fraction]]
    cluster_diameters: list[float]
    map_errors: list[float]
    ray_errors: dict[Fraction, str]

    def to_json(self) -> dict:
        return {
            "portrait": self.portrait.to_json(),
            "c": [self.c.real, self.c.imag],
            "tol": self.tol,
            "passed": self.passed,
            "clusters": [[str(Angle(t)) for t in cl] for cl in self.clusters],
            "cluster_diameters": self.cluster_diameters,
            "map_errors": self.map_errors,
            "ray_errors": {str(Angle(t)): e for t, e in self.ray_errors.items()},
        }


def verify_portrait(portrait: OrbitPortrait, c: complex, tol: float = 1e-5,
                    config: TraceConfig | None = None) -> VerificationReport:
    """Trace all portrait rays at c and check they land as the portrait says.

    Landing points are clustered by single linkage at the tolerance; the
    report passes when the clusters reproduce the angle sets and the map
    sends each cluster's point onto the next cluster's within tolerance.
    """
    angles = [Fraction(t) for t in portrait.all_angles()]
    landings: dict[Fraction, complex] = {}
    ray_errors: dict[Fraction, str] = {}
    for t in angles:
        trace = trace_dynamic_ray(c, t, config=config)
        if trace.error or not trace.converged:
            ray_errors[t] = trace.error or "NOT_CONVERGED"
        if trace.points:
            landings[t] = trace.landing_estimate

    # Single-linkage clustering at tol.
    parent = {t: t for t in landings}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    keys = list(landings)
    for i, a in enumerate(keys):
        for b in keys[i + 1 :]:
            if abs(landings[a] - landings[b]) <= tol:
                parent[find(a)] = find(b)
    groups: dict[Fraction, list[Fraction]] = {}
    for t in keys:
        groups.setdefault(find(t), []).append(t)
    clusters = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])
    diameters = [
        max((abs(landings[a] - landings[b]) for a in g for b in g), default=0.0)
        for g in clusters
    ]

    expected = sorted(
        (sorted(Fraction(t) for t in s) for s in portrait.angle_sets),
        key=lambda g: g[0],
    )
    grouping_ok = clusters == expected and not ray_errors

    map_errors = []
    if grouping_ok:
        reps = {}
        for s in portrait.angle_sets:
            pts = [landings[Fraction(t)] for t in s]
            reps[s] = sum(pts) / len(pts)
        p = portrait.orbit_period
        for j, s in enumerate(portrait.angle_sets):
            target = reps[portrait.angle_sets[(j + 1) % p]]
            z = reps[s]
            map_errors.append(abs(z * z + c - target))
    passed = grouping_ok and all(e <= tol for e in map_errors)
    return VerificationReport(
        portrait, c, tol, passed, landings, clusters, diameters, map_errors,
        ray_errors,
    )


# ---------------------------------------------------------------------------
# Centers and parabolic roots


def centers_of_period(n: int, tol: float = 1e-12, max_iter: int = 1200) -> list[complex]:
    """All superattracting parameters of exact period n (n <= 10 supported).

    Aberth-Ehrlich simultaneous iteration on the deflated critical-orbit
    polynomial.  Its Newton ratio never needs polynomial coefficients: with
    P_d(c) = f_c^d(0), the log-derivative of the deflated polynomial is the
    Moebius-weighted sum of P_d'/P_d over divisors, all evaluated stably by
    orbit recursion.  The root count is checked against nu2(n)/2.
    """
    if n < 1:
        raise ValueError("period must be >= 1")
    degree = nu2(n) // 2 if n > 1 else 1
    weights = {d: _mobius(n // d) for d in _divisors(n)}

    def newton_ratios(x: np.ndarray) -> np.ndarray:
        """(deflated)'/(deflated) at each point, by orbit recursion."""
        z = np.zeros_like(x)
        dz = np.zeros_like(x)
        out = np.zeros_like(x)
        escaped = np.zeros(len(x), dtype=bool)
        for step_count in range(1, n + 1):
            dz = 2 * z * dz + 1
            z = z * z + x
            far = np.abs(z) > 1e40
            if far.any():
                escaped |= far
                z[far] = 1e40  # freeze magnitude; ratio is overridden below
                dz[far] = 1.0
            mu = weights.get(step_count, 0) if n % step_count == 0 else 0
            if mu:
                out = out + mu * dz / z
        # Outside |c| ~ 2 the deflated polynomial looks like c^degree.
        out[escaped] = degree / x[escaped]
        return out

    def harvest(points, found: dict):
        for c in map(complex, points):
            zs = _orbit(c, 0j, n)
            if abs(zs[n]) > 1e-8:
                continue
            if any(abs(zs[k]) < 1e-8 for k in range(1, n)):
                continue
            key = (round(c.real, 9), round(c.imag, 9))
            if not any(abs(c - other) < 1e-9 for other in found.values()):
                found[key] = c

    found: dict = {}
    k = np.arange(degree)
    x = -0.5 + 1.6 * np.exp(2j * np.pi * (k + 0.37) / degree)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        for _ in range(max_iter):
            diff = x[:, None] - x[None, :]
            np.fill_diagonal(diff, np.inf)
            repulsion = (1.0 / diff).sum(axis=1)
            step = 1.0 / (newton_ratios(x) - repulsion)
            step[~np.isfinite(step)] = 0.0
            x = x - step
            # Every center lies in |c| <= 2; strays far outside converge
            # slowly, so project them back to the boundary of that region.
            outside = np.abs(x) > 2.3
            if outside.any():
                x[outside] *= 2.3 / np.abs(x[outside])
            if np.abs(step).max() < tol:
                break
        harvest(x, found)

        # A few approximations can stall outside the root region while their
        # roots go unclaimed; hunt the stragglers with Newton on the ratio
        # deflated by every root already in hand.
        attempts = 0
        while len(found) < degree and attempts < 8:
            attempts += 1
            known = np.array(list(found.values()))
            m = 64 * attempts
            seeds = -0.5 + np.exp(2j * np.pi * (np.arange(m) + 0.21) / m) * (
                1.9 - 0.15 * attempts
            )
            for _ in range(200):
                claimed = (1.0 / (seeds[:, None] - known[None, :])).sum(axis=1)
                step = 1.0 / (newton_ratios(seeds) - claimed)
                step[~np.isfinite(step)] = 0.0
                seeds = seeds - step
                if np.abs(step).max() < tol:
                    break
            harvest(seeds, found)

    if len(found) != degree:
        raise NumericsError(
            f"found {len(found)} centers of period {n}, expected {degree}"
        )
    return sorted(found.values(), key=lambda v: (v.real, v.imag))


def solve_parabolic_root(portrait: OrbitPortrait, guess: complex | None = None,
                         config: TraceConfig | None = None) -> CurvePoint:
    """Newton solve of (Q_n = 0, lambda_n = 1) at the root of a portrait's wake.

    Seeded from the landing estimate of the t- parameter ray and the landing
    point of the t- dynamic ray at a parameter just inside the wake.  The
    root is a multiple zero in the satellite case (multiplicity r), so plain
    Newton converges linearly there; the iteration budget accounts for it.
    """
    if not portrait.is_nontrivial or portrait.kind is PortraitKind.ZERO:
        raise ValueError("parabolic roots are solved for non-trivial portraits")
    cfg = config or DEFAULT_CONFIG
    n = portrait.ray_period
    arc = portrait.characteristic_arc

    def seed(endpoint: Fraction) -> tuple[complex, complex]:
        c0 = guess
        if c0 is None:
            c0 = trace_parameter_ray(endpoint, config=cfg).landing_estimate
        inside = trace_parameter_ray(Fraction(arc.midpoint), config=cfg)
        z0 = trace_dynamic_ray(
            inside.landing_estimate, endpoint, config=cfg
        ).landing_estimate
        return c0, z0

    last_error = None
    for endpoint in (Fraction(arc.start), Fraction(arc.end)):
        try:
            c, z = seed(endpoint)
            for _ in range(400):
                q, qc, qz = _q_n_jet(n, c, z)
                zs, u, v, w, x = _orbit_jet(c, z, n)
                f1, f2 = q, u - 1
                det = qc * w - qz * x
                if det == 0:
                    raise NewtonDiverged("singular Jacobian")
                dc = (f1 * w - f2 * qz) / det
                dz = (qc * f2 - x * f1) / det
                if not (cmath.isfinite(dc) and cmath.isfinite(dz)):
                    raise NewtonDiverged("non-finite step")
                if abs(dc) > 0.5 or abs(dz) > 0.5:
                    scale = 0.5 / max(abs(dc), abs(dz))
                    dc, dz = dc * scale, dz * scale
                c, z = c - dc, z - dz
                if abs(dc) + abs(dz) < 1e-15:
                    break
            q, _, _ = _q_n_jet(n, c, z)
            _, u, *_ = _orbit_jet(c, z, n)
            residual = max(abs(q), abs(u - 1))
            if residual < 1e-10:
                return CurvePoint(c, z, n, u, residual)
            last_error = NewtonDiverged(f"residual {residual:.2e} too large")
        except NumericsError as exc:
            last_error = exc
    raise last_error


def multiplier_relation_check(portrait: OrbitPortrait, h: float = 1e-3,
                              root: CurvePoint | None = None) -> complex:
    """Finite-difference slope of lambda_n against lambda_p^r near a satellite root.

    Steps the period-n curve by h in the dynamic coordinate (solving the
    parameter back from Q_n = 0), recomputes both orbit multipliers there,
    and returns the increment ratio, which tends to -r at the root.
    """
    if portrait.kind is not PortraitKind.SATELLITE:
        raise ValueError("the multiplier relation concerns satellite portraits")
    p = portrait.orbit_period
    r = portrait.rotation.denominator
    n = portrait.ray_period
    base = root or solve_parabolic_root(portrait)

    z1 = base.z + h
    c1 = base.c
    for _ in range(80):
        q, qc, _ = _q_n_jet(n, c1, z1)
        if abs(q) < 1e-14:
            break
        c1 -= q / qc
    _, lam_n, *_ = _orbit_jet(c1, z1, n)

    wp = base.z
    for _ in range(80):
        zs, u, *_ = _orbit_jet(c1, wp, p)
        value = zs[p] - wp
        if abs(value) < 1e-14:
            break
        wp -= value / (u - 1)
    _, lam_p, *_ = _orbit_jet(c1, wp, p)

    denom = lam_p**r - 1
    if abs(denom) < 1e-13:
        raise NumericsError("step too small: lambda_p^r - 1 below noise floor")
    return (lam_n - 1) / denom


def periodic_points(c: complex, n: int) -> list[complex]:
    """All fixed points of f_c^n, polished; exact period filtering is the caller's."""
    # Build f^n(z) as a descending-coefficient array by repeated squaring + c.
    poly = np.array([1.0 + 0j, 0j])  # the polynomial z
    for _ in range(n):
        poly = np.convolve(poly, poly)
        poly[-1] += c
    poly_minus_z = poly.copy()
    poly_minus_z[-2] -= 1
    roots = np.roots(poly_minus_z)
    polished = []
    for z0 in roots:
        z = complex(z0)
        for _ in range(50):
            zs, u, *_ = _orbit_jet(c, z, n)
            value = zs[n] - z
            if abs(value) < 1e-12 * max(1.0, abs(z)):
                break
            denom = u - 1
            if denom == 0:
                break
            z -= value / denom
        polished.append(z)
    return polished


def periodic_point_by_signs(c: complex, signs, sweeps: int = 80) -> complex:
    """The periodic point whose orbit follows the given +/- itinerary.

    For |c| beyond the escape region the two square-root branches of the
    inverse map contract onto disks around the two square roots of -c, and
    every periodic sign sequence selects exactly one periodic orbit.  Solved
    by backward iteration, which converges geometrically.
    """
    z = signs[0] * cmath.sqrt(-c)
    for _ in range(sweeps):
        prev = z
        for s in reversed(signs):
            z = s * cmath.sqrt(z - c)
        if abs(z - prev) < 1e-14 * max(1.0, abs(z)):
            break
    return z


def exact_period_points(c: complex, n: int, tol: float = 1e-6) -> list[complex]:
    """Distinct periodic points of exact period n for z^2 + c."""
    out: list[complex] = []
    for z in periodic_points(c, n):
        zs = _orbit(c, z, n)
        minimal = next(
            (k for k in range(1, n + 1) if abs(zs[k] - z) < tol * max(1, abs(z))),
            None,
        )
        if minimal != n:
            continue
        if any(abs(z - other) < tol * max(1, abs(z)) for other in out):
            continue
        out.append(z)
    return out
