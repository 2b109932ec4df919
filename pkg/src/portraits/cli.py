"""Command-line interface.

Every subcommand supports --json for machine-readable output; combinatorial
results are always exact fractions.  Exit codes: 0 success, 1 usage error,
2 domain error (machine-readable JSON on stderr).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import fields
from fractions import Fraction

from .angles import Angle, SideRequired, exact_period
from .enumeration import (
    OnWakeBoundary,
    enumerate_portraits,
    forcing_tree,
    nu2,
    wake_address,
)
from .numerics import (
    NumericsError,
    TraceConfig,
    centers_of_period,
    solve_parabolic_root,
    trace_dynamic_ray,
    trace_parameter_ray,
    verify_portrait,
)
from .portrait import OrbitPortrait, PortraitError, conjugate_angle, parse_portrait
from .puzzle import corrected_puzzle, markov_matrix, subshift_orbit_count
from .symbolic import kneading_sequence, translation_number
from .tuning import tune_angle


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_complex(text: str) -> complex:
    text = text.strip()
    if "," in text:
        re_part, im_part = text.split(",", 1)
        return complex(float(re_part), float(im_part))
    return complex(text.replace(" ", ""))


def load_config(path: str | None, overrides: dict) -> TraceConfig:
    """TraceConfig from a key=value file (# comments allowed), flags override.

    Recognized keys are exactly the TraceConfig field names, e.g.::

        escape_radius = 100.0
        depth = 60
        newton_tol = 1e-12
    """
    values: dict = {}
    if path:
        valid = {f.name: f.type for f in fields(TraceConfig)}
        with open(path) as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"bad config line: {line!r}")
                key, raw = (part.strip() for part in line.split("=", 1))
                if key not in valid:
                    raise UsageError(f"unknown config key: {key!r}")
                values[key] = int(raw) if "int" in str(valid[key]) else float(raw)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return TraceConfig(**values)


def _emit(args, payload: dict, human: str):
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _portrait_arg(args) -> OrbitPortrait:
    return parse_portrait(args.portrait)


def cmd_portrait(args) -> int:
    portrait = _portrait_arg(args)
    payload = portrait.to_json()
    lines = [str(portrait)]
    lines.append(
        f"orbit period {portrait.orbit_period}, valence {portrait.valence}, "
        f"ray period {portrait.ray_period}, rotation "
        f"{portrait.rotation.numerator}/{portrait.rotation.denominator}, "
        f"{portrait.kind.value}"
    )
    if payload["characteristic_arc"]:
        lines.append(f"characteristic arc {portrait.characteristic_arc}")
    if args.svg:
        from .render import portrait_figure, save_figure

        save_figure(portrait_figure(portrait), args.svg)
        lines.append(f"wrote {args.svg}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_pair(args) -> int:
    t = Angle(args.angle)
    partner = conjugate_angle(t)
    if partner is None:
        payload = {"partner": None, "arc": ["0/1", "1/1"]}
    else:
        lo, hi = min(t, partner), max(t, partner)
        payload = {"partner": str(partner), "arc": [str(lo), str(hi)]}
    print(json.dumps(payload))
    return 0


def cmd_enumerate(args) -> int:
    periods = [args.period] if args.period else list(range(1, args.max_period + 1))
    if args.count:
        counts = {n: (1 if n == 1 else nu2(n) // 2) for n in periods}
        payload = {"counts": {str(n): counts[n] for n in periods}}
        human = "\n".join(f"{n} {counts[n]}" for n in periods)
        if len(periods) == 1:
            human = str(counts[periods[0]])
        _emit(args, payload, human)
        return 0
    portraits = [P for n in periods for P in enumerate_portraits(n)]
    payload = {"portraits": [P.to_json() for P in portraits]}
    human = "\n".join(
        f"{P.characteristic_arc}  {P}" if P.is_nontrivial else str(P)
        for P in portraits
    )
    _emit(args, payload, human)
    return 0


def cmd_tree(args) -> int:
    tree = forcing_tree(args.max_period)
    if args.dot:
        print(tree.to_dot(), end="")
    elif args.json:
        print(json.dumps(tree.to_json()))
    else:
        for i, node in enumerate(tree.nodes):
            depth = 0
            j = node.parent
            while j is not None:
                depth += 1
                j = tree.nodes[j].parent
            print("  " * depth + f"{node.portrait.characteristic_arc}")
    return 0


def cmd_tune(args) -> int:
    portrait = _portrait_arg(args)
    result = tune_angle(portrait, Fraction(args.angle) % 1, args.side)
    _emit(args, {"angle": str(result)}, str(result))
    return 0


def cmd_rotnum(args) -> int:
    value = translation_number(args.word, Fraction(args.tau))
    if isinstance(value, tuple):
        payload = {"interval": [str(value[0]), str(value[1])]}
        human = f"[{value[0]}, {value[1]}]"
    else:
        payload = {"rotation": str(value)}
        human = str(value)
    _emit(args, payload, human)
    return 0


def cmd_kneading(args) -> int:
    itin = kneading_sequence(Angle(args.tau), args.length)
    _emit(args, {"kneading": str(itin)}, str(itin))
    return 0


def cmd_wake(args) -> int:
    try:
        chain = wake_address(Fraction(args.angle), args.max_period)
    except OnWakeBoundary as exc:
        payload = {"on_boundary": exc.portrait.to_json()}
        _emit(args, payload, f"on boundary of {exc.portrait.characteristic_arc}")
        return 0
    payload = {"chain": [P.to_json() for P in chain]}
    human = "\n".join(str(P.characteristic_arc) for P in chain)
    _emit(args, payload, human)
    return 0


def cmd_puzzle(args) -> int:
    portrait = _portrait_arg(args)
    pieces = corrected_puzzle(portrait)
    matrix = markov_matrix(pieces)
    if args.dot:
        print(matrix.to_dot(), end="")
        return 0
    payload = {
        "pieces": [
            {
                "index": piece.index,
                "arcs": [[str(Fraction(s)), str(Fraction(s + l))] for s, l in piece.arcs],
                "critical": piece.is_critical,
                "critical_value": piece.is_critical_value,
            }
            for piece in pieces
        ],
        "matrix": [list(row) for row in matrix.entries],
    }
    lines = []
    for piece in pieces:
        arcs = " ".join(f"[{Fraction(s)},{Fraction(s) + l}]" for s, l in piece.arcs)
        tag = " critical" if piece.is_critical else (
            " critical-value" if piece.is_critical_value else "")
        lines.append(f"piece {piece.index}:{tag} {arcs}")
    lines.append(str(matrix))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_subshift(args) -> int:
    portrait = _portrait_arg(args)
    count = subshift_orbit_count(portrait, args.k)
    _emit(args, {"count": count}, str(count))
    return 0


def cmd_trace(args) -> int:
    config = load_config(args.config, {"depth": args.depth, "landing_tol": args.tol})
    if args.plane == "dynamic":
        if args.c is None:
            raise UsageError("dynamic traces need --c")
        trace = trace_dynamic_ray(_parse_complex(args.c), Fraction(args.angle),
                                  depth=args.depth, config=config)
    else:
        trace = trace_parameter_ray(Fraction(args.angle), depth=args.depth,
                                    config=config)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["angle", "step", "re", "im", "potential"])
            writer.writerows(trace.csv_rows())
    if args.svg:
        from .render import save_figure, trace_figure

        save_figure(trace_figure([trace]), args.svg)
    z = trace.landing_estimate
    payload = {
        "plane": trace.plane,
        "angle": str(trace.angle),
        "landing": [z.real, z.imag],
        "converged": trace.converged,
        "error": trace.error,
        "points": len(trace.points),
    }
    human = (
        f"{trace.plane} ray {trace.angle}: landing ~ {z:.9g} "
        f"({'converged' if trace.converged else trace.error or 'not converged'})"
    )
    _emit(args, payload, human)
    return 0


def cmd_verify(args) -> int:
    config = load_config(args.config, {"depth": args.depth})
    portrait = _portrait_arg(args)
    report = verify_portrait(portrait, _parse_complex(args.c),
                             tol=args.tol or 1e-5, config=config)
    human = "PASS" if report.passed else "FAIL"
    clusters = " ".join(
        "{" + ",".join(str(Angle(t)) for t in cl) + "}" for cl in report.clusters
    )
    _emit(args, report.to_json(), f"{human}: clusters {clusters}")
    return 0


def cmd_roots(args) -> int:
    if args.period:
        centers = centers_of_period(args.period)
        payload = {"centers": [[z.real, z.imag] for z in centers]}
        human = "\n".join(f"{z.real:+.12f} {z.imag:+.12f}" for z in centers)
        _emit(args, payload, human)
        return 0
    if not args.portrait:
        raise UsageError("roots needs --period or --portrait")
    config = load_config(args.config, {"depth": args.depth})
    portrait = _portrait_arg(args)
    point = solve_parabolic_root(portrait, config=config)
    payload = {
        "c": [point.c.real, point.c.imag],
        "z": [point.z.real, point.z.imag],
        "n": point.n,
        "lambda_n": [point.lambda_n.real, point.lambda_n.imag],
        "residual": point.residual,
    }
    _emit(args, payload, f"root c = {point.c:.12g} (residual {point.residual:.2e})")
    return 0


def cmd_render(args) -> int:
    from .render import portrait_figure, save_figure

    portrait = _portrait_arg(args)
    save_figure(portrait_figure(portrait), args.svg)
    _emit(args, {"wrote": args.svg}, f"wrote {args.svg}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="portraits", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--config", help="key=value config file for numeric knobs")
        return p

    p = add("portrait", cmd_portrait, help="validate a portrait and show statistics")
    p.add_argument("--sets", dest="portrait", required=True,
                   help='portrait literal, JSON, or ray pair "t-,t+"')
    p.add_argument("--svg", help="also render the disk diagram to this file")

    p = add("pair", cmd_pair, help="conjugate angle bounding the same wake")
    p.add_argument("--angle", required=True)

    p = add("enumerate", cmd_enumerate, help="portraits of a given ray period")
    p.add_argument("--period", type=int)
    p.add_argument("--max-period", type=int, default=10)
    p.add_argument("--count", action="store_true",
                   help="portrait count per period (closed form nu2(n)/2)")

    p = add("tree", cmd_tree, help="forcing tree of characteristic arcs")
    p.add_argument("--max-period", type=int, default=4)
    p.add_argument("--dot", action="store_true")

    p = add("tune", cmd_tune, help="tune an angle through a portrait")
    p.add_argument("--portrait", required=True)
    p.add_argument("--angle", required=True)
    p.add_argument("--side", choices=["L", "R"])

    p = add("rotnum", cmd_rotnum, help="translation number of a bit word")
    p.add_argument("--word", required=True)
    p.add_argument("--tau", required=True)

    p = add("kneading", cmd_kneading, help="kneading sequence of an angle")
    p.add_argument("--tau", required=True)
    p.add_argument("--length", type=int)

    p = add("wake", cmd_wake, help="nested wakes containing an angle")
    p.add_argument("--angle", required=True)
    p.add_argument("--max-period", type=int, default=10)

    p = add("puzzle", cmd_puzzle, help="corrected puzzle pieces and Markov matrix")
    p.add_argument("--portrait", required=True)
    p.add_argument("--dot", action="store_true", help="emit the Markov graph as DOT")

    p = add("subshift", cmd_subshift, help="periodic orbit count off the critical piece")
    p.add_argument("--portrait", required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("trace", cmd_trace, help="trace an external ray")
    p.add_argument("--plane", choices=["dynamic", "parameter"], required=True)
    p.add_argument("--angle", required=True)
    p.add_argument("--c", help='parameter for dynamic traces, e.g. "-1,0"')
    p.add_argument("--depth", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--csv", help="write the polyline as CSV")
    p.add_argument("--svg", help="render the polyline")

    p = add("verify", cmd_verify, help="check a portrait's landing pattern at c")
    p.add_argument("--portrait", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--tol", type=float)
    p.add_argument("--depth", type=int)

    p = add("roots", cmd_roots, help="centers of a period, or a wake's parabolic root")
    p.add_argument("--period", type=int)
    p.add_argument("--portrait")
    p.add_argument("--depth", type=int)

    p = add("render", cmd_render, help="render a portrait disk diagram")
    p.add_argument("--portrait", required=True)
    p.add_argument("--svg", required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (PortraitError, NumericsError, SideRequired, ValueError) as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(error), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
