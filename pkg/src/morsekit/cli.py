"""Command-line front end: one subcommand per pipeline stage.

Input is a JSON object {"A": [...], "gamma": [...]} given inline or as a
file path; rational gamma entries may be "p/q" strings.  Exit codes: 0 on
success, 1 on malformed input, 2 when `extract` meets a degenerate covector,
3 when `verify` finds a failing property.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .cones import cone_constraints, enumerate_types
from .errors import DegeneracyError, MorsekitError
from .fiber import fiber_polygon, strata_counts, vol_fiber_closed, vol_fiber_trapezoids
from .polytope import build_polytope, project_and_hull, render_svg
from .rationals import rational_to_json
from .singularity import (
    c_coeffs,
    c_value,
    c_value_via_levels_scaled,
    gcd_ladder,
    level_scan,
)
from .support_function import mu_coeffs, mu_value, parse_shift
from .tropical import classify, extract, parse_input_json, roots_and_values
from .verify import run_property_suite


def _load_input(text: str):
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        raw = stripped
    elif os.path.exists(stripped):
        with open(stripped, "r", encoding="utf-8") as fh:
            raw = fh.read()
    else:
        raise MorsekitError(f"input is neither inline JSON nor an existing file: {text!r}")
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MorsekitError(f"invalid JSON input: {exc}") from exc
    return parse_input_json(obj)


def _need_gamma(gamma):
    if gamma is None:
        raise MorsekitError('this command needs a "gamma" entry in the input')
    return gamma


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _jobs(args) -> int | None:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("MORSEKIT_JOBS")
    if not env:
        return None
    try:
        return int(env)
    except ValueError as exc:
        raise MorsekitError(f"MORSEKIT_JOBS must be an integer, got {env!r}") from exc


def cmd_extract(args) -> int:
    support, gamma = _load_input(args.input)
    gamma = _need_gamma(gamma)
    classification = classify(support, gamma)
    try:
        ctype = extract(support, gamma)
    except DegeneracyError as exc:
        payload = {
            "degenerate": str(exc),
            **classification.to_json(),
        }
        _emit(args, payload, f"degenerate: {exc}\nclass: {classification.kind}")
        return 2
    rv = roots_and_values(support, gamma, list(ctype.w))
    payload = {
        **ctype.to_json(),
        "roots": [rational_to_json(r) for r, _ in rv],
        "values": [rational_to_json(v) for _, v in rv],
        **classification.to_json(),
    }
    text = "\n".join(
        [
            f"W: {list(ctype.w)}",
            f"Z: {list(ctype.z)}",
            *(f"M^{j}: {list(m)}" for j, m in enumerate(ctype.m)),
            f"roots: {[rational_to_json(r) for r, _ in rv]}",
            f"values: {[rational_to_json(v) for _, v in rv]}",
            f"class: {classification.kind}",
        ]
    )
    _emit(args, payload, text)
    return 0


def cmd_mu(args) -> int:
    support, gamma = _load_input(args.input)
    gamma = _need_gamma(gamma)
    shift = parse_shift(args.shift, support)
    ctype = extract(support, gamma)
    vertex = mu_coeffs(support, ctype, shift)
    value = mu_value(support, gamma, shift)
    payload = {
        "mu": rational_to_json(value),
        "vertex": list(vertex),
        "shift": list(shift),
        **ctype.to_json(),
    }
    _emit(args, payload, f"mu = {rational_to_json(value)}\nvertex = {list(vertex)}")
    return 0


def cmd_cj(args) -> int:
    support, gamma = _load_input(args.input)
    gamma = _need_gamma(gamma)
    ctype = extract(support, gamma)
    rows = []
    for j in range(ctype.k):
        coeffs = c_coeffs(support, ctype, j)
        value = c_value(support, gamma, ctype, j)
        entry = {
            "j": j,
            "coeffs": list(coeffs),
            "value": rational_to_json(value),
            "ladder": list(gcd_ladder(ctype.w, j, ctype.m[j])),
        }
        if gamma.is_integral():
            seq, ff = level_scan(support, gamma, ctype, j)
            entry["i_sequence"] = list(seq)
            entry["facet_volume"] = ff.volume
            entry["level_route_value"] = rational_to_json(
                Fraction(-ff.volume * sum(i - 1 for i in seq))
            )
        else:
            # rational input: the level route applies to the scaled covector
            entry["level_route_value"] = rational_to_json(
                c_value_via_levels_scaled(support, gamma, ctype, j)
            )
        rows.append(entry)
    text = "\n".join(
        f"C^{row['j']}: value={row['value']} coeffs={row['coeffs']}" for row in rows
    )
    _emit(args, {"corrections": rows}, text)
    return 0


def cmd_fiber(args) -> int:
    support, gamma = _load_input(args.input)
    gamma = _need_gamma(gamma)
    fp = fiber_polygon(support, gamma)
    if args.format == "svg":
        sys.stdout.write(render_svg(fp))
        return 0
    payload = {
        **fp.to_json(),
        "volume_closed": rational_to_json(vol_fiber_closed(support, gamma)),
        "volume_trapezoids": rational_to_json(vol_fiber_trapezoids(support, gamma)),
    }
    text = "\n".join(
        [
            f"bases: {payload['bases']}",
            f"heights: {payload['heights']}",
            f"volume: {payload['volume_closed']}",
        ]
    )
    _emit(args, payload, text)
    return 0


def cmd_enumerate(args) -> int:
    support, _ = _load_input(args.input)
    types = enumerate_types(
        support, max_support_size=args.max_support_size, jobs=_jobs(args)
    )
    payload = {
        "A": list(support.points),
        "count": len(types),
        "types": [
            {
                **ctype.to_json(),
                "witness": witness.to_json(),
                "constraints": len(cone_constraints(support, ctype).forms),
            }
            for ctype, witness in types
        ],
    }
    text = "\n".join(
        f"W={list(t.w)} Z={list(t.z)} M={[list(m) for m in t.m]}" for t, _ in types
    )
    _emit(args, payload, f"{len(types)} types\n{text}")
    return 0


def cmd_polytope(args) -> int:
    support, _ = _load_input(args.input)
    shift = parse_shift(args.shift, support)
    poly = build_polytope(
        support, shift, max_support_size=args.max_support_size, jobs=_jobs(args)
    )
    if args.format == "svg":
        sys.stdout.write(render_svg(project_and_hull(poly, _axes(args))))
        return 0
    payload = poly.to_json()
    text = "\n".join(
        [
            f"vertices ({len(poly.vertices)}): "
            + " ".join(str(list(v)) for v in poly.vertices),
            f"d1={poly.d1} d2={poly.d2}",
            f"cones: {len(poly.cones)}",
        ]
    )
    _emit(args, payload, text)
    return 0


def cmd_strata(args) -> int:
    support, gamma = _load_input(args.input)
    gamma = _need_gamma(gamma)
    shift = parse_shift(args.shift, support)
    counts = strata_counts(support, gamma, shift)
    payload = counts.to_json()
    text = "\n".join(
        [
            f"chi(A1) = {counts.chi_a1}",
            f"|A2| = {counts.n_a2}",
            f"|2A1| = {rational_to_json(counts.n_2a1)} (shift {list(counts.shift)})",
            f"parity_ok = {counts.parity_ok}",
        ]
    )
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    support, _ = _load_input(args.input)
    shift = parse_shift(args.shift, support)
    result = run_property_suite(
        support, args.samples, args.seed, shift=shift, jobs=_jobs(args)
    )
    lines = [f"seed={result.seed} samples={result.samples} resamples={result.resamples}"]
    for report in result.reports:
        status = "pass" if report.ok else "FAIL"
        line = f"{status} {report.name}: {report.passed} ok, {report.failed} bad"
        if report.counterexample is not None:
            line += f" counterexample={report.counterexample}"
        lines.append(line)
    _emit(args, result.to_json(), "\n".join(lines))
    return 0 if result.ok else 3


def cmd_plot(args) -> int:
    support, gamma = _load_input(args.input)
    if gamma is not None:
        sys.stdout.write(render_svg(fiber_polygon(support, gamma)))
        return 0
    shift = parse_shift(args.shift, support)
    poly = build_polytope(
        support, shift, max_support_size=args.max_support_size, jobs=_jobs(args)
    )
    sys.stdout.write(render_svg(project_and_hull(poly, _axes(args))))
    return 0


def _axes(args) -> tuple[int, int] | None:
    if args.axes is None:
        return None
    try:
        i, j = (int(part) for part in args.axes.split(","))
    except ValueError as exc:
        raise MorsekitError(f"--axes must be 'i,j', got {args.axes!r}") from exc
    return (i, j)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morsekit",
        description="Newton polytope of the Morse discriminant, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="inline JSON or path to a JSON file")
        p.add_argument("--shift", default="0,0", help="'c1,c2' or 'unit-interval'")
        p.add_argument("--format", choices=("json", "text", "svg"), default="text")
        p.add_argument("--axes", default=None, help="projection axes 'i,j'")
        p.add_argument("--samples", type=int, default=200)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=None,
                       help="parallel workers (default: MORSEKIT_JOBS or 1)")
        p.add_argument("--max-support-size", type=int, default=7)
        p.set_defaults(func=func)
        return p

    add("extract", cmd_extract, "combinatorial data of a covector")
    add("mu", cmd_mu, "support-function value and cone vertex")
    add("cj", cmd_cj, "correction sums C^j with dual-route diagnostics")
    add("fiber", cmd_fiber, "fiber polygon as a trapezoid stack")
    add("enumerate", cmd_enumerate, "all realizable combinatorial types")
    add("polytope", cmd_polytope, "vertices and cone table of the polytope")
    add("strata", cmd_strata, "multisingularity stratum counts")
    add("verify", cmd_verify, "seeded property suite")
    add("plot", cmd_plot, "SVG of the projected polytope or fiber polygon")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (MorsekitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
