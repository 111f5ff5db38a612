"""Batch command line front end.

Subcommands `distance` and `path` stream JSON-lines query records on
stdin and emit one JSON result line per input line, in order; a
malformed line yields an error object on that line and exit code 2
without disturbing its neighbours.  `validate` sweeps seeded random
pairs (plus the nine validity witness pairs) through the comparison
harness, and `render` draws one query's shortest trail on the net as
SVG.
"""

from __future__ import annotations

import argparse
import sys

from .coords import canonicalize, sample_uniform
from .landscape import VALIDITY_WITNESSES, surface_distance
from .oracle import compare
from .render import render_svg
from .serialize import (
    distance_result_to_obj,
    dumps,
    error_obj,
    load_record,
    parse_point,
    trail_result_to_obj,
)


def _stream(to_obj) -> int:
    had_errors = False
    try:
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            record_id = None
            try:
                record = load_record(line)
                record_id = record.get("id")
                p1 = parse_point(record.get("p1"))
                p2 = parse_point(record.get("p2"))
                result = surface_distance(canonicalize(p1), canonicalize(p2))
                obj = to_obj(result, record_id)
            except (ValueError, KeyError) as exc:
                obj = error_obj(exc, record_id)
                had_errors = True
            sys.stdout.write(dumps(obj) + "\n")
        sys.stdout.flush()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1
    return 2 if had_errors else 0


def _cmd_distance(args) -> int:
    return _stream(distance_result_to_obj)


def _cmd_path(args) -> int:
    return _stream(trail_result_to_obj)


def _cmd_validate(args) -> int:
    if args.count < 1:
        print("--count must be at least 1", file=sys.stderr)
        return 1
    points = sample_uniform(args.seed, 2 * args.count)
    pairs = [(canonicalize(r1), canonicalize(r2)) for r1, r2 in VALIDITY_WITNESSES.values()]
    pairs += list(zip(points[0::2], points[1::2]))
    failures = 0
    for a, b in pairs:
        report = compare(
            a,
            b,
            tolerance=args.tolerance,
            max_faces=args.max_faces,
            subdivisions=args.subdivisions,
        )
        if not report.passed:
            failures += 1
            sys.stdout.write(dumps(report.to_dict()) + "\n")
    total = len(pairs)
    print(f"checked {total} pairs ({len(VALIDITY_WITNESSES)} witness rows + {args.count} random): "
          f"{total - failures} passed, {failures} failed")
    return 0 if failures == 0 else 1


def _cmd_render(args) -> int:
    if args.query is not None:
        line = args.query
    else:
        line = sys.stdin.readline().strip()
    try:
        record = load_record(line)
        p1 = parse_point(record.get("p1"))
        p2 = parse_point(record.get("p2"))
        result = surface_distance(canonicalize(p1), canonicalize(p2))
        svg = render_svg(p1, p2, result, scale=args.scale)
    except (ValueError, KeyError) as exc:
        print(dumps(error_obj(exc)), file=sys.stderr)
        return 2
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(svg)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octadist",
        description="Exact geodesic distances on the unit regular octahedron.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_distance = sub.add_parser("distance", help="surface distances for JSON-lines queries")
    p_distance.set_defaults(func=_cmd_distance)

    p_path = sub.add_parser("path", help="shortest trails (with crossings) for queries")
    p_path.set_defaults(func=_cmd_path)

    p_validate = sub.add_parser("validate", help="sweep random pairs through the oracle harness")
    p_validate.add_argument("--seed", type=int, default=0)
    p_validate.add_argument("--count", type=int, default=10000)
    p_validate.add_argument("--tolerance", type=float, default=1e-9)
    p_validate.add_argument("--max-faces", type=int, default=8)
    p_validate.add_argument(
        "--subdivisions", type=int, default=0,
        help="mesh upper-bound resolution; 0 skips the mesh check (default)",
    )
    p_validate.set_defaults(func=_cmd_validate)

    p_render = sub.add_parser("render", help="draw one query's shortest trail as SVG")
    p_render.add_argument("--out", required=True, help="output SVG path")
    p_render.add_argument("--scale", type=float, default=100.0, help="SVG units per edge")
    p_render.add_argument("--query", help="query record as a JSON literal (default: first stdin line)")
    p_render.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
