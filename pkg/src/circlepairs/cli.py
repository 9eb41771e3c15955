"""Command-line interface.

Subcommands: enumerate, count, oracle, invariants, symmetry, render.
Exit codes: 0 success, 1 usage error, 2 malformed input, 3 internal
invariant violation.  The default output directory comes from the
CIRCLEPAIRS_OUT environment variable (falling back to ./circlepairs-out).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .arrangement import (
    Arrangement,
    MalformedCode,
    NotSpherical,
    NotTransversal,
    decode,
    iter_gp1_lines,
)
from .canonical import symmetry
from .catalog import parse_catalog, write_catalog
from .generate import enumerate_up_to
from .oracle import LONG_RUN_POINTS, brute_force, count_table
from .regions import defining_vectors, region_graph
from .render import RenderStyle, drawn_face_count, layout, to_svg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we want exit 1
        raise UsageError(message)


def _default_out() -> Path:
    return Path(os.environ.get("CIRCLEPAIRS_OUT", "circlepairs-out"))


def _check_points(value: int, what: str = "points") -> int:
    if value < 2 or value % 2 != 0:
        raise UsageError(f"{what} must be an even integer >= 2, got {value}")
    if value > 10:
        raise UsageError(f"{what} larger than 10 is not supported")
    return value


def _read_arrangements(path: str) -> list[tuple[str, Arrangement, bool]]:
    """(label, arrangement, symmetric-flag-known) triples from a GP1 or catalog file.

    '-' reads GP1 lines from stdin.  Catalog files are detected by their
    key columns; plain documents must contain GP1 lines.
    """
    if path == "-":
        text = sys.stdin.read()
    else:
        p = Path(path)
        if not p.exists():
            raise InputError(f"no such file: {path}")
        text = p.read_text(encoding="utf-8")

    stripped = [l.strip() for l in text.splitlines()]
    body = [l for l in stripped if l and not l.startswith("#")]
    is_catalog = bool(body) and not body[0].startswith("GP1")

    out = []
    try:
        if is_catalog:
            for i, entry in enumerate(parse_catalog(text), start=1):
                out.append((f"{i}", decode(entry.code), True))
        else:
            for lineno, code in iter_gp1_lines(text):
                out.append((f"line {lineno}", decode(code), False))
    except (MalformedCode, NotSpherical, NotTransversal, ValueError) as exc:
        raise InputError(str(exc)) from None
    return out


# ============================================================
# Subcommands
# ============================================================


def cmd_enumerate(args) -> int:
    max_points = _check_points(args.max_points, "--max-points")
    out_dir = Path(args.out) if args.out else _default_out()
    levels = enumerate_up_to(max_points, jobs=args.jobs)

    existing = [
        out_dir / f"catalog-{lv.n_points:02d}.txt" for lv in levels if (out_dir / f"catalog-{lv.n_points:02d}.txt").exists()
    ]
    if existing and not args.force:
        raise UsageError(f"output files exist (use --force): {', '.join(str(p) for p in existing)}")
    out_dir.mkdir(parents=True, exist_ok=True)

    for level in levels:
        path = write_catalog(level, out_dir)
        print(f"points={level.n_points} classes={len(level.classes)} file={path}")
    print(" ".join(str(len(level.classes)) for level in levels))
    return EXIT_OK


def cmd_count(args) -> int:
    max_points = _check_points(args.max_points, "--max-points")
    rows = count_table(max_points)
    print("points configs symmetric asymmetric flows")
    for r in rows:
        print(f"{r.n_points} {r.n_configurations} {r.n_symmetric} {r.n_asymmetric} {r.n_flows}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    points = _check_points(args.points, "--points")
    if points >= LONG_RUN_POINTS and not args.allow_long:
        raise UsageError(f"--points {points} needs --allow-long (about 3.7e8 codes)")
    result = brute_force(points, limit_mode=args.mode, jobs=args.jobs, allow_long=args.allow_long)
    print("points classes accepted elapsed")
    print(f"{result.n_points} {len(result.class_keys)} {result.raw_accepted} {result.elapsed:.2f}s")
    if args.check:
        levels = enumerate_up_to(points)
        gen_keys = levels[-1].config_keys()
        match = gen_keys == result.class_keys
        print(f"generator-match={'yes' if match else 'NO'}")
        if not match:
            return EXIT_INTERNAL
    return EXIT_OK


def cmd_invariants(args) -> int:
    rows = _read_arrangements(args.input)
    for label, arr, _ in rows:
        graph = region_graph(arr)
        vectors = defining_vectors(graph)
        print(f"arrangement {label}: points={arr.n_points} regions={graph.n_regions} arcs={arr.n_arcs}")
        if args.machine:
            print(f"points={arr.n_points}")
            print(f"regions={graph.n_regions}")
            print(f"arcs={arr.n_arcs}")
            print(f"black_degrees={','.join(str(d) for d in vectors.black)}")
            print(f"white_degrees={','.join(str(d) for d in vectors.white)}")
            print(f"simple={'true' if graph.simple else 'false'}")
            if graph.matrix is not None:
                print("matrix=" + ";".join(",".join(f"{x:+d}" for x in row) for row in graph.matrix))
        else:
            print(f"vectors {vectors}")
            if graph.matrix is None:
                print("matrix withheld: regions share multiple arcs")
            else:
                print("matrix:")
                for row in graph.matrix:
                    print("  " + " ".join(f"{x:+2d}" for x in row))
        print()
    return EXIT_OK


def cmd_symmetry(args) -> int:
    rows = _read_arrangements(args.input)
    n_asym = 0
    for label, arr, _ in rows:
        rep = symmetry(arr)
        flag = "S" if rep.has_swap_automorphism else "A"
        n_asym += flag == "A"
        print(f"{label} {flag} automorphisms={rep.automorphism_count}")
    print(f"total={len(rows)} symmetric={len(rows) - n_asym} asymmetric={n_asym}")
    return EXIT_OK


def cmd_render(args) -> int:
    rows = _read_arrangements(args.input)
    out_dir = Path(args.out) if args.out else _default_out()
    out_dir.mkdir(parents=True, exist_ok=True)
    style = RenderStyle(
        stroke_curve1=args.stroke1,
        stroke_curve2=args.stroke2,
        stroke_width=args.stroke_width,
        size=args.size,
    )

    tasks = [(i, r, style) for i, r in enumerate(rows, start=1)]
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rendered = list(pool.map(_render_task, tasks))
    else:
        rendered = [_render_task(t) for t in tasks]

    for name, svg in rendered:
        (out_dir / name).write_text(svg, encoding="utf-8")
        print(f"wrote {out_dir / name}")
    return EXIT_OK


def _render_task(packed):
    index, (label, arr, _), style = packed
    flag = "S" if symmetry(arr).has_swap_automorphism else "A"
    lay = layout(arr)
    assert drawn_face_count(arr, lay) == arr.n_points + 2
    name = f"{arr.n_points}-{index}-{flag}.svg"
    return name, to_svg(arr, lay, style)


# ============================================================
# Parser and entry point
# ============================================================


def build_parser() -> _Parser:
    parser = _Parser(prog="circlepairs", description=__doc__)
    parser.add_argument("--version", action="version", version=f"circlepairs {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate classes level by level and write catalogs")
    p.add_argument("--max-points", type=int, required=True)
    p.add_argument("--out", help="output directory (default: $CIRCLEPAIRS_OUT)")
    p.add_argument("--force", action="store_true", help="overwrite existing catalog files")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="print configuration and flow counts")
    p.add_argument("--max-points", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("oracle", help="brute-force search over Gauss-pair codes")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--mode", choices=("full", "symmetric-reduced"), default="symmetric-reduced")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-long", action="store_true", help="permit the 2n=10 search")
    p.add_argument("--check", action="store_true", help="compare against the generator")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("invariants", help="region graph, matrix and defining vectors")
    p.add_argument("--input", default="-", help="GP1 or catalog file ('-' = stdin)")
    p.add_argument("--machine", action="store_true", help="key-value output")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("symmetry", help="classify arrangements as symmetric/asymmetric")
    p.add_argument("--input", default="-", help="GP1 or catalog file ('-' = stdin)")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("render", help="draw arrangements as SVG files")
    p.add_argument("--input", default="-", help="GP1 or catalog file ('-' = stdin)")
    p.add_argument("--out", help="output directory (default: $CIRCLEPAIRS_OUT)")
    p.add_argument("--stroke1", default="#1f77b4", help="curve 1 colour")
    p.add_argument("--stroke2", default="#d62728", help="curve 2 colour")
    p.add_argument("--stroke-width", type=float, default=2.0)
    p.add_argument("--size", type=int, default=480, help="canvas size in pixels")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MalformedCode, NotSpherical, NotTransversal) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK
    except (AssertionError, Exception) as exc:  # noqa: BLE001  - exit code 3, never silent
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
