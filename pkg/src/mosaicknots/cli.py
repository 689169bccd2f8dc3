"""Command-line entry point: ``mosaic <subcommand> ...``.

Exit status is 0 on success, 1 for domain errors (bad files, limits) and 2
for usage errors or an unrealizable Gauss code.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds as _bounds
from .census import ALL_INTERIOR_CROSSINGS, CensusOptions, count, enumerate_mosaics
from .errors import MosaicError, NotRealizable, NotSuitablyConnected
from .gauss import compile_gauss
from .invariants import jones, kauffman_bracket, span_crossing_bound
from .moves import simplify
from .render import render_ascii, render_svg
from .tiles import CLASSICAL, VIRTUAL, is_suitably_connected, parse_mosaic, serialize_mosaic
from .topology import counts, format_gauss, gauss_code, total_writhe, trace


def _load(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_mosaic(text)


def _connected(path: str):
    m = _load(path)
    bad = is_suitably_connected(m)
    if bad:
        raise NotSuitablyConnected(bad)
    return m


def cmd_validate(args, out):
    m = _connected(args.file)
    c = counts(m)
    extra = f" virtual={c.virtual_crossings}" if m.alphabet == VIRTUAL else ""
    print(f"ok components={c.components} crossings={c.crossings}{extra}", file=out)


def cmd_trace(args, out):
    m = _connected(args.file)
    comps = trace(m)
    c = counts(m)
    print(f"components={c.components} crossings={c.crossings} virtual={c.virtual_crossings}", file=out)
    for i, comp in enumerate(comps.components, 1):
        path = " ".join(f"({s.cell[0]},{s.cell[1]})" for s in comp)
        print(f"component {i}: {len(comp)} steps: {path}", file=out)
    print(f"writhe={total_writhe(m)}", file=out)
    if c.components == 1:
        print(f"gauss={format_gauss(gauss_code(m)) or '-'}", file=out)


def cmd_invariant(args, out):
    m = _connected(args.file)
    which = args.which or "jones"
    if which == "bracket":
        print(f"bracket={kauffman_bracket(m).format('A')}", file=out)
    elif which == "jones":
        print(f"jones={jones(m).format('t')}", file=out)
    else:
        print(f"span_bound={span_crossing_bound(m)}", file=out)


def cmd_census(args, out):
    opts = CensusOptions(
        knots_only=args.knots,
        canonical_only=args.canonical,
        interior_constraint=args.interior,
        alphabet=args.alphabet,
        jobs=args.jobs,
    )
    if args.count_only:
        if args.knots or args.canonical:
            total = sum(1 for _ in enumerate_mosaics(args.n, opts))
        else:
            total = count(args.n, opts)
        print(total, file=out)
        return
    for rec in enumerate_mosaics(args.n, opts):
        out.write(serialize_mosaic(rec.mosaic))
        print(rec.stats_line(), file=out)


def cmd_bounds(args, out):
    if args.audit is not None:
        out.write(_bounds.audit(args.audit).format())
        return
    if args.crossings is not None:
        c = args.crossings
        print(f"min_n={_bounds.min_mosaic_number(c)} max_n={_bounds.max_mosaic_number(c)}", file=out)
        return
    rows = _bounds.bound_table(range(args.table + 1))
    print(f"{'c':>3} | {'min_n':>5} | {'max_n':>5}", file=out)
    for c, lo, hi in rows:
        print(f"{c:>3} | {lo:>5} | {hi:>5}", file=out)


def cmd_compile(args, out):
    m = compile_gauss(args.gauss, allow_virtual=args.allow_virtual)
    text = serialize_mosaic(m)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_simplify(args, out):
    m = _connected(args.file)
    out.write(serialize_mosaic(simplify(m, max_steps=args.max_steps, max_grow=args.max_grow)))


def cmd_render(args, out):
    m = _load(args.file)
    out.write(render_svg(m) if args.svg else render_ascii(m))


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mosaic", description="Knot mosaic toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check suitable connectivity")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("trace", help="trace strands, writhe and Gauss code")
    s.add_argument("file")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("invariant", help="bracket, Jones polynomial or span bound")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--bracket", dest="which", action="store_const", const="bracket")
    g.add_argument("--jones", dest="which", action="store_const", const="jones")
    g.add_argument("--span", dest="which", action="store_const", const="span")
    s.set_defaults(func=cmd_invariant)

    s = sub.add_parser("census", help="enumerate or count n-mosaics")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--knots", action="store_true")
    s.add_argument("--canonical", action="store_true")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--interior", choices=[ALL_INTERIOR_CROSSINGS])
    s.add_argument("--alphabet", choices=[CLASSICAL, VIRTUAL], default=CLASSICAL)
    s.add_argument("--jobs", type=_positive, default=1)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("bounds", help="crossing/mosaic number bounds and audits")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--crossings", type=int, metavar="C")
    g.add_argument("--audit", type=int, metavar="N")
    g.add_argument("--table", type=int, metavar="CMAX", default=10)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("compile", help="lay out a Gauss code as a mosaic")
    s.add_argument("--gauss", required=True, help='e.g. "O1U2O3U1O2U3"')
    s.add_argument("--allow-virtual", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("simplify", help="reduce crossings with catalog moves")
    s.add_argument("file")
    s.add_argument("--max-steps", type=int, default=2000)
    s.add_argument("--max-grow", type=int, default=1)
    s.set_defaults(func=cmd_simplify)

    s = sub.add_parser("render", help="draw a mosaic as text or SVG")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--ascii", action="store_true")
    g.add_argument("--svg", action="store_true")
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        args.func(args, out)
    except NotRealizable as exc:
        print(f"error: {exc} (retry with --allow-virtual)", file=err)
        return 2
    except (MosaicError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    return 0


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
