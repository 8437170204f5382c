"""``rhombus`` command line.

Exit codes: 0 success or pass, 1 verification failure, 2 usage error,
3 inconclusive.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import oeis, verify
from .grid import generate, generate_integer
from .render import OVERLAYS, RenderSizeError, RenderSpec, raster, render
from .sequences import NAMES, sequence
from .stealth import stealth_rows

EXIT = {verify.PASS: 0, verify.FAIL: 1, verify.INCONCLUSIVE: 3}
USAGE_ERROR = 2
DEFAULT_MAX_ROWS = 1 << 20
CHECKS = ("conj1", "conj2", "conj3", "conj4", "mirror", "theorem1", "lemma1", "density")


class UsageError(Exception):
    pass


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _budget(rows: int, args) -> None:
    if rows > args.max_rows:
        raise UsageError(f"needs {rows} rows, above the row budget {args.max_rows} (see --max-rows)")


def cmd_gen(args, out: TextIO) -> int:
    _budget(args.rows, args)
    if args.integer:
        rows = generate_integer(args.rows)[1:]
        text = "\n".join(" ".join(map(str, r)) for r in rows)
        payload = {"command": "gen", "rows": args.rows, "integer": True, "data": rows}
    else:
        grid = generate(args.rows)
        lines = [str(grid.row(n)) for n in range(1, args.rows + 1)]
        width = 2 * args.rows - 1
        text = "\n".join(line.center(width).rstrip() for line in lines)
        payload = {"command": "gen", "rows": args.rows, "integer": False, "data": lines}
    if args.out:
        Path(args.out).write_text(text + "\n")
        payload["out"] = args.out
    if args.json:
        if args.out:
            payload.pop("data")
        _dump(payload, out)
    elif not args.out:
        out.write(text + "\n")
    return 0


def cmd_seq(args, out: TextIO) -> int:
    if args.name not in NAMES:
        raise UsageError(f"unknown sequence {args.name!r}; choose from {', '.join(NAMES)}")
    if args.name in ("G", "H"):
        _budget(args.max, args)
    table = sequence(args.name, args.max)
    if args.json:
        _dump({"command": "seq", "name": table.name, "start": table.start, "values": list(table.values)}, out)
    else:
        for n in table.indices():
            out.write(f"{n} {table[n]}\n")
    return 0


def cmd_diag(args, out: TextIO) -> int:
    if args.k < 0 or args.len < 1:
        raise UsageError("--k must be >= 0 and --len >= 1")
    _budget(verify.diagonal_start(args.k) + args.len, args)
    diag = verify.diagonal_bits(args.k, args.len)
    period = verify.minimal_period(diag.bits)
    if args.json:
        _dump({"command": "diag", "k": args.k, "start_row": diag.start, "bits": str(diag),
               "minimal_period": period}, out)
    else:
        out.write(f"{diag}\nminimal observed period {period}\n")
    return 0


def _rows_needed(check: str, n: int, k: int, horizon: int) -> int:
    if check == "conj1":
        return 2 << n
    if check == "conj2":
        return 1 << n
    if check == "conj3":
        return max(verify.diagonal_start(k) + horizon, stealth_rows(8))
    if check == "conj4":
        return n
    if check == "mirror":
        return 3 << max(n - 1, 0)
    if check == "density":
        return 1 << n
    return stealth_rows(n)


def cmd_verify(args, out: TextIO) -> int:
    check = args.check
    n = args.n
    if check == "conj3":
        if args.k is None:
            raise UsageError("conj3 needs --k")
    elif n is None:
        raise UsageError(f"{check} needs --n")
    if check == "conj4" and args.rows is not None:
        n = args.rows
    elif check == "conj4":
        n = 1 << n
    floor = {"conj1": 1, "mirror": 1, "lemma1": 1, "conj4": 1}.get(check, 0)
    if check != "conj3" and n < floor:
        raise UsageError(f"{check} needs --n >= {floor}")
    if check == "conj3" and args.k < 0:
        raise UsageError("--k must be >= 0")
    _budget(_rows_needed(check, n or 0, args.k or 0, args.horizon), args)

    if check == "conj1":
        report = verify.verify_conjecture1(n)
    elif check == "conj2":
        report = verify.verify_conjecture2(n)
    elif check == "conj3":
        report = verify.verify_conjecture3(args.k, args.horizon)
    elif check == "conj4":
        report = verify.verify_conjecture4(n)
    elif check == "mirror":
        report = verify.verify_mirror(n)
    elif check == "theorem1":
        report = verify.verify_theorem1(n)
    elif check == "lemma1":
        report = verify.verify_lemma1(n)
    else:
        report = verify.verify_density(n)
    _emit_report(report, args, out)
    return EXIT[report.status]


def _emit_report(report: verify.VerificationReport, args, out: TextIO) -> None:
    if args.json:
        _dump(report.to_dict(), out)
        return
    d = report.to_dict()
    out.write(f"{report.check} {json.dumps(d['params'], sort_keys=True)}: {report.status}\n")
    out.write(f"  expected {json.dumps(d['expected'], sort_keys=True)}\n")
    out.write(f"  actual   {json.dumps(d['actual'], sort_keys=True)}\n")
    if report.witness is not None:
        out.write(f"  witness  {json.dumps(d['witness'], sort_keys=True)}\n")


def cmd_render(args, out: TextIO) -> int:
    overlays = frozenset(o for o in (args.overlay or "").split(",") if o)
    try:
        spec = RenderSpec.parse(args.source, overlays=overlays, format=args.format,
                                cell_size=args.cell_size, stroke=args.stroke, max_width=args.max_width)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    depth = spec.size if spec.source == "rows" else (
        stealth_rows(spec.size) if spec.source == "stealth" else 1 << spec.size)
    _budget(depth, args)
    try:
        data = render(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    Path(args.out).write_bytes(data)
    img = raster(spec)
    if args.json:
        _dump({"command": "render", "source": args.source, "format": spec.format, "out": args.out,
               "width": img.width, "height": img.height, "black": img.black(),
               "overlays": sorted(overlays)}, out)
    else:
        out.write(f"wrote {args.out} ({img.width}x{img.height}, {img.black()} black)\n")
    return 0


def cmd_oeis(args, out: TextIO) -> int:
    try:
        oeis.check_id(args.id)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    bfile = oeis.fetch_bfile(args.id, "online" if args.online else "offline")
    report = oeis.compare(args.id, oeis.computed_terms(args.id, args.terms), bfile=bfile)
    if bfile.warning and not args.json:
        print(f"warning: {bfile.warning}", file=sys.stderr)
    _emit_report(report, args, out)
    return EXIT[report.status]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-rows", type=int, default=DEFAULT_MAX_ROWS,
                        help="row budget for generation (default %(default)s)")

    p = argparse.ArgumentParser(prog="rhombus", description="Pascal rhombus (mod 2) toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="print or save rows")
    g.add_argument("--rows", type=int, required=True)
    g.add_argument("--integer", action="store_true", help="exact integer rows instead of mod 2")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("render", parents=[common], help="write a PBM or SVG image")
    r.add_argument("--source", required=True, help="rows:M, stealth:N or haystack:N")
    r.add_argument("--format", choices=["pbm", "p4", "svg"], default="pbm")
    r.add_argument("--out", required=True)
    r.add_argument("--overlay", help=f"comma list of {','.join(OVERLAYS)} (SVG only)")
    r.add_argument("--cell-size", type=int, default=4, help="SVG units per cell (default 4)")
    r.add_argument("--stroke", type=int, default=1, help="SVG overlay stroke width (default 1)")
    r.add_argument("--max-width", type=int, default=1 << 16, help="image width cap in cells")
    r.set_defaults(func=cmd_render)

    s = sub.add_parser("seq", parents=[common], help="print a sequence table")
    s.add_argument("name", help="one of " + ", ".join(NAMES))
    s.add_argument("--max", type=int, required=True)
    s.set_defaults(func=cmd_seq)

    v = sub.add_parser("verify", parents=[common], help="run a verification check")
    v.add_argument("check", choices=CHECKS)
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--horizon", type=int, default=4096)
    v.add_argument("--rows", type=int, help="conj4: rows to check (default 2**n)")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("diag", parents=[common], help="bits of diagonal D_k")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--len", type=int, required=True)
    d.set_defaults(func=cmd_diag)

    o = sub.add_parser("oeis", help="OEIS b-file comparison")
    osub = o.add_subparsers(dest="action", required=True)
    oc = osub.add_parser("compare", parents=[common], help="compare computed terms with a b-file")
    oc.add_argument("id")
    oc.add_argument("--terms", type=int, default=20)
    oc.add_argument("--online", action="store_true", help="download instead of using cache/fixtures")
    oc.set_defaults(func=cmd_oeis)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"rhombus: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())
