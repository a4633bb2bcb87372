"""
Command-line entry point.

    hessring verify     --n 3 --suite all
    hessring table      hilbert --n 3
    hessring xg         --h 2,3,3 --format json
    hessring gkm-export --h 2,2

Exit codes: 0 when every check passes, 1 when any check fails, 2 on usage
errors.  Output is deterministic for a fixed command line, whatever
``--jobs`` is; ``--timings`` adds per-check wall-clock times to ``verify``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .guards import GuardError, check_guard
from .hessenberg import HessFn, complex_dim, fixed_points
from . import gkm, presentation as pres, suites, symfunc

TABLE_KINDS = ("hilbert", "betti", "fixed-points", "schur", "generators")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    n: int | None = None
    h: HessFn | None = None
    suite: str = "all"
    format: str = "text"
    max_degree: int | None = None
    jobs: int | None = None
    out: str | None = None
    timings: bool = False

    def targets(self) -> tuple[int, list[HessFn]]:
        return suites.hess_functions(self.n, self.h)

    def as_dict(self) -> dict:
        return {"n": self.targets()[0], "h": str(self.h) if self.h else None,
                "suite": self.suite, "max_degree": self.max_degree}


def _hess_arg(text: str) -> HessFn:
    try:
        return HessFn.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _even(text: str) -> int:
    value = int(text)
    if value < 0 or value % 2:
        raise argparse.ArgumentTypeError("--max-degree must be a nonnegative even integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, help="size; all Hessenberg functions on [n]")
    common.add_argument("--h", type=_hess_arg, help='a single Hessenberg function, e.g. "2,3,3"')
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", help="write output to this path instead of stdout")

    parser = argparse.ArgumentParser(
        prog="hessring",
        description="Exact verification of cohomology presentations of Hessenberg varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("--suite", choices=("all",) + suites.SUITES, default="all")
    verify.add_argument("--max-degree", type=_even, help="truncate Hilbert series at this degree")
    verify.add_argument("--jobs", type=_positive, default=None,
                        help="worker processes (default: available CPUs)")
    verify.add_argument("--timings", action="store_true", help="record elapsed_ms per check")

    table = sub.add_parser("table", parents=[common], help="print a table")
    table.add_argument("kind", choices=TABLE_KINDS)

    sub.add_parser("xg", parents=[common], help="Schur expansion of omega X_G")
    sub.add_parser("gkm-export", parents=[common], help="GKM graph as JSON")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    if args.n is None and args.h is None:
        raise UsageError("one of --n or --h is required")
    if args.n is not None and args.h is not None and args.h.n != args.n:
        raise UsageError(f"--h has size {args.h.n} but --n is {args.n}")
    return RunConfig(n=args.n, h=args.h, suite=getattr(args, "suite", "all"),
                     format=args.format, max_degree=getattr(args, "max_degree", None),
                     jobs=getattr(args, "jobs", None), out=args.out,
                     timings=getattr(args, "timings", False))


# -- rendering ----------------------------------------------------------------

def _render_rows(columns: list[str], rows: list[list], fmt: str, meta: dict) -> str:
    if fmt == "json":
        payload = dict(meta, schema=suites.SCHEMA_VERSION, columns=columns,
                       rows=[dict(zip(columns, row)) for row in rows])
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)  # excel dialect: RFC 4180 quoting, CRLF
        writer.writerow(columns)
        for row in rows:
            writer.writerow([json.dumps(c) if isinstance(c, (list, dict)) else c for c in row])
        return buf.getvalue()
    cells = [[str(c) for c in columns]] + [[_text_cell(c) for c in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(columns))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _text_cell(c) -> str:
    if isinstance(c, list):
        return " ".join(str(x) for x in c)
    return str(c)


def render_report(report: suites.Report, cfg: RunConfig) -> str:
    if cfg.format == "json":
        return json.dumps(report.as_dict(cfg.as_dict()), indent=2, sort_keys=True) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["id", "status", "witness", "elapsed_ms", "detail"])
        for r in report.records:
            writer.writerow([r.id, r.status,
                             "" if r.witness is None else json.dumps(r.witness, sort_keys=True),
                             "" if r.elapsed_ms is None else r.elapsed_ms,
                             "" if r.detail is None else json.dumps(r.detail, sort_keys=True)])
        return buf.getvalue()
    lines = []
    for r in report.records:
        line = f"{r.status.upper():7} {r.id}"
        if r.elapsed_ms is not None:
            line += f"  ({r.elapsed_ms} ms)"
        if r.witness is not None:
            line += f"  {json.dumps(r.witness, sort_keys=True)}"
        elif r.detail is not None:
            line += f"  {json.dumps(r.detail, sort_keys=True)}"
        lines.append(line)
    s = report.summary
    lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------

def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    n, hs = cfg.targets()
    checks = suites.build_checks(cfg.suite, n, hs, cfg.max_degree)
    report = suites.run_checks(cfg.suite, checks, cfg.jobs, cfg.timings)
    return render_report(report, cfg), 0 if report.ok else 1


def table_rows(kind: str, hs: list[HessFn]) -> tuple[list[str], list[list]]:
    rows: list[list] = []
    if kind == "hilbert":
        columns = ["h", "hilbert_series", "total_dim"]
        for h in hs:
            series = pres.hilbert_closed_form(h)
            rows.append([str(h), series.to_str("s"), series(1)])
    elif kind == "betti":
        columns = ["h", "dim_C", "poincare_inv_h", "betti_from_xg", "agree"]
        for h in hs:
            inv_route = gkm.poincare_polynomial(h)
            xg_route = symfunc.betti_from_xg(h)
            rows.append([str(h), complex_dim(h), inv_route.to_str("q"),
                         xg_route.to_str("q"), inv_route == xg_route])
    elif kind == "fixed-points":
        columns = ["h", "w"]
        for h in hs:
            rows += [[str(h), w.word()] for w in fixed_points(h)]
    elif kind == "schur":
        columns = ["h", "lambda", "coeff"]
        for h in hs:
            expansion = symfunc.omega(symfunc.expand_in_schur(symfunc.chromatic_qsym(h)))
            for lam in symfunc.partitions(h.n):
                if lam in expansion.coords:
                    rows.append([str(h), list(lam), expansion.coords[lam].as_list()])
    elif kind == "generators":
        columns = ["h", "j", "generator", "degree", "t_zero_form"]
        for h in hs:
            for j, label in enumerate(pres.ideal_I_labels(h), start=1):
                rows.append([str(h), j, label, 2 * (h(j) - j + 1),
                             str(pres.fcheck(h(j), j, h.n))])
    else:
        raise UsageError(f"unknown table kind {kind!r}")
    return columns, rows


def cmd_table(cfg: RunConfig, kind: str) -> tuple[str, int]:
    n, hs = cfg.targets()
    columns, rows = table_rows(kind, hs)
    meta = {"table": kind, "n": n, "h": str(cfg.h) if cfg.h else None}
    return _render_rows(columns, rows, cfg.format, meta), 0


def xg_payload(h: HessFn) -> dict:
    check_guard("xg", h.n, 1, 6)
    schur = symfunc.expand_in_schur(symfunc.chromatic_qsym(h))
    expansion = symfunc.omega(schur)
    records = [{"lambda": list(lam), "coeff": expansion.coords[lam].as_list()}
               for lam in symfunc.partitions(h.n) if lam in expansion.coords]
    trivial = schur.coeff((1,) * h.n)
    product = symfunc.sw_trivial_coeff(h)
    return {
        "schema": suites.SCHEMA_VERSION, "h": str(h), "basis": "schur", "omega_applied": True,
        "expansion": records,
        "trivial": {"s_1n_coeff_of_XG": trivial.as_list(),
                    "product_formula": product.as_list(), "match": trivial == product},
    }


def cmd_xg(cfg: RunConfig) -> tuple[str, int]:
    n, hs = cfg.targets()
    payloads = [xg_payload(h) for h in hs]
    code = 0 if all(p["trivial"]["match"] for p in payloads) else 1
    if cfg.format == "json":
        body = payloads[0] if cfg.h else {"schema": suites.SCHEMA_VERSION, "n": n,
                                          "results": payloads}
        return json.dumps(body, indent=2, sort_keys=True) + "\n", code
    rows = [[p["h"], r["lambda"], r["coeff"]] for p in payloads for r in p["expansion"]]
    out = _render_rows(["h", "lambda", "coeff"], rows, cfg.format, {})
    if cfg.format == "text":
        for p in payloads:
            tr = p["trivial"]
            out += (f"h={p['h']}: s_(1^n) coefficient of X_G {tr['s_1n_coeff_of_XG']} "
                    f"vs product {tr['product_formula']}: "
                    f"{'match' if tr['match'] else 'MISMATCH'}\n")
    return out, code


def cmd_gkm_export(cfg: RunConfig) -> tuple[str, int]:
    n, hs = cfg.targets()
    graphs = [gkm.export_graph(gkm.build_graph(h)) for h in hs]
    body = dict(graphs[0], schema=suites.SCHEMA_VERSION) if cfg.h else {
        "schema": suites.SCHEMA_VERSION, "n": n, "graphs": graphs}
    return json.dumps(body, indent=2, sort_keys=True) + "\n", 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        if args.command == "verify":
            text, code = cmd_verify(cfg)
        elif args.command == "table":
            text, code = cmd_table(cfg, args.kind)
        elif args.command == "xg":
            text, code = cmd_xg(cfg)
        else:
            text, code = cmd_gkm_export(cfg)
    except (UsageError, GuardError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
