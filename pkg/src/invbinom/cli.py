"""Command-line front end.

Subcommands:

* ``eval``   evaluate S(n, m; x) by one route (or "auto")
* ``verify`` run a verification suite; exit 3 on any failing entry
* ``table``  tabulate S(n, m; x) over a real grid of x

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 malformed input, 2 domain violation (the message names the violated
bound), 3 verification failures. Identical invocations produce
byte-identical stdout, except the wall-time line in plain-text verify
summaries. Complex x is accepted as an ``a+bi`` literal and printed with
17 significant digits, which round-trips binary64 exactly.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import verify as verify_suites
from .errors import DomainError, SeriesError
from .quadrature import QuadratureSpec
from .routes import METHODS, evaluate
from .series import Evaluation, SeriesParams, Domain, default_max_terms

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

OUTPUTS = ("text", "json", "csv")
CSV_HEADER = ("x", "value_re", "value_im", "abs_error_est", "method", "work")


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract here is 1."""

    def error(self, message):  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def parse_complex(text: str) -> complex:
    """Accept 'a', 'bi', 'a+bi', 'a-bi' (a 'j' suffix works too)."""
    cleaned = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    try:
        return complex(cleaned)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex literal: {text!r}") from None


def fmt_float(v: float) -> str:
    return f"{v + 0.0:.17g}"  # v + 0.0 normalizes signed zero


def fmt_complex(z: complex) -> str:
    if z.imag == 0.0:
        return fmt_float(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{fmt_float(z.real)}{sign}{fmt_float(abs(z.imag))}i"


@dataclass(frozen=True)
class CliRequest:
    command: str
    n: int = 0
    m: int = 1
    x: complex = 0j
    method: str = "auto"
    tol: float | None = None
    output: str = "text"
    x_from: float = 0.0
    x_to: float = 0.0
    steps: int = 1
    suite: str = "all"


def build_parser() -> _Parser:
    parser = _Parser(
        prog="invbinom",
        description="Evaluate and cross-verify the series S(n,m;x) = sum x^k / (k^n C(3mk,mk)).",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = dict(formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    p_eval = sub.add_parser("eval", help="evaluate one value", **common)
    p_eval.add_argument("--n", type=int, required=True, help="polylog-like weight, n >= 0")
    p_eval.add_argument("--m", type=int, default=1, help="binomial stride, m >= 1")
    p_eval.add_argument("--x", type=parse_complex, required=True, help="argument, real or a+bi")
    p_eval.add_argument(
        "--method", choices=METHODS + ("auto",), default="auto", help="evaluation route"
    )
    p_eval.add_argument("--tol", type=float, default=None, help="tolerance override")
    p_eval.add_argument("--output", choices=OUTPUTS, default="text")

    p_verify = sub.add_parser("verify", help="run a verification suite", **common)
    p_verify.add_argument(
        "--suite", choices=verify_suites.SUITE_NAMES, default="all", help="which suite"
    )
    p_verify.add_argument("--tol", type=float, default=None, help="tolerance override")
    p_verify.add_argument("--output", choices=OUTPUTS, default="text")

    p_table = sub.add_parser("table", help="tabulate values over a real grid", **common)
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--m", type=int, default=1)
    p_table.add_argument("--x-from", type=float, required=True, dest="x_from")
    p_table.add_argument("--x-to", type=float, required=True, dest="x_to")
    p_table.add_argument("--steps", type=positive_int, default=11, help="number of grid points")
    p_table.add_argument("--method", choices=METHODS + ("auto",), default="auto")
    p_table.add_argument("--tol", type=float, default=None)
    p_table.add_argument("--output", choices=OUTPUTS, default="text")
    return parser


def _request(ns: argparse.Namespace) -> CliRequest:
    fields = {k: v for k, v in vars(ns).items() if v is not None}
    return CliRequest(**fields)


def _spec_for(tol: float | None) -> QuadratureSpec | None:
    if tol is None:
        return None
    return QuadratureSpec(abs_tol=tol, rel_tol=tol)


def _evaluate(req: CliRequest, x: complex) -> Evaluation:
    return evaluate(
        req.n,
        req.m,
        x,
        req.method,
        rel_tol=req.tol if req.tol is not None else 1e-15,
        spec=_spec_for(req.tol),
        max_terms=default_max_terms(),
    )


def _csv_rows(rows: list[tuple[complex, Evaluation]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for x, ev in rows:
        writer.writerow(
            (
                fmt_complex(x),
                fmt_float(ev.value.real),
                fmt_float(ev.value.imag),
                fmt_float(ev.abs_error_est),
                ev.method,
                ev.work,
            )
        )
    return buf.getvalue()


def _row_json(x: complex, ev: Evaluation) -> dict:
    return {
        "x_re": x.real + 0.0,
        "x_im": x.imag + 0.0,
        "value_re": ev.value.real + 0.0,
        "value_im": ev.value.imag + 0.0,
        "abs_error_est": ev.abs_error_est,
        "method": ev.method,
        "work": ev.work,
    }


def cmd_eval(req: CliRequest) -> int:
    ev = _evaluate(req, req.x)
    if req.output == "json":
        payload = {"n": req.n, "m": req.m}
        payload.update(_row_json(req.x, ev))
        print(json.dumps(payload, indent=2))
    elif req.output == "csv":
        sys.stdout.write(_csv_rows([(req.x, ev)]))
    else:
        print(f"value = {fmt_complex(ev.value)}")
        print(f"abs_error_est = {fmt_float(ev.abs_error_est)}")
        print(f"method = {ev.method}")
        print(f"work = {ev.work}")
    return EXIT_OK


def _grid(x_from: float, x_to: float, steps: int) -> list[float]:
    if steps == 1:
        return [x_from]
    h = (x_to - x_from) / (steps - 1)
    xs = [x_from + i * h for i in range(steps)]
    xs[-1] = x_to  # exact endpoint
    return sorted(xs)


def cmd_table(req: CliRequest) -> int:
    xs = _grid(req.x_from, req.x_to, req.steps)
    # reject the whole grid before evaluating anything
    for x in xs:
        p = SeriesParams(req.n, req.m, x)
        dom = p.classify()
        if dom is Domain.OUTSIDE or (dom is Domain.BOUNDARY and req.n < 2):
            raise DomainError(
                f"grid point x = {fmt_float(x)} leaves the domain: |x| <= (27/4)**{req.m} "
                f"= {fmt_float(p.radius)}"
                + ("" if req.n >= 2 else f" (strict for n = {req.n} < 2)")
            )
    rows = [(complex(x), _evaluate(req, complex(x))) for x in xs]
    if req.output == "json":
        payload = {
            "n": req.n,
            "m": req.m,
            "method": req.method,
            "rows": [_row_json(x, ev) for x, ev in rows],
        }
        print(json.dumps(payload, indent=2))
    elif req.output == "csv":
        sys.stdout.write(_csv_rows(rows))
    else:
        print(f"{'x':>24} {'value':>24} {'abs_error_est':>14} {'method':>14} {'work':>8}")
        for x, ev in rows:
            print(
                f"{fmt_complex(x):>24} {fmt_complex(ev.value):>24} "
                f"{ev.abs_error_est:>14.3e} {ev.method:>14} {ev.work:>8}"
            )
    return EXIT_OK


def _verify_report(req: CliRequest):
    if req.suite == "special-values":
        return verify_suites.run_special_values(req.tol)
    if req.suite == "cross-routes":
        return verify_suites.run_cross_routes(tol=req.tol)
    if req.suite == "borwein-girgensohn":
        return verify_suites.run_borwein_girgensohn(req.tol if req.tol is not None else 1e-12)
    if req.suite == "polylog":
        return verify_suites.run_polylog_factorization(req.tol if req.tol is not None else 1e-12)
    return verify_suites.run_all(req.tol)


def cmd_verify(req: CliRequest) -> int:
    report = _verify_report(req)
    if req.output == "json":
        print(report.serialize())
    elif req.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ("suite", "id", "n", "m", "x_re", "x_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
             "abs_diff", "tol", "pass")
        )
        for e in report.entries:
            writer.writerow(
                (
                    report.suite,
                    e.id,
                    e.n,
                    e.m,
                    fmt_float(e.x.real),
                    fmt_float(e.x.imag),
                    fmt_float(e.lhs.real),
                    fmt_float(e.lhs.imag),
                    fmt_float(e.rhs.real),
                    fmt_float(e.rhs.imag),
                    fmt_float(e.abs_diff),
                    fmt_float(e.tol),
                    "true" if e.passed else "false",
                )
            )
        sys.stdout.write(buf.getvalue())
    else:
        print(report.to_text())
    return EXIT_OK if report.all_passed else EXIT_VERIFY


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0; parse errors exit 1 via _Parser.error
        return int(exc.code or 0)
    req = _request(ns)
    try:
        if req.command == "eval":
            return cmd_eval(req)
        if req.command == "table":
            return cmd_table(req)
        return cmd_verify(req)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BrokenPipeError:
        # downstream consumer went away (e.g. piping into head); die quietly
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
