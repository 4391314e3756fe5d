"""Command line: ``qhermite {table,verify,integrate,tangent}``.

Exit codes: 0 all checks pass, 1 an identity failed, 2 usage error,
3 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import qquad, series, verify
from .families import Family, PolyTable, build_by_recurrence

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONCONVERGENCE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    family: Family | None = None
    n_range: tuple[int, int] = (0, 8)
    q_mode: str = "symbolic"  # symbolic | rational | float
    q: Fraction | float | None = None
    output_format: str = "json"
    suites: tuple = ()
    numeric: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command == "integrate" and self.q_mode == "symbolic":
            raise UsageError("numeric integration needs a concrete q")
        if self.command in ("table", "verify", "tangent") and self.q_mode == "float":
            raise UsageError("exact commands take q as an integer or num/den, not a float")


def parse_q(text: str | None):
    """(mode, value) from "num/den", an integer, or a decimal float."""
    if text is None or text == "symbolic":
        return "symbolic", None
    try:
        if "." in text or "e" in text.lower():
            return "float", float(text)
        return "rational", Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read q = {text!r}") from None


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use a..b") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad range {text!r}")
    return lo, hi


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2, sort_keys=True, default=str) + "\n")


# -- table --------------------------------------------------------------------


def cmd_table(cfg: RunConfig, out) -> int:
    lo, hi = cfg.n_range
    table = build_by_recurrence(cfg.family, hi)
    polys = [table[n] for n in range(lo, hi + 1)]
    if cfg.q is not None:
        polys = [p.subs_q(cfg.q) for p in polys]
    if cfg.output_format == "json":
        rows = PolyTable(cfg.family, hi, tuple(polys)).to_json()
        for i, r in enumerate(rows):
            r["n"] = lo + i
        _emit(rows, out)
    elif cfg.output_format == "latex":
        name = cfg.family.value
        for n, p in zip(range(lo, hi + 1), polys):
            out.write(f"{name}_{{{n}}} &= {p.latex()} \\\\\n")
    else:
        for n, p in zip(range(lo, hi + 1), polys):
            out.write(f"{n}: {p}\n")
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def cmd_verify(cfg: RunConfig, out, workers: int = 1) -> int:
    entries = []
    n_max = cfg.n_range[1]
    for suite in cfg.suites:
        entries += verify.run_suite(suite, n_max, cfg.family, workers)
    ok = verify.all_passed(entries)
    report = {
        "suites": list(cfg.suites),
        "n_max": n_max,
        "pass": ok,
        "identities": len({e["identity"] for e in entries}),
        "checks": len(entries),
        "entries": entries,
    }
    if cfg.output_format == "text":
        for e in entries:
            if e["status"] != "pass" or "witness" in e:
                out.write(f"{e['status']:5} {e['suite']}: {e['identity']} {e['params']} {e.get('witness', '')}\n")
        out.write(f"{'PASS' if ok else 'FAIL'}: {len(entries)} checks, {report['identities']} identities\n")
    else:
        _emit(report, out)
    return EXIT_OK if ok else EXIT_FAIL


# -- integrate ----------------------------------------------------------------


def cmd_integrate(cfg: RunConfig, out, args) -> int:
    q = float(cfg.q)
    try:
        ncfg = qquad.NumericConfig(q, tolerance=args.tolerance, max_terms=args.max_terms)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.jackson:
        try:
            f = qquad.parse_expression(args.jackson)
        except (SyntaxError, ValueError) as exc:
            raise UsageError(f"bad expression: {exc}") from None
        value = (qquad.jackson_integral(f, args.b, ncfg) if args.a is None
                 else qquad.jackson_integral_ab(f, args.a, args.b, ncfg))
        _emit({"identity": "Jackson integral", "parameters": {"f": args.jackson, "a": args.a or 0.0,
               "b": args.b, "q": q}, "value": value}, out)
        return EXIT_OK
    if args.measure == "I":
        report = qquad.measureI_validation(ncfg, n_max=cfg.n_range[1])
    else:
        report = qquad.measureII_validation(ncfg, cs=tuple(cfg.numeric["c"]), n_max=cfg.n_range[1])
    _emit(report.to_json(), out)
    return EXIT_OK if report.ok else EXIT_FAIL


# -- tangent ------------------------------------------------------------------


def cmd_tangent(cfg: RunConfig, out, check_phi: bool) -> int:
    n_max = cfg.n_range[1]
    if check_phi:
        rep = series.phi_functional_check(n_max)
        result = {
            "n_max": n_max,
            "Phi(s^n) = E_2n/(q^(n^2)[2n-1]!!)": rep.euler_ok,
            "Phi(H_2n+1(1,s,q)) = (-1)^n T_2n+1": rep.tangent_ok,
            "q = 1 functional": rep.classical_ok,
            "pass": rep.ok,
        }
        _emit(result, out) if cfg.output_format == "json" else out.write(
            "\n".join(f"{k}: {v}" for k, v in result.items()) + "\n")
        return EXIT_OK if rep.ok else EXIT_FAIL
    table = series.q_tangent_euler(n_max)
    if cfg.q is None:
        tangent, euler = [str(t) for t in table.tangent], [str(e) for e in table.euler]
    else:
        t, e = table.at(cfg.q)
        fmt = lambda v: str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"  # noqa: E731
        tangent, euler = [fmt(v) for v in t], [fmt(v) for v in e]
    if cfg.output_format == "json":
        _emit({"q": "symbolic" if cfg.q is None else str(cfg.q), "tangent": tangent, "euler": euler}, out)
    else:
        out.write("T: " + ", ".join(tangent) + "\n")
        out.write("E: " + ", ".join(euler) + "\n")
    return EXIT_OK


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qhermite", description="Discrete q-Hermite polynomials: tables, identity checks, q-integrals.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print polynomials of one family")
    t.add_argument("--family", required=True)
    t.add_argument("--n", default="0..4", help="index or range a..b")
    t.add_argument("--format", choices=("json", "latex", "text"), default="text")
    t.add_argument("--q", help="substitute a rational q (num/den)")

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--suite", default="all", choices=verify.SUITES + ("all",))
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--family")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=("json", "text"), default="json")

    i = sub.add_parser("integrate", help="numeric Jackson integrals and measure checks")
    i.add_argument("--q", required=True, help="0.05 <= q <= 0.95")
    i.add_argument("--measure", choices=("I", "II"), default="I")
    i.add_argument("--c", default="0.5,1,2", help="comma-separated anchors for measure II")
    i.add_argument("--n-max", type=int, default=8)
    i.add_argument("--jackson", metavar="EXPR", help="integrate EXPR in x from a to b")
    i.add_argument("--a", type=float)
    i.add_argument("--b", type=float, default=1.0)
    i.add_argument("--tolerance", type=float, default=1e-9)
    i.add_argument("--max-terms", type=int, default=4000)

    g = sub.add_parser("tangent", help="q-tangent and q-Euler numbers")
    grp = g.add_mutually_exclusive_group()
    grp.add_argument("--q", help="evaluate at a rational q (num/den)")
    grp.add_argument("--symbolic", action="store_true", help="print Laurent polynomials in q (default)")
    g.add_argument("--n-max", type=int, default=4)
    g.add_argument("--check-phi", action="store_true")
    g.add_argument("--format", choices=("json", "text"), default="text")
    return p


def _config(args) -> RunConfig:
    cmd = args.command
    n_max = getattr(args, "n_max", None)
    if n_max is not None and n_max < 0:
        raise UsageError("--n-max must be >= 0")
    family = Family.parse(args.family) if getattr(args, "family", None) else None
    if cmd == "table":
        mode, q = parse_q(args.q)
        return RunConfig(cmd, family, parse_range(args.n), mode, q, args.format)
    if cmd == "verify":
        suites = verify.SUITES if args.suite == "all" else (args.suite,)
        return RunConfig(cmd, family, (0, args.n_max), "symbolic", None, args.format, tuple(suites))
    if cmd == "integrate":
        mode, q = parse_q(args.q)
        try:
            cs = [float(c) for c in args.c.split(",") if c.strip()]
        except ValueError:
            raise UsageError(f"bad --c list {args.c!r}") from None
        return RunConfig(cmd, None, (0, args.n_max), mode if mode == "symbolic" else "float",
                         float(q) if q is not None else None, "json", numeric={"c": cs})
    mode, q = parse_q(None if args.symbolic else args.q)
    if mode == "rational" and q == 0:
        raise UsageError("q must be nonzero")
    return RunConfig(cmd, None, (0, args.n_max), mode, q, args.format)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        cfg = _config(args)
        if cfg.command == "table":
            return cmd_table(cfg, out)
        if cfg.command == "verify":
            return cmd_verify(cfg, out, args.workers)
        if cfg.command == "integrate":
            return cmd_integrate(cfg, out, args)
        return cmd_tangent(cfg, out, args.check_phi)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except qquad.NonConvergence as exc:
        print(f"qhermite: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except ValueError as exc:
        print(f"qhermite: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
