"""Command-line reports over the bound machinery.

Subcommands:
  bound   one (n, d) upper bound by a chosen method
  curve   rate-vs-distance table: GV floor, entropy ceiling, finite-n column
  walks   end-level walk counts with the root-vs-main-term summary
  verify  re-check a serialized witness file from scratch
  sweep   bound grid over (n, d) ranges, methods side by side

Output is CSV (default) or JSON via --format; --out writes a file instead of
stdout; --plot additionally renders a figure next to the delimited output
(curve, walks, sweep).  Exact bounds are always emitted as "p/q" strings or
decimal integer strings -- never as floats; only exponents and curve values
are floating point.  The env var LPBOUND_DENSE_LIMIT caps dense-cube work.

Exit status: 0 on success, 1 with a diagnostic on stderr for infeasibility,
limit breaches, or bad parameter combinations, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from lpbound.certificates import (
    Certificate,
    NoFeasibleCertificateError,
    auto_select,
    build_certificate,
    check_dual_feasible,
    check_feasibility_walks,
    exact_bound,
    profile_bound,
    support_bound,
)
from lpbound.codes import OracleLimitError, max_code
from lpbound.cube import (
    DenseLimitError,
    LevelProfile,
    binary_entropy,
    rational_to_str,
)
from lpbound.lp import LPInstance, solve_primal
from lpbound.walks import asymptotic_walk_estimate, integer_root_float, walk_counts

METHODS = ("certificate", "lp", "oracle", "support")


class CLIError(Exception):
    """Domain-level failure that should become exit status 1."""


def rate_exponent(bound: Union[int, Fraction], n: int) -> float:
    """(1/n) log2(bound), safe for arbitrarily large exact values."""
    f = Fraction(bound)
    if f <= 0:
        raise ValueError("exponent needs a positive bound")
    return (math.log2(f.numerator) - math.log2(f.denominator)) / n


def format_bound(bound: Union[int, Fraction]) -> str:
    if isinstance(bound, int):
        return str(bound)
    return rational_to_str(bound)


def gv_rate(delta: float) -> float:
    """Gilbert-Varshamov floor 1 - H(delta)."""
    return 1.0 - binary_entropy(delta)


def mrrw1_rate(delta: float) -> float:
    """Entropy-form ceiling H(1/2 - sqrt(delta (1 - delta)))."""
    if not 0.0 <= delta <= 0.5:
        raise ValueError(f"need delta in [0, 1/2], got {delta}")
    return binary_entropy(0.5 - math.sqrt(delta * (1.0 - delta)))


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    method: str
    bound: Union[int, Fraction]
    exponent: float
    parameters: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "method": self.method,
            "bound": format_bound(self.bound),
            "exponent": self.exponent,
            "parameters": self.parameters,
        }


def compute_bound_report(
    n: int,
    d: int,
    method: str,
    m: Optional[int] = None,
    r: Optional[int] = None,
    oracle_limit: Optional[int] = None,
    want_witness: bool = False,
) -> BoundReport:
    if method not in METHODS:
        raise CLIError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    try:
        if method in ("certificate", "support"):
            if (m is None) != (r is None):
                raise CLIError("--m and --r must be given together")
            if m is not None:
                report = check_feasibility_walks(n, d, m, r)
                if not report.feasible:
                    raise CLIError(
                        f"certificate (n={n}, d={d}, m={m}, r={r}) is infeasible: "
                        f"threshold {report.threshold}, margins "
                        f"({report.margin_r}, {report.margin_r_minus_1}), "
                        f"parity_ok={report.parity_ok}, sign_ok={report.sign_ok}"
                    )
                cert = build_certificate(n, d, m, r)
            else:
                cert = auto_select(n, d)
                report = check_feasibility_walks(n, d, cert.m, cert.r)
            params = {
                "m": cert.m,
                "r": cert.r,
                "threshold": str(report.threshold),
                "margin_r": str(report.margin_r),
                "margin_r_minus_1": str(report.margin_r_minus_1),
                "trivial_regime": report.trivial_regime,
            }
            value: Union[int, Fraction]
            if method == "certificate":
                value = exact_bound(cert)
            else:
                value = support_bound(cert)
            return BoundReport(n, d, method, value, rate_exponent(value, n), params)
        if method == "lp":
            sol = solve_primal(LPInstance(n, d))
            return BoundReport(
                n, d, "lp", sol.value, rate_exponent(sol.value, n), {"status": sol.status}
            )
        # oracle
        size, witness = max_code(n, d, limit=oracle_limit)
        params = {}
        if want_witness:
            params["witness"] = witness.to_bitstrings()
        return BoundReport(n, d, "oracle", size, rate_exponent(size, n), params)
    except (
        ValueError,
        OracleLimitError,
        DenseLimitError,
        NoFeasibleCertificateError,
    ) as exc:
        raise CLIError(str(exc)) from exc


# ---------------------------------------------------------------------------
# curve
# ---------------------------------------------------------------------------

def curve_rows(points: int, n_finite: Optional[int] = None) -> list[dict]:
    """Uniform delta grid over [0, 1/2]; endpoints emitted as exact constants.

    The optional finite-n column carries the certificate exponent at
    d = floor(delta * n), blank where no certificate applies (d < 1 or the
    search grid is exhausted).
    """
    if points < 2:
        raise CLIError("curve needs at least 2 points")
    rows = []
    for i in range(points):
        frac = Fraction(i, 2 * (points - 1))  # exact delta
        delta = float(frac)
        if i == 0:
            gv, m1 = 1.0, 1.0
        elif i == points - 1:
            gv, m1 = 0.0, 0.0
        else:
            gv, m1 = gv_rate(delta), mrrw1_rate(delta)
        row = {"delta": delta, "gv": gv, "mrrw1": m1}
        if n_finite is not None:
            d = math.floor(frac * n_finite)
            exponent = None
            if d >= 1:
                try:
                    cert = auto_select(n_finite, d)
                    exponent = rate_exponent(exact_bound(cert), n_finite)
                except NoFeasibleCertificateError:
                    exponent = None
            row["cert_exponent"] = exponent
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def sweep_row(task: tuple[int, int, tuple[str, ...], Optional[int]]) -> dict:
    """One (n, d) grid point; missing/failing methods leave blank cells."""
    n, d, methods, oracle_limit = task
    row: dict = {"n": n, "d": d}
    for method in methods:
        try:
            rep = compute_bound_report(n, d, method, oracle_limit=oracle_limit)
        except CLIError:
            continue
        row[f"{method}_bound"] = format_bound(rep.bound)
        row[f"{method}_exponent"] = rep.exponent
        if method in ("certificate", "support"):
            row[f"{method}_m"] = rep.parameters["m"]
            row[f"{method}_r"] = rep.parameters["r"]
    return row


def sweep_columns(methods: Sequence[str]) -> list[str]:
    cols = ["n", "d"]
    for method in methods:
        cols += [f"{method}_bound", f"{method}_exponent"]
        if method in ("certificate", "support"):
            cols += [f"{method}_m", f"{method}_r"]
    return cols


# ---------------------------------------------------------------------------
# emission helpers
# ---------------------------------------------------------------------------

def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return _fmt_float(value)
    return str(value)


# ---------------------------------------------------------------------------
# subcommand drivers
# ---------------------------------------------------------------------------

def _run_bound(args: argparse.Namespace) -> int:
    rep = compute_bound_report(
        args.n,
        args.d,
        args.method,
        m=args.m,
        r=args.r,
        oracle_limit=args.oracle_limit,
        want_witness=args.witness,
    )
    if args.format == "json":
        _write(json.dumps(rep.to_json_dict(), indent=2) + "\n", args.out)
        return 0
    params = {k: v for k, v in rep.parameters.items() if k != "witness"}
    header = ["n", "d", "method", "bound", "exponent"] + list(params)
    row = [rep.n, rep.d, rep.method, format_bound(rep.bound), _fmt_float(rep.exponent)]
    row += [_cell(v) for v in params.values()]
    text = _csv_text(header, [row])
    if args.witness and "witness" in rep.parameters:
        text += "\n" + "\n".join(rep.parameters["witness"]) + "\n"
    _write(text, args.out)
    return 0


def _run_curve(args: argparse.Namespace) -> int:
    rows = curve_rows(args.points, args.n)
    has_cert = args.n is not None
    if args.format == "json":
        _write(json.dumps({"points": rows}, indent=2) + "\n", args.out)
    else:
        header = ["delta", "gv", "mrrw1"] + (["cert_exponent"] if has_cert else [])
        table = []
        for row in rows:
            line = [_fmt_float(row["delta"]), _fmt_float(row["gv"]), _fmt_float(row["mrrw1"])]
            if has_cert:
                line.append(_cell(row["cert_exponent"]))
            table.append(line)
        _write(_csv_text(header, table), args.out)
    if args.plot:
        from lpbound import plots

        plots.plot_curve(rows, args.plot, n_finite=args.n)
    return 0


def _run_walks(args: argparse.Namespace) -> int:
    try:
        table = walk_counts(args.n, args.r, args.m)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    root = None
    main_term = None
    if args.m >= 1 and args.r >= 1:
        root = integer_root_float(table.ending_offset(-1), args.m)
        if 0 < args.r < args.n:
            main_term = asymptotic_walk_estimate(args.n, args.r, args.m, -1)
    if args.format == "json":
        payload = {
            "n": args.n,
            "r": args.r,
            "m": args.m,
            "counts": [str(c) for c in table.counts],
            "root": root,
            "main_term": main_term,
        }
        _write(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        text = _csv_text(["level", "count"], [[lev, c] for lev, c in table.to_csv_rows()])
        if root is not None:
            summary = f"# root={_fmt_float(root)}"
            if main_term is not None:
                summary += f" main_term={_fmt_float(main_term)}"
            text += summary + "\n"
        _write(text, args.out)
    if args.plot:
        from lpbound import plots

        plots.plot_walks(args.n, args.r, args.m, table.counts, args.plot)
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.file) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIError(f"cannot read witness file: {exc}") from exc

    walk_report = None
    if isinstance(data, dict) and "g" in data:
        try:
            cert = Certificate.from_json_dict(data)
        except (KeyError, ValueError) as exc:
            raise CLIError(f"malformed certificate file: {exc}") from exc
        g = cert.g
        d = args.d if args.d is not None else cert.d
        walk_report = check_feasibility_walks(cert.n, d, cert.m, cert.r)
    elif isinstance(data, dict) and "values" in data:
        try:
            g = LevelProfile.from_json_dict(data)
        except (KeyError, ValueError) as exc:
            raise CLIError(f"malformed profile file: {exc}") from exc
        if args.d is None:
            raise CLIError("--d is required when verifying a bare profile")
        d = args.d
    else:
        raise CLIError("witness file must hold a certificate or a profile")

    chk = check_dual_feasible(g, d)
    lines = [f"dual_feasible: {str(bool(chk)).lower()}"]
    for violation in chk.violations:
        lines.append(f"violation: {violation}")
    if walk_report is not None:
        lines.append(f"walk_feasible: {str(walk_report.feasible).lower()}")
        lines.append(f"threshold: {walk_report.threshold}")
        lines.append(
            f"margins: {walk_report.margin_r},{walk_report.margin_r_minus_1}"
        )
    if chk:
        lines.append(f"bound: {rational_to_str(profile_bound(g))}")
    if args.format == "json":
        payload = {
            "dual_feasible": bool(chk),
            "violations": list(chk.violations),
            "walk_feasible": None if walk_report is None else walk_report.feasible,
            "bound": rational_to_str(profile_bound(g)) if chk else None,
        }
        _write(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _write("\n".join(lines) + "\n", args.out)
    return 0 if chk else 1


def _run_sweep(args: argparse.Namespace) -> int:
    methods = tuple(s.strip() for s in args.methods.split(",") if s.strip())
    for method in methods:
        if method not in METHODS:
            raise CLIError(f"unknown method {method!r} in --methods")
    if not methods:
        raise CLIError("--methods must name at least one method")
    if args.n_min < 1 or args.n_min > args.n_max:
        raise CLIError("need 1 <= n-min <= n-max")
    tasks = []
    for n in range(args.n_min, args.n_max + 1):
        d_hi = min(args.d_max, n)
        for d in range(args.d_min, d_hi + 1):
            tasks.append((n, d, methods, args.oracle_limit))
    if not tasks:
        raise CLIError("empty sweep grid")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(sweep_row, tasks))
    else:
        rows = [sweep_row(t) for t in tasks]
    if args.format == "json":
        _write(json.dumps({"rows": rows}, indent=2) + "\n", args.out)
    else:
        cols = sweep_columns(methods)
        table = [[_cell(row.get(c)) for c in cols] for row in rows]
        _write(_csv_text(cols, table), args.out)
    if args.plot:
        from lpbound import plots

        plots.plot_sweep(rows, methods, args.plot)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", metavar="FILE", help="write the report to FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpbound",
        description="Exact upper bounds on binary codes: certificates, the "
        "radial linear program, exhaustive ground truth, and rate curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="one bound for a single (n, d)")
    p_bound.add_argument("--n", type=int, required=True)
    p_bound.add_argument("--d", type=int, required=True)
    p_bound.add_argument("--method", choices=METHODS, default="certificate")
    p_bound.add_argument("--m", type=int, help="walk length (with --r)")
    p_bound.add_argument("--r", type=int, help="level parameter (with --m)")
    p_bound.add_argument("--oracle-limit", type=int, help="override the search size cap")
    p_bound.add_argument(
        "--witness", action="store_true", help="emit the oracle witness code"
    )
    _add_common(p_bound)

    p_curve = sub.add_parser("curve", help="rate-vs-distance curve table")
    p_curve.add_argument("--points", type=int, default=26)
    p_curve.add_argument(
        "--n", type=int, help="add a finite-n certificate-exponent column"
    )
    p_curve.add_argument("--plot", metavar="FILE", help="also render a figure")
    _add_common(p_curve)

    p_walks = sub.add_parser("walks", help="end-level walk count table")
    p_walks.add_argument("--n", type=int, required=True)
    p_walks.add_argument("--r", type=int, required=True)
    p_walks.add_argument("--m", type=int, required=True)
    p_walks.add_argument("--plot", metavar="FILE", help="also render a figure")
    _add_common(p_walks)

    p_verify = sub.add_parser("verify", help="re-check a serialized witness")
    p_verify.add_argument("file", help="JSON certificate or profile file")
    p_verify.add_argument("--d", type=int, help="distance (overrides the file)")
    _add_common(p_verify)

    p_sweep = sub.add_parser("sweep", help="bound grid over (n, d) ranges")
    p_sweep.add_argument("--n-min", type=int, required=True)
    p_sweep.add_argument("--n-max", type=int, required=True)
    p_sweep.add_argument("--d-min", type=int, default=1)
    p_sweep.add_argument("--d-max", type=int, default=10**9)
    p_sweep.add_argument("--methods", default="certificate,lp")
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument("--oracle-limit", type=int)
    p_sweep.add_argument("--plot", metavar="FILE", help="also render a figure")
    _add_common(p_sweep)

    return parser


_RUNNERS = {
    "bound": _run_bound,
    "curve": _run_curve,
    "walks": _run_walks,
    "verify": _run_verify,
    "sweep": _run_sweep,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
