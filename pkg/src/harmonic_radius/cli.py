"""
Command-line interface for harmonic-radius.

Usage:
    harmonic-radius radius --family starlike-bbhj --alpha 0
    harmonic-radius radius-table --family starlike-bbhj --sweep 0:0.9:0.1
    harmonic-radius check --input coeffs.json --criterion fully-starlike --radius 0.06
    harmonic-radius jacobian-scan --kind sharp-df-bbhj --r-max 0.15 --samples 2000
    harmonic-radius verify --suite all
    harmonic-radius extremal --kind koebe --truncation 100 --out koebe.json

Exit codes: 0 success, 1 verification failure, 2 usage/parse/range error,
3 hypothesis violation or solver ambiguity.  JSON goes to stdout as one object
unless ``--out`` is given; every float is printed with 12 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys

import click

from . import coeff_file
from .exceptions import AmbiguityError, DomainError, HypothesisError, NoRootError
from .extremal import ExtremalKind, build_extremal, jacobian_roots_scan
from .families import check_fully_convex_sum, check_fully_starlike_sum, check_k2_lambda
from .mapping import scale
from .radius import ProblemFamily, RadiusProblem, solve_radius
from .verification import SUITES, run_suite

__all__ = ["main", "format_number", "parse_sweep"]

TOL_ENV = "HARMONIC_RADIUS_TOL"
DEFAULT_TOL = 1e-12

EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3

FAMILIES = [f.value for f in ProblemFamily]
SCAN_KINDS = [k.value for k in (ExtremalKind.SHARP_DF_BBHJ, ExtremalKind.SHARP_DF_CONVEX_HALF, ExtremalKind.UNIFORM_F0)]
CRITERIA = ["fully-starlike", "fully-convex", "k2-lambda"]


class _Abort(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def format_number(x):
    """Float rounded to 12 significant digits (ints and bools pass through)."""
    if isinstance(x, bool) or isinstance(x, int):
        return x
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(f"{x:.12g}")


def _rounded(obj):
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    if isinstance(obj, (str, type(None))):
        return obj
    return format_number(obj)


def _csv_number(x):
    return f"{float(x):.12g}"


def _emit(text, out):
    if out:
        try:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise _Abort(f"cannot write {out}: {exc.strerror}", EXIT_USAGE) from None
    else:
        click.echo(text, nl=False)


def _emit_json(obj, out=None):
    _emit(json.dumps(_rounded(obj)) + "\n", out)


def _resolve_tol(tol):
    if tol is not None:
        return tol
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise _Abort(f"{TOL_ENV}={raw!r} is not a number", EXIT_USAGE) from None


def _run(fn):
    """Map library errors onto the exit-code contract."""
    try:
        fn()
    except _Abort as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(exc.code)
    except (AmbiguityError, NoRootError, HypothesisError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_HYPOTHESIS)
    except (DomainError, coeff_file.CoeffFileError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)


def parse_sweep(sweep):
    """``"start:end:step"`` to an inclusive list of values (12 significant digits)."""
    parts = sweep.split(":")
    if len(parts) != 3:
        raise _Abort(f"sweep {sweep!r} must look like start:end:step", EXIT_USAGE)
    try:
        start, end, step = (float(p) for p in parts)
    except ValueError:
        raise _Abort(f"sweep {sweep!r} has a non-numeric field", EXIT_USAGE) from None
    if not all(math.isfinite(v) for v in (start, end, step)) or step <= 0 or end < start:
        raise _Abort(f"sweep {sweep!r} is empty (need step > 0 and end >= start)", EXIT_USAGE)
    count = int(math.floor((end - start) / step + 1e-9)) + 1
    return [float(f"{start + i * step:.12g}") for i in range(count)]


def _problem(family, alpha, lam, c, b1):
    return RadiusProblem(ProblemFamily(family), alpha=alpha, lam=lam, c=c, b1=b1)


@click.group()
@click.version_option(package_name="harmonic-radius")
def main():
    """Sharp radii for harmonic differential operators."""


@main.command()
@click.option("--family", required=True, type=click.Choice(FAMILIES))
@click.option("--alpha", type=float, default=0.0, show_default=True)
@click.option("--lambda", "lam", type=float, default=0.0, show_default=True)
@click.option("--c", type=float, default=None, help="Uniform coefficient bound (uniform-phi).")
@click.option("--b1", type=float, default=0.0, show_default=True)
@click.option("--tol", type=float, default=None, help=f"Root tolerance (default ${TOL_ENV} or 1e-12).")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def radius(family, alpha, lam, c, b1, tol, out):
    """Solve one radius problem."""

    def go():
        problem = _problem(family, alpha, lam, c, b1)
        res = solve_radius(problem, _resolve_tol(tol))
        _emit_json(
            {
                "family": family,
                "params": problem.params,
                "root": res.root,
                "bracket": list(res.bracket),
                "residual": res.residual,
                "unique": res.unique,
                "iterations": res.iterations,
                "sharpness_tested": res.sharpness_tested,
            },
            out,
        )

    _run(go)


@main.command("radius-table")
@click.option("--family", required=True, type=click.Choice(FAMILIES))
@click.option("--sweep", required=True, help="start:end:step over the family's parameter.")
@click.option("--alpha", type=float, default=0.0, show_default=True)
@click.option("--lambda", "lam", type=float, default=0.0, show_default=True)
@click.option("--c", type=float, default=None)
@click.option("--b1", type=float, default=0.0, show_default=True)
@click.option("--tol", type=float, default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def radius_table(family, sweep, alpha, lam, c, b1, tol, fmt, out):
    """Tabulate the radius over a parameter sweep (alpha or lambda)."""

    def go():
        values = parse_sweep(sweep)
        tol_ = _resolve_tol(tol)
        fam = ProblemFamily(family)
        name = "alpha" if fam.parameter == "alpha" else "lambda"
        rows = []
        prev = None
        for v in values:
            kw = {"alpha": alpha, "lam": lam}
            kw[fam.parameter] = v
            res = solve_radius(_problem(family, kw["alpha"], kw["lam"], c, b1), tol_)
            nonincreasing = prev is None or res.root <= prev
            prev = res.root
            rows.append({name: v, "root": res.root, "residual": res.residual, "nonincreasing": nonincreasing})
        if fmt == "json":
            _emit_json(
                {
                    "family": family,
                    "parameter": name,
                    "rows": rows,
                    "nonincreasing": all(r["nonincreasing"] for r in rows),
                },
                out,
            )
            return
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([name, "root", "residual", "nonincreasing"])
        for r in rows:
            w.writerow([_csv_number(r[name]), _csv_number(r["root"]), _csv_number(r["residual"]),
                        "true" if r["nonincreasing"] else "false"])
        _emit(buf.getvalue(), out)

    _run(go)


@main.command()
@click.option("--input", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--criterion", required=True, type=click.Choice(CRITERIA))
@click.option("--alpha", type=float, default=0.0, show_default=True)
@click.option("--lambda", "lam", type=float, default=0.0, show_default=True)
@click.option("--radius", "r", type=float, default=1.0, show_default=True, help="Scale the mapping to |z| < r.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def check(path, criterion, alpha, lam, r, out):
    """Run a coefficient-sum condition on a coefficient file."""

    def go():
        f = coeff_file.read(path)
        if not 0.0 < r <= 1.0:
            raise _Abort(f"radius must lie in (0, 1], got {r!r}", EXIT_USAGE)
        if abs(f.b1) >= 1.0:
            raise HypothesisError(f"|b_1| = {abs(f.b1)!r} >= 1 violates J_f(0) = 1 - |b_1|^2 > 0")
        fr = scale(f, r)
        if criterion == "fully-starlike":
            res, param = check_fully_starlike_sum(fr, alpha), {"alpha": alpha}
        elif criterion == "fully-convex":
            res, param = check_fully_convex_sum(fr, alpha), {"alpha": alpha}
        else:
            res, param = check_k2_lambda(fr, lam), {"lambda": lam}
        _emit_json(
            {
                "criterion": criterion,
                "params": param,
                "radius": r,
                "sum": res.sum,
                "tail": res.tail,
                "threshold": res.threshold,
                "verdict": res.verdict,
            },
            out,
        )

    _run(go)


@main.command("jacobian-scan")
@click.option("--kind", required=True, type=click.Choice(SCAN_KINDS))
@click.option("--r-max", type=float, required=True)
@click.option("--samples", type=int, default=2000, show_default=True)
@click.option("--c", type=float, default=None, help="uniform-f0 only.")
@click.option("--b1", type=float, default=0.0, show_default=True)
@click.option("--lambda", "lam", type=float, default=0.0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def jacobian_scan(kind, r_max, samples, c, b1, lam, out):
    """Sample an extremal Jacobian on the positive axis; CSV with root footer."""

    def go():
        scan = jacobian_roots_scan(kind, r_max, samples, c=c, b1=b1, lam=lam)
        lines = ["r,jacobian"]
        lines += [f"{_csv_number(x)},{_csv_number(j)}" for x, j in zip(scan.r, scan.jacobian)]
        if scan.roots:
            lines += [f"# root,{_csv_number(x)}" for x in scan.roots]
        else:
            lines.append("# no roots")
        _emit("\n".join(lines) + "\n", out)

    _run(go)


@main.command()
@click.option("--suite", required=True, type=click.Choice(sorted(SUITES) + ["all"]))
def verify(suite):
    """Run a verification suite: table on stderr, JSON on stdout."""
    checks = run_suite(suite)
    width = max(len(c.name) for c in checks)
    for c in checks:
        click.echo(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<{width}}  {c.detail}", err=True)
    ok = all(c.passed for c in checks)
    failed = [c.name for c in checks if not c.passed]
    if failed:
        click.echo("failing: " + ", ".join(failed), err=True)
    _emit_json({"suite": suite, "passed": ok, "checks": [c.as_dict() for c in checks]})
    sys.exit(0 if ok else EXIT_VERIFY)


@main.command()
@click.option("--kind", required=True, type=click.Choice([k.value for k in ExtremalKind]))
@click.option("--truncation", type=int, default=100, show_default=True)
@click.option("--epsilon", type=float, default=1.0, show_default=True, help="+1 or -1 (sharp-df kinds).")
@click.option("--c", type=float, default=None)
@click.option("--b1", type=float, default=0.0, show_default=True)
@click.option("--lambda", "lam", type=float, default=0.0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def extremal(kind, truncation, epsilon, c, b1, lam, out):
    """Write an extremal mapping as a coefficient file."""

    def go():
        f = build_extremal(kind, truncation, epsilon=epsilon, c=c, b1=b1, lam=lam)
        _emit(coeff_file.dumps(f), out)

    _run(go)


if __name__ == "__main__":
    main()
