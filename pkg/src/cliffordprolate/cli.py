"""Command-line front end.

Subcommands: eigs, spectrum, radial, field, verify, accumulate, legendre.
Output is CSV (RFC 4180, '.' decimal separator) or JSON (UTF-8 array of
flat records); all numbers are printed with 17 significant digits so
repeated runs are byte-identical and values round-trip.

Exit codes: 0 success; 1 verification threshold exceeded; 2 invalid
arguments; 3 convergence failure.
"""

from __future__ import annotations

import json
import sys

import click
import numpy as np

from .accumulation import limit_value, partial_sum
from .galerkin import ConvergenceError, solve_radial
from .legendre import radial_sequence
from .monogenics import dim_monogenic
from .operators import verify as op_verify
from .prolate import eval_field_coeffs, eval_radial, make_cpswf
from .special import default_tol


def _fmt(v) -> str:
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def _emit(columns, rows, fmt: str, out) -> None:
    if fmt == "csv":
        out.write(",".join(columns) + "\r\n")
        for row in rows:
            out.write(",".join(_fmt(v) for v in row) + "\r\n")
    else:
        parts = []
        for row in rows:
            fields = []
            for c, v in zip(columns, row):
                if isinstance(v, (float, np.floating)):
                    fields.append(f'"{c}": {format(float(v), ".17g")}')
                elif isinstance(v, (int, np.integer)):
                    fields.append(f'"{c}": {int(v)}')
                else:
                    fields.append(f'"{c}": {json.dumps(v)}')
            parts.append("{" + ", ".join(fields) + "}")
        out.write("[\n" + ",\n".join(parts) + "\n]\n")


_format_opt = click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                           default="csv", show_default=True)
_output_opt = click.option("--output", type=click.Path(writable=True), default=None,
                           help="Output path (default stdout).")


def _open_out(path):
    return open(path, "w", newline="") if path else sys.stdout


def _validate(cond: bool, msg: str) -> None:
    if not cond:
        raise click.UsageError(msg)


@click.group()
def main():
    """Clifford prolate spheroidal wave functions on the unit ball."""


@main.command()
@click.option("--m", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--c", type=float, required=True)
@click.option("--count", type=int, required=True, help="Number of orders n = 0..count-1.")
@click.option("--tol", type=float, default=None)
@_format_opt
@_output_opt
def eigs(m, k, c, count, tol, fmt, output):
    """Differential and operator eigenvalues for orders n = 0..count-1.

    At c = 0 only chi is meaningful; lambda and |mu| are reported as 0.
    """
    _validate(2 <= m <= 8, "m must be in [2, 8]")
    _validate(k >= 0 and count >= 1 and c >= 0, "require k >= 0, count >= 1, c >= 0")
    tol = default_tol() if tol is None else tol
    _validate(0 < tol <= 1e-4, "tol must be in (0, 1e-4]")
    rows = []
    try:
        for n in range(count):
            if c == 0:
                pair = solve_radial("even" if n % 2 == 0 else "odd", k, m, 0.0, n // 2, tol)
                rows.append([n, k, pair.chi, 0.0, 0.0, (n + k) % 4])
            else:
                psi = make_cpswf(n, k, m, c, tol)
                rows.append([n, k, psi.chi, psi.lam, abs(psi.mu), (n + k) % 4])
    except ConvergenceError as exc:
        click.echo(f"convergence failure: {exc}", err=True)
        sys.exit(3)
    with _open_out(output) as out:
        _emit(["n", "k", "chi", "lambda", "abs_mu", "phase_exponent"], rows, fmt, out)


@main.command()
@click.option("--m", type=int, required=True)
@click.option("--kmax", type=int, required=True)
@click.option("--nmax", type=int, required=True)
@click.option("--c", type=float, required=True)
@click.option("--tol", type=float, default=None)
@_format_opt
@_output_opt
def spectrum(m, kmax, nmax, c, tol, fmt, output):
    """Table of (n, k, chi, lambda, |mu|) sorted by (k, n)."""
    _validate(2 <= m <= 8, "m must be in [2, 8]")
    _validate(kmax >= 0 and nmax >= 0 and c > 0, "require kmax, nmax >= 0 and c > 0")
    rows = []
    try:
        for k in range(kmax + 1):
            for n in range(nmax + 1):
                psi = make_cpswf(n, k, m, c, tol)
                rows.append([n, k, psi.chi, psi.lam, abs(psi.mu)])
    except ConvergenceError as exc:
        click.echo(f"convergence failure: {exc}", err=True)
        sys.exit(3)
    with _open_out(output) as out:
        _emit(["n", "k", "chi", "lambda", "abs_mu"], rows, fmt, out)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--c", type=float, required=True)
@click.option("--grid", type=int, default=100, show_default=True)
@click.option("--tol", type=float, default=None)
@_format_opt
@_output_opt
def radial(n, k, m, c, grid, tol, fmt, output):
    """Radial part of psi_n^k sampled on an equispaced r-grid in [0, 1]."""
    _validate(2 <= m <= 8, "m must be in [2, 8]")
    _validate(n >= 0 and k >= 0 and c > 0 and grid >= 2,
              "require n, k >= 0, c > 0, grid >= 2")
    try:
        psi = make_cpswf(n, k, m, c, tol)
    except ConvergenceError as exc:
        click.echo(f"convergence failure: {exc}", err=True)
        sys.exit(3)
    r = np.linspace(0.0, 1.0, grid)
    vals = eval_radial(psi, r)
    rows = [[float(ri), float(vi)] for ri, vi in zip(r, vals)]
    with _open_out(output) as out:
        _emit(["r", "value"], rows, fmt, out)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--i", "idx", type=int, default=1, show_default=True,
              help="Monogenic basis index, 1..d_k.")
@click.option("--m", type=int, required=True)
@click.option("--c", type=float, required=True)
@click.option("--grid", type=int, default=50, show_default=True,
              help="Points per axis on [-1, 1]^2 (x3 = 0 slice when m = 3).")
@click.option("--tol", type=float, default=None)
@_format_opt
@_output_opt
def field(n, k, idx, m, c, grid, tol, fmt, output):
    """Full Clifford-valued field on a planar grid, one column pair per blade.

    Points outside the closed unit ball are omitted.
    """
    _validate(m in (2, 3), "field requires m in {2, 3}")
    _validate(n >= 0 and k >= 0 and c > 0 and grid >= 2,
              "require n, k >= 0, c > 0, grid >= 2")
    _validate(1 <= idx <= dim_monogenic(m, k), "basis index i out of range")
    try:
        psi = make_cpswf(n, k, m, c, tol)
    except ConvergenceError as exc:
        click.echo(f"convergence failure: {exc}", err=True)
        sys.exit(3)
    ax = np.linspace(-1.0, 1.0, grid)
    pts = []
    for x1 in ax:
        for x2 in ax:
            if x1 * x1 + x2 * x2 <= 1.0:
                pts.append((x1, x2, 0.0)[:m])
    pts = np.array(pts)
    vals = eval_field_coeffs(psi, idx, pts)
    cols = [f"x{j + 1}" for j in range(m)]
    for mask in range(1 << m):
        name = "e" + "".join(str(j + 1) for j in range(m) if mask >> j & 1) if mask else "e0"
        cols += [f"{name}_re", f"{name}_im"]
    rows = []
    for p, v in zip(pts, vals):
        row = [float(x) for x in p]
        for mask in range(1 << m):
            row += [float(v[mask].real), float(v[mask].imag)]
        rows.append(row)
    with _open_out(output) as out:
        _emit(cols, rows, fmt, out)


def _parse_k_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise click.UsageError("--k must be an integer or a range like 0..2")
        _validate(0 <= lo <= hi, "--k range must satisfy 0 <= lo <= hi")
        return list(range(lo, hi + 1))
    try:
        k = int(text)
    except ValueError:
        raise click.UsageError("--k must be an integer or a range like 0..2")
    _validate(k >= 0, "--k must be nonnegative")
    return [k]


@main.command()
@click.option("--m", type=int, required=True)
@click.option("--c", type=float, required=True)
@click.option("--k", "kspec", type=str, required=True,
              help="Single k or inclusive range like 0..2.")
@click.option("--nmax", type=int, required=True)
@click.option("--threshold", type=float, default=1e-6, show_default=True,
              help="Pass/fail bound on ratio_spread and residual.")
@click.option("--tol", type=float, default=None)
@_format_opt
@_output_opt
def verify(m, c, kspec, nmax, threshold, tol, fmt, output):
    """Verify the operator eigenrelations; exit 1 if any check fails."""
    _validate(m in (2, 3), "verify requires m in {2, 3}")
    _validate(c > 0 and nmax >= 0, "require c > 0 and nmax >= 0")
    ks = _parse_k_range(kspec)
    rows = []
    ok = True
    try:
        for k in ks:
            for n in range(nmax + 1):
                psi = make_cpswf(n, k, m, c, tol)
                rep = op_verify(psi)
                passed = rep.ratio_spread <= threshold and rep.residual <= threshold
                ok = ok and passed
                rows.append([n, k, abs(rep.mu_est), rep.lambda_est,
                             rep.ratio_spread, rep.residual,
                             "pass" if passed else "fail"])
    except ConvergenceError as exc:
        click.echo(f"convergence failure: {exc}", err=True)
        sys.exit(3)
    with _open_out(output) as out:
        _emit(["n", "k", "abs_mu_est", "lambda_est", "ratio_spread",
               "residual", "status"], rows, fmt, out)
    if not ok:
        sys.exit(1)


@main.command()
@click.option("--m", type=int, required=True)
@click.option("--c", type=float, required=True)
@click.option("--k", "kmax", "--K", type=int, required=True,
              help="Maximum monogenic degree K.")
@click.option("--n", "nmax", "--N", type=int, required=True,
              help="Maximum radial order per parity N.")
@click.option("--points", type=int, default=64, show_default=True)
@click.option("--tol", type=float, default=None)
@_format_opt
@_output_opt
def accumulate(m, c, kmax, nmax, points, tol, fmt, output):
    """Spectrum-accumulation partial sum on an r-grid, with the limit column."""
    _validate(m in (2, 3), "accumulate requires m in {2, 3}")
    _validate(c > 0 and kmax >= 0 and nmax >= 0 and points >= 2,
              "require c > 0, K, N >= 0, points >= 2")
    r = np.linspace(0.0, 1.0, points)
    try:
        acc = partial_sum(m, c, kmax, nmax, r ** 2, tol)
    except ConvergenceError as exc:
        click.echo(f"convergence failure: {exc}", err=True)
        sys.exit(3)
    lim = limit_value(m, c)
    rows = [[float(ri), float(gi), lim] for ri, gi in zip(r, acc.values)]
    with _open_out(output) as out:
        _emit(["r", "G", "limit"], rows, fmt, out)


@main.command()
@click.option("--m", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--n", "nmax", "--N", type=int, required=True,
              help="Maximum radial order N.")
@_format_opt
@_output_opt
def legendre(m, k, nmax, fmt, output):
    """Monomial coefficients (in t = |x|^2) of the radial parts p_N, q_N."""
    _validate(2 <= m <= 8, "m must be in [2, 8]")
    _validate(k >= 0 and 0 <= nmax <= 64, "require k >= 0 and 0 <= N <= 64")
    ps, qs = radial_sequence(k, m, nmax)
    rows = []
    for kind, seq in (("p", ps), ("q", qs)):
        for order, poly in enumerate(seq):
            for power, coeff in enumerate(poly.coeffs):
                rows.append([kind, order, power, float(coeff)])
    with _open_out(output) as out:
        _emit(["kind", "order", "power", "coefficient"], rows, fmt, out)


if __name__ == "__main__":
    main()
