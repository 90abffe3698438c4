"""
Command-line interface.

Exit codes: 0 success, 1 failed verification, 2 usage error, 3 domain
error, 4 I/O error.  Every command accepts ``--json``.
"""

import csv
import json
import math
import sys
import time

import click
import numpy as np

from . import extremal, lattice, moduli, verify
from .constants import all_constants
from .errors import DomainError
from .theta import jacobi_theta, jacobi_theta_t

EXIT_VERIFY = 1
EXIT_DOMAIN = 3
EXIT_IO = 4

SWEEP_VARIABLES = ("t", "alpha", "k_comp", "m_comp")
SWEEP_QUANTITIES = ("A", "B", "ratio", "k", "m", "kernel")


class DomainFailure(click.ClickException):
    exit_code = EXIT_DOMAIN


class IOFailure(click.ClickException):
    exit_code = EXIT_IO


def format_value(v):
    """
    Fixed 15 decimals for moderate magnitudes, 15-digit mantissa otherwise,
    so every printed binary64 value round-trips to within an ulp or two.
    """
    v = float(v)
    if v == 0.0:
        return "0"
    if not math.isfinite(v):
        return repr(v)
    if 1e-3 <= abs(v) < 1e4:
        return f"{v:.15f}"
    return f"{v:.15e}"


def _emit(as_json, payload, lines):
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            click.echo(line)


def parse_lattice(spec):
    """
    ``square``, ``hex``, ``rect:<alpha>`` or ``gen:a,b,c,d`` where the
    generator is read row-major as [[a, b], [c, d]].
    """
    if spec == "square":
        return lattice.square_lattice()
    if spec == "hex":
        return lattice.hexagonal_lattice()
    kind, _, arg = spec.partition(":")
    try:
        if kind == "rect" and arg:
            return lattice.rectangular_lattice(float(arg))
        if kind == "gen" and arg:
            vals = [float(v) for v in arg.split(",")]
            if len(vals) == 4:
                return lattice.Lattice2D(np.array(vals).reshape(2, 2))
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise click.BadParameter(f"cannot parse {spec!r}", param_hint="--lattice") from exc
    raise click.BadParameter(
        f"expected square, hex, rect:<alpha> or gen:a,b,c,d, got {spec!r}",
        param_hint="--lattice",
    )


def _extremal_report(spec, t):
    if spec == "square" or spec.startswith("rect:"):
        alpha = 1.0 if spec == "square" else float(spec[5:])
        # validate the spec the same way as any other lattice
        parse_lattice(spec)
        lo = extremal.rect_min_temp(alpha, t)
        hi = extremal.rect_max_temp(alpha, t)
        min_locs = [lo.location.as_tuple()]
    elif spec == "hex":
        lo, hi = extremal.hex_extremal_temps(t)
        min_locs = lo.diagnostics["min_locations"]
    else:
        lat = parse_lattice(spec)
        lo = extremal.general_min_temp(lat, t)
        hi = extremal.general_max_temp(lat, t)
        min_locs = [(x, y) for x, y, _ in lo.diagnostics["ties"]]
    return lo.value, hi.value, min_locs, [hi.location.as_tuple()]


@click.group()
def cli():
    """Theta functions, elliptic moduli and extremal heat-kernel temperatures on flat tori."""


@cli.command("theta")
@click.option("--j", "j", type=click.IntRange(1, 4), required=True, help="Theta index 1..4.")
@click.option("--z", type=float, required=True, help="Argument; theta_j(pi z).")
@click.option("--t", type=float, default=None, help="Time, nome q = exp(-pi t).")
@click.option("--q", type=float, default=None, help="Nome in (0, 1).")
@click.option("--json", "as_json", is_flag=True)
def theta_cmd(j, z, t, q, as_json):
    """Evaluate a Jacobi theta function."""
    if (t is None) == (q is None):
        raise click.UsageError("give exactly one of --t or --q")
    try:
        v = jacobi_theta_t(j, z, t) if t is not None else jacobi_theta(j, z, q)
    except DomainError as exc:
        raise DomainFailure(str(exc)) from exc
    _emit(as_json, {"j": j, "z": z, "t": t, "q": q, "value": v}, [format_value(v)])


@cli.command("extremal")
@click.option("--lattice", "spec", required=True, help="square | hex | rect:<alpha> | gen:a,b,c,d")
@click.option("--t", type=float, default=1.0, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def extremal_cmd(spec, t, as_json):
    """Minimal and maximal temperature of a torus."""
    try:
        a, b, min_locs, max_locs = _extremal_report(spec, t)
    except DomainError as exc:
        raise DomainFailure(str(exc)) from exc
    payload = {
        "lattice": spec,
        "t": t,
        "A": a,
        "B": b,
        "ratio": a / b,
        "min_locations": [list(p) for p in min_locs],
        "max_locations": [list(p) for p in max_locs],
    }

    def locs(ps):
        return " ".join(f"({format_value(x)}, {format_value(y)})" for x, y in ps)

    _emit(
        as_json,
        payload,
        [
            f"A {format_value(a)}",
            f"B {format_value(b)}",
            f"ratio {format_value(a / b)}",
            f"min_at {locs(min_locs)}",
            f"max_at {locs(max_locs)}",
        ],
    )


def sweep_value(variable, quantity, x, spec="square", t=1.0, point=(0.5, 0.5)):
    """One row of a sweep.  ``spec``, ``t`` and ``point`` fill the fixed parameters."""
    if variable in ("k_comp", "m_comp"):
        kc = x if variable == "k_comp" else math.sqrt(x)
        if quantity in ("A", "B", "ratio"):
            p = moduli.rect_temperatures_from_modulus(kc)
            return {"A": p.min_temp, "B": p.max_temp, "ratio": p.ratio}[quantity]
        mc = kc * kc if variable == "k_comp" else x
        if quantity == "k":
            return math.sqrt((1.0 - kc) * (1.0 + kc))
        return 1.0 - mc
    if variable == "t":
        t = x
        if quantity in ("k", "m"):
            q = moduli.modulus_from_t(t)
            return q.k if quantity == "k" else q.m
    else:
        if quantity in ("k", "m"):
            q = moduli.modulus_from_t(t * x * x)
            return q.k if quantity == "k" else q.m
        spec = f"rect:{x!r}"
    if quantity == "kernel":
        return lattice.heat_kernel(parse_lattice(spec), point, t)
    a, b, _, _ = _extremal_report(spec, t)
    return {"A": a, "B": b, "ratio": a / b}[quantity]


def _validate_sweep(variable, start, stop, steps, quantity):
    if not start < stop:
        raise click.UsageError("--start must be smaller than --stop")
    if steps < 2:
        raise click.UsageError("--steps must be at least 2")
    if quantity == "kernel" and variable in ("k_comp", "m_comp"):
        raise click.UsageError(f"quantity 'kernel' is not defined for variable {variable!r}")


@cli.command("sweep")
@click.option("--variable", type=click.Choice(SWEEP_VARIABLES), required=True)
@click.option("--start", type=float, required=True)
@click.option("--stop", type=float, required=True)
@click.option("--steps", type=int, required=True, help="Number of rows, endpoints included.")
@click.option("--quantity", type=click.Choice(SWEEP_QUANTITIES), required=True)
@click.option("--output", type=click.Path(dir_okay=False), required=True, help="CSV path, '-' for stdout.")
@click.option("--lattice", "spec", default="square", show_default=True, help="Torus for t sweeps.")
@click.option("--t", type=float, default=1.0, show_default=True, help="Time when not swept.")
@click.option("--point", nargs=2, type=float, default=(0.5, 0.5), show_default=True)
@click.option("--json", "as_json", is_flag=True)
def sweep_cmd(variable, start, stop, steps, quantity, output, spec, t, point, as_json):
    """Tabulate a quantity over a range and write it as CSV."""
    _validate_sweep(variable, start, stop, steps, quantity)
    xs = np.linspace(start, stop, steps)
    try:
        rows = [(float(x), sweep_value(variable, quantity, float(x), spec, t, tuple(point))) for x in xs]
    except DomainError as exc:
        raise DomainFailure(str(exc)) from exc
    try:
        if output == "-":
            _write_csv(sys.stdout, variable, quantity, rows)
        else:
            with open(output, "w", encoding="utf-8", newline="") as fh:
                _write_csv(fh, variable, quantity, rows)
    except OSError as exc:
        raise IOFailure(f"cannot write {output}: {exc.strerror}") from exc
    if as_json:
        _emit(True, {"output": output, "rows": len(rows), "variable": variable, "quantity": quantity}, [])
    elif output != "-":
        click.echo(f"wrote {len(rows)} rows to {output}", err=True)


def _write_csv(fh, variable, quantity, rows):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow([variable, quantity])
    for x, v in rows:
        w.writerow([format_value(x), format_value(v)])


@cli.command("verify")
@click.option("--suite", type=click.Choice(verify.suite_names()), default="all", show_default=True)
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=verify.DEFAULT_SEED, show_default=True)
@click.option(
    "--inject-failure",
    "inject",
    default=None,
    metavar="CHECK",
    help="Perturb the residual of CHECK to exercise the failure path.",
)
@click.option("--json", "as_json", is_flag=True)
def verify_cmd(suite, seed, inject, as_json):
    """Run the numerical self-checks; exit 1 if any hard check fails."""
    t0 = time.perf_counter()
    results = verify.run_suite(suite, seed=seed, inject=inject)
    elapsed = time.perf_counter() - t0
    failed = verify.hard_failures(results)
    if as_json:
        payload = {
            "suite": suite,
            "seed": seed,
            "elapsed_s": elapsed,
            "passed": not failed,
            "checks": [
                {
                    "name": r.qualified_name,
                    "residual": r.residual,
                    "tol": r.tol,
                    "hard": r.hard,
                    "passed": r.passed,
                }
                for r in results
            ],
        }
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        width = max(len(r.qualified_name) for r in results)
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            if not r.hard:
                status = "OBS " + ("ok" if r.passed else "exceeded")
            click.echo(f"{status:<4} {r.qualified_name:<{width}} residual={r.residual:.3e} tol={r.tol:.0e}")
        click.echo(f"{len(results) - len(failed)}/{len(results)} checks passed in {elapsed:.2f}s")
    if failed:
        names = ", ".join(r.qualified_name for r in failed)
        click.echo(f"failed: {names}", err=True)
        sys.exit(EXIT_VERIFY)


@cli.command("constants")
@click.option("--json", "as_json", is_flag=True)
def constants_cmd(as_json):
    """Named constants with their cross-route residuals."""
    cs = all_constants()
    payload = [
        {
            "name": c.name,
            "value": c.value,
            "reciprocal": c.reciprocal,
            "max_residual": c.max_residual,
            "status": c.status,
            "routes": dict(c.routes),
        }
        for c in cs
    ]
    lines = [
        f"{c.name} {format_value(c.value)} residual={c.max_residual:.1e} [{c.status}]" for c in cs
    ]
    _emit(as_json, payload, lines)


def main(argv=None):
    cli.main(args=argv, prog_name="torusheat")


if __name__ == "__main__":
    main()
