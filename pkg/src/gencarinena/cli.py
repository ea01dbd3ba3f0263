"""Command-line interface: ``gencarinena {spectrum,tabulate,verify}``.

Every command writes one record, as CSV (header then rows) or as a single
JSON object ``{schema_version, command, params, rows}``. Exact rationals
are written as ``"num/den"`` strings and floats with 17 significant digits.

Options may also come from a JSON file named by ``$GENCARINENA_CONFIG``.
Top-level keys apply to every command, a nested object keyed by the command
name overrides them, and command-line flags override both.

Exit status: 0 success, 1 a verification check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from . import carinena
from .carinena import Domain, InadmissibleLevelError
from .hermite import (hermite, instantiate, product_expansion, pseudo_hermite,
                      susy_sum_expansion)

SCHEMA_VERSION = "1"
CONFIG_ENV = "GENCARINENA_CONFIG"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS: dict[str, Any] = {
    "format": "csv",
    "n_max": None,
    "x_min": -5.0,
    "x_max": 5.0,
    "samples": 101,
    "tol": None,
    "suite": "all",
    "p_max": None,
    "m_max": 4,
    "include_inadmissible": False,
}


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    p: int | None
    params: dict
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        obj = {
            "schema_version": self.schema_version,
            "command": self.command,
            "params": self.params,
            "rows": [dict(zip(self.columns, (_json_cell(c) for c in row)))
                     for row in self.rows],
        }
        return json.dumps(obj, indent=2, allow_nan=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_csv_cell(c) for c in row])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()


def exact(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} in output")
    return format(x, ".17g")


def _csv_cell(c) -> str:
    if isinstance(c, bool):
        return "true" if c else "false"
    if isinstance(c, float):
        return _fmt_float(c)
    return str(c)


def _json_cell(c):
    if isinstance(c, float):
        return float(_fmt_float(c))
    return c


# -- commands -----------------------------------------------------------------

def _require_p(p):
    if p is None:
        raise UsageError("--p is required")
    if p < 1:
        raise UsageError(f"--p must be a positive integer, got {p}")


def poly_cell(poly) -> str:
    """Space-separated exact coefficients, lowest power first."""
    return " ".join(exact(c) for c in poly.coeffs)


def cmd_spectrum(p: int, n_max: int, include_inadmissible: bool = False) -> OutputRecord:
    _require_p(p)
    if n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    from .verify.checks import SQRT_PI, numeric_norm_squared

    columns = ["n", "energy_exact", "energy", "admissible",
               "norm_sq_coeff_exact", "norm_sq", "pn_coeffs"]
    rec = OutputRecord("spectrum", p, {"p": p, "n_max": n_max,
                                       "include_inadmissible": include_inadmissible}, columns)
    for lvl in carinena.spectrum(p, n_max):
        if not lvl.admissible:
            if include_inadmissible:
                rec.rows.append([lvl.n, exact(lvl.energy), float(lvl.energy), False, "", "", ""])
            continue
        if lvl.norm_sq_coeff is not None:
            c_exact = exact(lvl.norm_sq_coeff)
            n_sq = float(lvl.norm_sq_coeff) / SQRT_PI
        else:
            c_exact = "numeric"
            n_sq = numeric_norm_squared(p, lvl.n)
        pn = carinena.pn_polynomial(p, lvl.n)
        rec.rows.append([lvl.n, exact(lvl.energy), float(lvl.energy), True,
                         c_exact, n_sq, poly_cell(pn)])
    return rec


def _grid(x_min: float, x_max: float, samples: int) -> list[float]:
    if samples < 2:
        raise UsageError("--samples must be at least 2")
    if not x_min < x_max:
        raise UsageError("need --x-min < --x-max")
    return [float(v) for v in np.linspace(x_min, x_max, samples)]


def cmd_tabulate(p: int, what: str, n: int | None, xs: list[float]) -> OutputRecord:
    _require_p(p)
    model = carinena.potential(p)
    if model.domain is Domain.HALF_LINE and min(xs) <= 0:
        raise UsageError(f"p={p} is defined on (0, inf); sample points must be > 0")
    params = {"p": p, "what": what, "n": n, "x": [_json_cell(x) for x in xs]}
    rec = OutputRecord("tabulate", p, params, ["x", "value"])
    if what == "potential":
        for x in xs:
            rec.rows.append([x, float(model.potential(Fraction(x)))])
    elif what == "eigenfunction":
        if n is None:
            raise UsageError("--n is required for --what eigenfunction")
        from .verify.checks import normalization

        try:
            ef = carinena.eigenfunction(p, n)
        except InadmissibleLevelError as exc:
            raise UsageError(str(exc)) from exc
        norm = normalization(p, n)
        prof = ef.wave.profile
        for x in xs:
            rec.rows.append([x, norm * float(prof(Fraction(x))) * math.exp(-0.5 * x * x)])
    else:
        raise UsageError(f"unknown --what {what!r}")
    return rec


VERIFY_COLUMNS = ["suite", "check", "p", "index", "value", "tolerance", "passed"]
SUITES = ("residuals", "identities", "appendix-a", "orthonormality", "fd-oracle")


def _suite_residuals(rows, ps, n_max):
    from .verify.checks import hamiltonian_residual

    for p in ps:
        for n in range(n_max + 1):
            if not carinena.is_admissible(p, n):
                continue
            rep = hamiltonian_residual(p, n)
            rows.append(["residuals", "hamiltonian_residual", p, n,
                         0.0 if rep.exact_zero else 1.0, 0.0, rep.exact_zero])


def _suite_identities(rows, p_max):
    for p in range(p_max + 1):
        hp = pseudo_hermite(p)
        dhp = hp.derivative()
        for k in range(p_max + 1):
            hk = hermite(k)
            ok1 = instantiate(product_expansion(p, k)) == hp * hk
            rows.append(["identities", "product_expansion", p, k,
                         0.0 if ok1 else 1.0, 0.0, ok1])
            ok2 = instantiate(susy_sum_expansion(p, k)) == hp * hermite(k + 1) + dhp * hk
            rows.append(["identities", "susy_sum_expansion", p, k,
                         0.0 if ok2 else 1.0, 0.0, ok2])


def _suite_appendix_a(rows, m_max, tol):
    from .verify.checks import (SQRT_PI, appendix_a_quadrature, appendix_a_value,
                                discriminate_ground_state)

    for m in range(m_max + 1):
        try:
            coeff = appendix_a_value(m)
            rec_ok = True
        except ArithmeticError:
            coeff, rec_ok = None, False
        rows.append(["appendix-a", "recursion_closed_form", 2 * m, m,
                     0.0 if rec_ok else 1.0, 0.0, rec_ok])
        if coeff is None:
            continue
        val, _ = appendix_a_quadrature(m)
        rel = abs(val / (float(coeff) * SQRT_PI) - 1.0)
        rows.append(["appendix-a", "quadrature_I2m", 2 * m, m, rel, tol, rel <= tol])
        if m >= 1:
            d = discriminate_ground_state(m)
            rows.append(["appendix-a", "N0_sq_matches_2^(2m)(2m)!", 2 * m, m,
                         d.rel_err_4m, tol, d.rel_err_4m <= tol])
            # the 2^m candidate must be off by the factor 2^m
            ratio_ok = d.ratio_to_2m >= 2.0 ** m * (1.0 - tol)
            rows.append(["appendix-a", "N0_sq_ratio_to_2^m(2m)!", 2 * m, m,
                         d.ratio_to_2m, 2.0 ** m, ratio_ok])


def _suite_orthonormality(rows, ps, n_max, tol):
    from .verify.checks import orthonormality_matrix

    for p in ps:
        levels = [n for n in range(n_max + 1) if carinena.is_admissible(p, n)]
        if not levels:
            continue
        gram = orthonormality_matrix(p, levels)
        dev = float(np.max(np.abs(gram - np.eye(len(levels)))))
        rows.append(["orthonormality", "max_gram_deviation", p, max(levels), dev, tol, dev <= tol])


def _suite_fd(rows, ps, tol, count=5, x_max=12.0, points=8000, delta=0.1):
    from .verify.fd import FdGrid, count_in, fd_spectrum

    for p in ps:
        grid = FdGrid.for_domain(carinena.domain_for(p), x_max, points)
        levels = carinena.admissible_levels(p, count)
        vals = fd_spectrum(p, grid, count, refinement_tol=None)
        for n, v in zip(levels, vals):
            err = abs(v - float(carinena.energy(p, n)))
            rows.append(["fd-oracle", "fd_eigenvalue", p, n, err, tol, err <= tol])
        if p % 2 == 0:
            inside = count_in(p, grid, -2 * p + 1 + delta, 3 - delta)
            rows.append(["fd-oracle", "missing_levels_gap", p, 0, float(inside), 0.0, inside == 0])


def cmd_verify(suite: str, p: int | None, p_max: int | None, n_max: int | None,
               m_max: int, tol: float | None) -> OutputRecord:
    if suite not in SUITES + ("all",):
        raise UsageError(f"unknown suite {suite!r}")
    if p is not None and p < 1:
        raise UsageError(f"--p must be a positive integer, got {p}")
    suites = SUITES if suite == "all" else (suite,)
    params = {"suite": suite, "p": p, "p_max": p_max, "n_max": n_max, "m_max": m_max, "tol": tol}
    rec = OutputRecord("verify", p if p is not None else p_max, params, VERIFY_COLUMNS)

    def p_range(default_max, default_set=None):
        if p is not None:
            return [p]
        if p_max is not None:
            return list(range(1, p_max + 1))
        return default_set or list(range(1, default_max + 1))

    for s in suites:
        if s == "residuals":
            _suite_residuals(rec.rows, p_range(6), 20 if n_max is None else n_max)
        elif s == "identities":
            _suite_identities(rec.rows, 15 if p_max is None else p_max)
        elif s == "appendix-a":
            _suite_appendix_a(rec.rows, m_max, 1e-8 if tol is None else tol)
        elif s == "orthonormality":
            _suite_orthonormality(rec.rows, p_range(4, [2, 3, 4]),
                                  9 if n_max is None else n_max, 1e-8 if tol is None else tol)
        elif s == "fd-oracle":
            _suite_fd(rec.rows, p_range(4), 1e-3 if tol is None else tol)
    return rec


# -- argument handling ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gencarinena",
        description="Exact spectra and checks for the generalized Cariñena oscillators.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("csv", "json"), default=None)

    sp = sub.add_parser("spectrum", help="energy levels, normalizations, P_n coefficients")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--include-inadmissible", action="store_true", default=None)
    common(sp)

    sp = sub.add_parser("tabulate", help="sample the potential or a normalized eigenfunction")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--what", choices=("potential", "eigenfunction"), default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--x", type=float, action="append", default=None,
                    help="explicit sample point (repeatable); overrides the grid")
    sp.add_argument("--x-min", type=float, default=None)
    sp.add_argument("--x-max", type=float, default=None)
    sp.add_argument("--samples", type=int, default=None)
    common(sp)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", choices=SUITES + ("all",), default=None)
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--p-max", type=int, default=None)
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--m-max", type=int, default=None)
    sp.add_argument("--tol", type=float, default=None)
    common(sp)
    return parser


def load_config(command: str) -> dict:
    path = os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config {path} must hold a JSON object")
    merged = {k.replace("-", "_"): v for k, v in data.items() if not isinstance(v, dict)}
    nested = data.get(command, {})
    if isinstance(nested, dict):
        merged.update({k.replace("-", "_"): v for k, v in nested.items()})
    return merged


def resolve(args: argparse.Namespace) -> dict:
    config = load_config(args.command)
    out = {}
    for key, value in vars(args).items():
        if value is None:
            value = config.get(key, DEFAULTS.get(key))
        out[key] = value
    return out


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        opts = resolve(args)
        fmt = opts["format"]
        if fmt not in ("csv", "json"):
            raise UsageError(f"unknown format {fmt!r}")
        if args.command == "spectrum":
            n_max = opts["n_max"]
            if n_max is None:
                n_max = opts["p"] + 10 if opts["p"] else 10
            rec = cmd_spectrum(opts["p"], n_max, bool(opts["include_inadmissible"]))
            status = EXIT_OK
        elif args.command == "tabulate":
            if opts["what"] is None:
                raise UsageError("--what is required")
            xs = opts["x"] or _grid(opts["x_min"], opts["x_max"], opts["samples"])
            rec = cmd_tabulate(opts["p"], opts["what"], opts["n"], [float(v) for v in xs])
            status = EXIT_OK
        else:
            rec = cmd_verify(opts["suite"], opts["p"], opts["p_max"], opts["n_max"],
                             opts["m_max"], opts["tol"])
            passed = rec.columns.index("passed")
            status = EXIT_OK if all(row[passed] for row in rec.rows) else EXIT_FAIL
    except UsageError as exc:
        print(f"gencarinena: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stdout.write(rec.render(fmt))
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
