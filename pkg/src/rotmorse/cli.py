"""Command-line front end.

Exit codes: 0 success, 1 I/O or parse error, 2 usage error, 3 tolerance
breach, 4 solver failure or unbound state.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import oracle, spectrum
from .io import MoleculeFileError, load_molecule
from .units import ev_to_cm1

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3
EXIT_SOLVER = 4


@dataclass(frozen=True)
class SpectrumRow:
    n: int
    l: int
    E_nu: float | None
    E_oracle: float | None = None
    status: str = "ok"

    @property
    def delta(self) -> float | None:
        if self.E_nu is None or self.E_oracle is None:
            return None
        return self.E_nu - self.E_oracle


def _int_list(text: str) -> list[int]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a non-empty comma-separated list")
    try:
        values = [int(t) for t in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("quantum numbers must be non-negative")
    return values


def spectrum_rows(p, ns, ls) -> list[SpectrumRow]:
    rows = []
    for n in ns:
        for l in ls:
            try:
                rows.append(SpectrumRow(n, l, spectrum.energy_level(p, n, l).energy))
            except spectrum.UnboundStateError:
                rows.append(SpectrumRow(n, l, None, status="unbound"))
    return rows


def validation_rows(p, ns, ls, tol=1e-7) -> list[SpectrumRow]:
    rows = []
    for row in spectrum_rows(p, ns, ls):
        try:
            res = oracle.solve_level(p, row.n, row.l, tol=tol)
        except oracle.LevelNotBoundError:
            rows.append(SpectrumRow(row.n, row.l, row.E_nu, None, "unbound" if row.E_nu is None else "solver-failure"))
            continue
        if row.E_nu is None:
            status = "unbound"
        else:
            status = "ok" if res.converged else "solver-failure"
        rows.append(SpectrumRow(row.n, row.l, row.E_nu, res.energy if res.converged else None, status))
    return rows


def _convert(x, unit):
    if x is None:
        return None
    return float(ev_to_cm1(x)) if unit == "cm1" else x


def format_rows(rows, fmt="text", unit="ev", with_oracle=False, digits=4) -> str:
    suffix = "cm1" if unit == "cm1" else "eV"
    cols = [f"E_nu_{suffix}"]
    if with_oracle:
        cols += [f"E_oracle_{suffix}", f"delta_{suffix}"]

    def values(row):
        out = [_convert(row.E_nu, unit)]
        if with_oracle:
            out += [_convert(row.E_oracle, unit), _convert(row.delta, unit)]
        return out

    markers = ["unbound", "failed", ""]

    def cells(row):
        return [markers[i] if v is None else f"{v:.{digits}f}" for i, v in enumerate(values(row))]

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "l", *cols])
        for row in rows:
            writer.writerow([row.n, row.l, *cells(row)])
        return buf.getvalue()
    if fmt == "json":
        records = []
        for row in rows:
            rec = {"n": row.n, "l": row.l}
            for col, v in zip(cols, values(row)):
                rec[col] = None if v is None else round(v, digits)
            rec["status"] = row.status
            records.append(rec)
        return json.dumps(records, indent=2) + "\n"
    width = max(14, digits + 8)
    lines = [f"{'n':>3} {'l':>4}" + "".join(f"{c:>{width}}" for c in cols)]
    for row in rows:
        lines.append(f"{row.n:>3} {row.l:>4}" + "".join(f"{c:>{width}}" for c in cells(row)))
    return "\n".join(lines) + "\n"


def _emit(text, output):
    if output:
        with open(output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(args) -> int:
    p = load_molecule(args.molecule)
    rows = spectrum_rows(p, args.n, args.l)
    _emit(format_rows(rows, args.format, args.unit), args.output)
    return EXIT_SOLVER if any(r.status != "ok" for r in rows) else EXIT_OK


def cmd_validate(args) -> int:
    p = load_molecule(args.molecule)
    rows = validation_rows(p, args.n, args.l)
    _emit(format_rows(rows, args.format, args.unit, with_oracle=True, digits=6), args.output)
    if any(r.status != "ok" for r in rows):
        return EXIT_SOLVER
    if any(abs(r.delta) > args.tol_ev for r in rows):
        return EXIT_TOLERANCE
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    if not args.r_min < args.r_max or args.r_min <= 0:
        print("error: need 0 < --r-min < --r-max", file=sys.stderr)
        return EXIT_USAGE
    if args.n < 0 or args.l < 0:
        print("error: --n and --l must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    if args.samples < 2:
        print("error: --samples must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    p = load_molecule(args.molecule)
    try:
        wf = spectrum.radial_wavefunction(p, args.n, args.l)
    except spectrum.UnboundStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    r = np.linspace(args.r_min, args.r_max, args.samples)
    values = wf(r)
    lines = [
        f"# molecule={p.name} n={args.n} l={args.l}",
        f"# energy_eV={wf.level.energy:.10f} eps1={wf.level.eps1:.10f} eps3={wf.eps3:.10f}",
        f"# laguerre_order={wf.laguerre_order:.10f} log_norm={wf.log_norm:.10f} norm_method=quadrature",
        "r_angstrom,R",
    ]
    lines += [f"{ri:.8f},{vi:.12e}" for ri, vi in zip(r, values)]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotmorse",
        description="Rotating Morse oscillator spectra (Pekeris + Nikiforov-Uvarov) with a Numerov cross-check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, grid=True):
        sp.add_argument("--molecule", required=True, help="JSON molecule file")
        if grid:
            sp.add_argument("--n", type=_int_list, required=True, help="vibrational quantum numbers, e.g. 0,5,7")
            sp.add_argument("--l", type=_int_list, required=True, help="rotational quantum numbers, e.g. 0,5,10")
            sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
            sp.add_argument("--unit", choices=("ev", "cm1"), default="ev", help="energy display unit")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    sp = sub.add_parser("spectrum", help="analytic energy table")
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("validate", help="analytic energies against the Numerov oracle")
    common(sp)
    sp.add_argument("--tol-ev", type=float, default=0.01)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("wavefunction", help="sample a normalized radial function")
    common(sp, grid=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--r-min", type=float, default=0.5)
    sp.add_argument("--r-max", type=float, default=4.0)
    sp.add_argument("--samples", type=int, default=1000)
    sp.set_defaults(func=cmd_wavefunction)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, MoleculeFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
