"""Command-line front end: parameter sweeps and point evaluations as CSV/JSON.

Subcommands: sweep, pt-spectrum, qgrid, quadrature.  Output is
deterministic (fixed 15-significant-digit formatting, '\\n' line
endings) so downstream plots and diffs are stable.  Exit codes:
0 success, 2 usage error, 3 domain error, 4 numerical error.
"""

import argparse
import cmath
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import measures, oracle, witnesses
from .errors import DomainError, NumericalError
from .states import SchmidtState, pair_coherent, quadrature_grid, squeezed_vacuum

_MEASURES = ("corr-entropy", "linear-entropy", "mancini", "duan", "negativity")
_AUDIT_TOL = 1e-10
_AUDIT_N_MAX = 40


def _parse_zeta(text: str) -> complex:
    """Parse 'magnitude,phase' into a complex zeta."""
    try:
        mod_text, phi_text = text.split(",")
        mod, phi = float(mod_text), float(phi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected zeta as 'magnitude,phase', got {text!r}")
    if mod < 0.0:
        raise argparse.ArgumentTypeError(f"zeta magnitude must be >= 0, got {mod}")
    return mod * cmath.exp(1j * phi)


@dataclass
class SweepTable:
    """Rows of (parameter value, measure columns) behind the sweep command."""

    parameter: str
    values: np.ndarray
    columns: list[tuple[str, np.ndarray]]
    settings: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        header = ",".join([self.parameter] + [name for name, _ in self.columns])
        lines = [header]
        for i, v in enumerate(self.values):
            cells = [f"{v:.15g}"] + [f"{col[i]:.15g}" for _, col in self.columns]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "parameter": self.parameter,
            "values": [float(v) for v in self.values],
            "columns": {name: [float(v) for v in col] for name, col in self.columns},
            "settings": self.settings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _measure_value(name: str, state: SchmidtState, m: float) -> float:
    if name == "corr-entropy":
        return measures.correlation_entropy(state)
    if name == "linear-entropy":
        return measures.linear_entropy(state)
    if name == "negativity":
        return measures.negativity(state)
    if name == "mancini":
        return witnesses.mancini_product(state)
    if name == "duan":
        return witnesses.duan_total_variance(state, m).total_variance
    raise DomainError(f"unknown measure {name!r}")


def _state_factory(kind: str, phi: float, tail_tol: float):
    if kind == "pcs":
        return lambda z: pair_coherent(z * cmath.exp(1j * phi), tail_tol)
    return lambda z: squeezed_vacuum(z * cmath.exp(1j * phi))


def _oracle_measure_value(name: str, state: SchmidtState, m: float) -> float:
    """Recompute a sweep measure through the dense/ladder oracle path."""
    if name in ("corr-entropy", "linear-entropy"):
        if state.truncation > _AUDIT_N_MAX:
            raise DomainError(f"audit requires truncation <= {_AUDIT_N_MAX}")
        side = state.truncation + 1
        dense = oracle.dense_density(state).matrix.reshape(side, side, side, side)
        reduced = np.einsum("imjm->ij", dense)
        eigs = oracle.hermitian_eigenvalues(reduced)
        if name == "linear-entropy":
            return float(1.0 - np.sum(eigs * eigs))
        eigs = eigs[eigs > 0.0]
        return float(-2.0 * np.sum(eigs * np.log2(eigs)))
    if name == "negativity":
        if state.truncation > _AUDIT_N_MAX:
            raise DomainError(f"audit requires truncation <= {_AUDIT_N_MAX}")
        eigs = oracle.hermitian_eigenvalues(
            oracle.partial_transpose(oracle.dense_density(state)))
        return float(-np.sum(eigs[eigs < 0.0]))
    if name == "mancini":
        var_u, var_v = oracle.variances_from_ladders(state, 1.0)
        return var_u * var_v
    if name == "duan":
        var_u, var_v = oracle.variances_from_ladders(state, m)
        return var_u + var_v
    raise DomainError(f"unknown measure {name!r}")


def cmd_sweep(args) -> str:
    if args.zeta_min < 0.0:
        raise DomainError(f"--zeta-min must be >= 0, got {args.zeta_min}")
    if args.steps == 1:
        if args.zeta_min != args.zeta_max:
            raise DomainError("--steps 1 requires --zeta-min == --zeta-max")
    elif args.steps >= 2:
        if not args.zeta_min < args.zeta_max:
            raise DomainError("need --zeta-min < --zeta-max")
    else:
        raise DomainError(f"--steps must be >= 1, got {args.steps}")
    states = ["pcs", "tmsv"] if args.state == "both" else [args.state]
    if "tmsv" in states and args.zeta_max >= 1.0:
        raise DomainError("tmsv requires --zeta-max < 1")
    grid = np.linspace(args.zeta_min, args.zeta_max, args.steps)
    columns = []
    worst_deviation = 0.0
    for kind in states:
        make = _state_factory(kind, args.phi, args.truncation_tol)
        column = []
        for z in grid:
            state = make(z)
            value = _measure_value(args.measure, state, args.m)
            column.append(value)
            if args.audit:
                check = _oracle_measure_value(args.measure, state, args.m)
                worst_deviation = max(worst_deviation, abs(value - check))
        columns.append((f"{args.measure.replace('-', '_')}_{kind}", np.array(column)))
    if args.audit:
        print(f"audit: max deviation {worst_deviation:.3e}", file=sys.stderr)
        if worst_deviation > _AUDIT_TOL:
            raise NumericalError(
                f"oracle mismatch: max deviation {worst_deviation} > {_AUDIT_TOL}")
    table = SweepTable(
        parameter="zeta_abs", values=grid, columns=columns,
        settings={"phi": args.phi, "m": args.m,
                  "truncation_tol": args.truncation_tol, "state": args.state},
    )
    return table.to_csv() if args.format == "csv" else table.to_json() + "\n"


def _spectrum_csv(spectrum: measures.PTSpectrum) -> str:
    lines = ["n,m,eigenvalue,theta"]
    for n, lam in enumerate(spectrum.diagonal):
        lines.append(f"{n},{n},{lam:.15g},0")
    for n, m, plus, minus, theta in zip(spectrum.pair_n, spectrum.pair_m,
                                        spectrum.pair_plus, spectrum.pair_minus,
                                        spectrum.theta):
        lines.append(f"{n},{m},{plus:.15g},{theta:.15g}")
        lines.append(f"{n},{m},{minus:.15g},{theta:.15g}")
    return "\n".join(lines) + "\n"


def cmd_pt_spectrum(args) -> str:
    state = pair_coherent(args.zeta, args.truncation_tol)
    if args.n_max is not None:
        if args.n_max < 0:
            raise DomainError(f"--n-max must be >= 0, got {args.n_max}")
        state = state.truncated(args.n_max)
    if args.audit and state.truncation > _AUDIT_N_MAX:
        raise DomainError(
            f"audit requires truncation <= {_AUDIT_N_MAX}; pass --n-max")
    spectrum = measures.pt_spectrum(state)
    record = {
        "zeta_abs": abs(args.zeta),
        "phi": cmath.phase(args.zeta),
        "n_max": state.truncation,
    }
    record.update(spectrum.to_dict())
    if args.audit:
        dense = oracle.hermitian_eigenvalues(
            oracle.partial_transpose(oracle.dense_density(state)))
        analytic = spectrum.eigenvalues()
        padded = np.zeros(dense.size)
        padded[-analytic.size:] = analytic  # ascending; zeros pad the front
        deviation = float(np.max(np.abs(np.sort(dense) - np.sort(padded))))
        record["audit_max_abs_deviation"] = deviation
        if deviation > _AUDIT_TOL:
            raise NumericalError(
                f"oracle mismatch: max deviation {deviation} > {_AUDIT_TOL}")
    if args.format == "csv":
        return _spectrum_csv(spectrum)
    return json.dumps(record) + "\n"


def cmd_qgrid(args) -> str:
    if args.points < 2:
        raise DomainError(f"--points must be >= 2, got {args.points}")
    grid = witnesses.q_grid(args.zeta, args.amax, args.points, args.rel_phase)
    if args.format == "csv":
        return grid.to_csv(mark_zeros=True)
    return grid.to_json() + "\n"


def cmd_quadrature(args) -> str:
    if args.points < 2:
        raise DomainError(f"--points must be >= 2, got {args.points}")
    state = pair_coherent(args.zeta, args.truncation_tol)
    grid = quadrature_grid(state, -args.x_range, args.x_range, args.points)
    if args.format == "csv":
        return grid.to_csv()
    return grid.to_json() + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paircoherent",
        description="Entanglement and non-classicality measures for "
                    "pair coherent and two-mode squeezed vacuum states.")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="measure vs |zeta| table")
    sweep.add_argument("measure", choices=_MEASURES)
    sweep.add_argument("--state", choices=("pcs", "tmsv", "both"), default="pcs")
    sweep.add_argument("--zeta-min", type=float, default=0.0)
    sweep.add_argument("--zeta-max", type=float, required=True)
    sweep.add_argument("--steps", type=int, default=50)
    sweep.add_argument("--phi", type=float, default=math.pi)
    sweep.add_argument("--m", type=float, default=1.0)
    sweep.add_argument("--audit", action="store_true",
                       help="recompute every point through the oracle path")
    sweep.set_defaults(func=cmd_sweep, default_format="csv")

    spect = sub.add_parser("pt-spectrum", help="partial-transpose spectrum")
    spect.add_argument("--zeta", type=_parse_zeta, required=True,
                       metavar="MAG,PHASE")
    spect.add_argument("--n-max", type=int, default=None)
    spect.add_argument("--audit", action="store_true",
                       help="cross-check against the dense oracle")
    spect.set_defaults(func=cmd_pt_spectrum, default_format="json")

    qgrid = sub.add_parser("qgrid", help="Husimi Q over magnitude grid")
    qgrid.add_argument("--zeta", type=float, required=True)
    qgrid.add_argument("--amax", type=float, default=3.0)
    qgrid.add_argument("--points", type=int, default=61)
    qgrid.add_argument("--rel-phase", type=float, default=math.pi)
    qgrid.set_defaults(func=cmd_qgrid, default_format="csv")

    quad = sub.add_parser("quadrature", help="joint position density grid")
    quad.add_argument("--zeta", type=_parse_zeta, required=True,
                      metavar="MAG,PHASE")
    quad.add_argument("--x-range", type=float, default=4.0)
    quad.add_argument("--points", type=int, default=81)
    quad.set_defaults(func=cmd_quadrature, default_format="csv")

    for p in (sweep, spect, qgrid, quad):
        p.add_argument("--truncation-tol", type=float, default=1e-16)
        p.add_argument("--out", default=None, metavar="FILE")
        p.add_argument("--format", choices=("csv", "json"), default=None)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        text = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 4
    if args.out:
        with open(args.out, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
