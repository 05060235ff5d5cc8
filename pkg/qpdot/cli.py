#  qpdot: spectra and thermodynamics of quantum pseudodots in external fields.
#  Copyright (C) 2026 The qpdot developers
#
#   This program is free software: you can redistribute it and/or modify
#   it under the terms of the GNU General Public License as published by
#   the Free Software Foundation, either version 3 of the License, or
#   (at your option) any later version.
#
#   This program is distributed in the hope that it will be useful,
#   but WITHOUT ANY WARRANTY; without even the implied warranty of
#   MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#   GNU General Public License for more details.
#
#   You should have received a copy of the GNU General Public License
#   along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""The `qpdot` command-line interface."""
import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .errors import ConvergenceError
from .figures import FIGURES, FigureDefaults, write_figure
from .pseudodot import QUANTITIES, VARIABLES, ParameterRecord, QuantumPseudodot
from .spectrum import Constants
from .sweep import SweepSpec, run_sweep
from .thermo import BACKENDS
from .verify import verify

logger = logging.getLogger('qpdot')

EXIT_OK, EXIT_INVALID, EXIT_CONVERGENCE, EXIT_VERIFY = 0, 1, 2, 3

_ENERGY_LABELS = (('E_r', 'radial energy (ħω_c/2)(m+ξ) - 2V0 + √(ħ²ω_c² + 8ħ²V0/(μr0²)) (n_r + 1/2 + |γ|/2)'),
                  ('E_z', 'axial energy (ħ/2)√(K/μ)(n_z + 1) + stark_shift'),
                  ('E', 'total energy E_r + E_z'),
                  ('stark_shift', 'Stark shift -ħ²e²ε²/(4K)'),
                  ('a', 'ladder offset, the level-independent part of E'),
                  ('Xi', 'ladder parameter Ξ = 2a/ħ'),
                  ('Omega', 'ladder spacing Ω'),
                  ('omega_c', 'cyclotron frequency ω_c = eB/(μc)'),
                  ('xi', 'flux ratio ξ = Φ_AB/Φ0'),
                  ('gamma', '|γ| = √((m+ξ)² + 2μV0r0²/ħ²)'),
                  ('omega', 'radial frequency ω = √(2μV0/(ħ²r0²) + e²B²/(4ħ²c²))'),
                  ('phi0', 'flux quantum Φ0 = 2πħc/e'))


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports usage errors with the validation exit status."""
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _common_arguments() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group('model parameters')
    g.add_argument("--v0", type=float, default=5.0, help="Pseudoharmonic potential height V0.")
    g.add_argument("--r0", type=float, default=1.0, help="Pseudoharmonic potential zero point r0.")
    g.add_argument("--k", type=float, default=1.0, help="Axial oscillator constant K.")
    g.add_argument("--b", type=float, default=0.0, help="Magnetic field B.")
    g.add_argument("--phi", type=float, default=0.0, help="Aharonov-Bohm flux Phi_AB.")
    g.add_argument("--eps", type=float, default=0.0, help="Electric field along z.")
    g.add_argument("--m", type=int, default=0, help="Azimuthal quantum number.")
    g.add_argument("--n-r", type=int, default=0, help="Radial quantum number, n_r >= 0.")
    g.add_argument("--n-z", type=int, default=1, help="Axial quantum number, n_z >= 1.")
    g.add_argument("--t", type=float, default=1.0, help="Temperature in energy units (k_B = 1).")
    g.add_argument("--backend", choices=BACKENDS, default=None, help="Thermodynamic backend.")
    g.add_argument("--units", choices=['natural'], default='natural', help="Unit system.")
    p.add_argument("-v", "--verbose", action="count", default=0, help="Increase verbosity (-v, -vv).")
    return p


def _parse_args(argv=None):
    common = _common_arguments()
    p = _Parser(prog='qpdot', description="Spectra and thermodynamics of quantum pseudodots in external fields.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest='command', required=True, parser_class=_Parser)

    sub.add_parser('energy', parents=[common], help="Energy levels and derived parameters of one state.")
    sub.add_parser('thermo', parents=[common], help="Thermodynamic state at one temperature.")

    s = sub.add_parser('sweep', parents=[common], help="Sweep one variable and write CSV.")
    s.add_argument("--var", required=True, choices=tuple(VARIABLES), help="The swept variable.")
    s.add_argument("--from", dest='start', type=float, required=True, help="First grid point.")
    s.add_argument("--to", dest='stop', type=float, required=True, help="Last grid point.")
    s.add_argument("--steps", type=int, default=50, help="Number of grid points, both end points included.")
    s.add_argument("--quantity", default='E', help=f"Comma-separated quantities from {', '.join(QUANTITIES)}.")
    s.add_argument("--processes", type=int, default=1, help="Number of worker processes.")
    s.add_argument("--output", type=Path, default=None, help="Output CSV file, stdout if not given.")

    f = sub.add_parser('figure', parents=[common], help="Write the dataset of a figure, or of all figures.")
    f.add_argument("id", help=f"Figure number 1-{len(FIGURES)} or 'all'.")
    f.add_argument("--outdir", type=Path, default=Path('.'), help="Output directory.")
    f.add_argument("--steps", type=int, default=50, help="Number of grid points per curve.")
    f.add_argument("--processes", type=int, default=1, help="Number of worker processes.")

    v = sub.add_parser('verify', help="Run the verification suite.")
    v.add_argument("--errata", action=argparse.BooleanOptionalAction, default=True,
                   help="Include the errata diagnostics.")
    v.add_argument("-v", "--verbose", action="count", default=0, help="Increase verbosity (-v, -vv).")
    return p.parse_args(argv)


def _configure_logging(level) -> None:
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr, force=True)


def _record(args) -> ParameterRecord:
    return ParameterRecord(v0=args.v0, r0=args.r0, k_osc=args.k, b=args.b, phi_ab=args.phi, eps=args.eps,
                           m=args.m, n_r=args.n_r, n_z=args.n_z, T=args.t)


def _constants(args) -> Constants:
    # Only natural units are accepted for now.
    return Constants()


def cmd_energy(args) -> int:
    qpd = QuantumPseudodot(_record(args), _constants(args))
    report = qpd.energy_report()
    for key, label in _ENERGY_LABELS:
        print(f"{key:<12s} {report[key]:>16.9g}  {label}")
    return EXIT_OK


def cmd_thermo(args) -> int:
    qpd = QuantumPseudodot(_record(args), _constants(args), args.backend or 'closed')
    point = qpd.thermo()
    print(f"{'backend':<12s} {point.backend:>16s}")
    for key in ('T', 'X', 'F', 'U', 'S', 'Cv', 'I', 'M', 'chi'):
        print(f"{key:<12s} {getattr(point, key):>16.9g}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = SweepSpec(args.var, args.start, args.stop, args.steps, _record(args), args.quantity,
                     args.backend or 'closed')
    data = run_sweep(spec, _constants(args), args.processes)
    if args.output is None:
        sys.stdout.write(data.to_csv())
    else:
        data.to_csv(args.output)
        logger.info("Sweep saved to %s", args.output)
    return EXIT_OK


def cmd_figure(args) -> int:
    if args.id == 'all':
        ids = list(FIGURES)
    else:
        try:
            ids = [int(args.id)]
        except ValueError:
            raise ValueError(f"The figure id must be an integer or 'all', got '{args.id}'.") from None
    defaults = FigureDefaults(consts=_constants(args), steps=args.steps, backend=args.backend or 'paper')
    for fig_id in ids:
        path = write_figure(fig_id, args.outdir, defaults=defaults, processes=args.processes)
        logger.info("Figure %d saved to %s", fig_id, path)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify(errata=args.errata)
    print(report.format())
    return EXIT_OK if report.passed else EXIT_VERIFY


_COMMANDS = {'energy': cmd_energy, 'thermo': cmd_thermo, 'sweep': cmd_sweep, 'figure': cmd_figure,
             'verify': cmd_verify}


def main(argv=None) -> int:
    args = _parse_args(argv)
    _configure_logging(max(logging.WARNING - 10 * args.verbose, logging.DEBUG))
    try:
        return _COMMANDS[args.command](args)
    except ConvergenceError as exc:
        logger.error(str(exc))
        return EXIT_CONVERGENCE
    except (ValueError, TypeError, OverflowError, FloatingPointError) as exc:
        logger.error(str(exc))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
