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

"""Parameter sweeps over one variable of the pseudodot."""
import logging
from dataclasses import dataclass, field
from multiprocessing import Pool

from numpy import array

from .dataset import Series, SeriesSet
from .grid import Grid
from .oracle import TruncationPolicy
from .pseudodot import INTEGER_VARIABLES, QUANTITIES, VARIABLES, ParameterRecord, QuantumPseudodot
from .spectrum import Constants
from .thermo import BACKENDS

__all__ = ['SweepSpec', 'run_sweep', 'evaluate_records']

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepSpec:
    """A sweep of one variable over an inclusive grid of `steps` points with the other parameters fixed.

    Parameters
    ----------
    variable
        The swept variable, one of B, Phi_AB, eps, r0, V0, K, T, m, n_r and n_z.
    start, stop
        The first and last grid points. Integer variables need integral end points.
    steps
        Number of grid points, at least two.
    fixed
        The parameter record supplying every other value.
    quantities
        The quantities to evaluate, a tuple of names or a comma-separated string.
    backend
        Thermodynamic backend.
    """
    variable: str
    start: float
    stop: float
    steps: int = 50
    fixed: ParameterRecord = field(default_factory=ParameterRecord)
    quantities: tuple[str, ...] = ('E',)
    backend: str = 'closed'

    def __post_init__(self):
        if self.variable not in VARIABLES:
            raise ValueError(f"Unknown sweep variable '{self.variable}', use one of {', '.join(VARIABLES)}.")
        quantities = self.quantities
        if isinstance(quantities, str):
            quantities = tuple(q.strip() for q in quantities.split(',') if q.strip())
        object.__setattr__(self, 'quantities', tuple(quantities))
        if not self.quantities:
            raise ValueError("A sweep needs at least one quantity.")
        unknown = [q for q in self.quantities if q not in QUANTITIES]
        if unknown:
            raise ValueError(f"Unknown quantities {unknown}, use {', '.join(QUANTITIES)}.")
        if self.backend not in BACKENDS:
            raise ValueError(f"Unknown backend '{self.backend}', use one of {', '.join(BACKENDS)}.")
        grid = self.grid
        self.fixed.with_value(self.variable, grid.points[0])
        self.fixed.with_value(self.variable, grid.points[-1])

    @property
    def grid(self) -> Grid:
        return Grid(self.start, self.stop, steps=self.steps, integer=self.variable in INTEGER_VARIABLES)

    def records(self) -> list[ParameterRecord]:
        """The parameter record of every grid point, in grid order."""
        return [self.fixed.with_value(self.variable, x) for x in self.grid]


def _evaluate(args) -> dict[str, float]:
    record, consts, backend, policy, quantities = args
    return QuantumPseudodot(record, consts, backend, policy).evaluate(quantities)


def evaluate_records(records: list[ParameterRecord], quantities: tuple[str, ...], backend: str = 'closed',
                     consts: Constants | None = None, processes: int = 1,
                     policy: TruncationPolicy | None = None) -> list[dict[str, float]]:
    """Evaluate the quantities at every record, in input order.

    With `processes > 1` the records are distributed over a `multiprocessing.Pool`; the output order is the input
    order regardless of the number of processes.
    """
    consts = consts or Constants()
    args = [(r, consts, backend, policy, quantities) for r in records]
    if processes > 1 and len(args) > 1:
        with Pool(processes) as pool:
            return pool.map(_evaluate, args)
    return list(map(_evaluate, args))


def run_sweep(spec: SweepSpec, consts: Constants | None = None, processes: int = 1,
              policy: TruncationPolicy | None = None) -> SeriesSet:
    """Run a sweep and collect one curve per quantity.

    Parameters
    ----------
    spec
        The sweep specification.
    consts
        Unit system, natural units by default.
    processes
        Number of worker processes.
    policy
        Truncation policy of the exact partition sum.

    Returns
    -------
    SeriesSet
        Exactly `spec.steps` rows. Points where a quantity could not be evaluated hold NaN.
    """
    grid = spec.grid
    logger.info("Sweeping %s over %r for %s with the %s backend", spec.variable, grid,
                ', '.join(spec.quantities), spec.backend)
    rows = evaluate_records(spec.records(), spec.quantities, spec.backend, consts, processes, policy)
    return SeriesSet([Series(grid.points, array([r[q] for r in rows]), spec.variable, q) for q in spec.quantities])
