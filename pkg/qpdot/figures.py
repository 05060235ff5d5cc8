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

"""Datasets behind the eighteen standard figures.

Every figure is a family of curves: one quantity swept over one variable, with one curve per value of a second
variable. The datasets are written as wide CSV tables (see `qpdot.dataset.SeriesSet`) and plotting is left to
external tools.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .dataset import Series, SeriesSet
from .pseudodot import ParameterRecord
from .spectrum import Constants
from .sweep import SweepSpec, run_sweep
from .thermo import BACKENDS

__all__ = ['FigureDefaults', 'FigureRecipe', 'FIGURES', 'build_figure', 'write_figure']

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FigureDefaults:
    """Parameters shared by all figures: c = e = r0 = ħ = K = μ = 1, V0 = 5 and n_r = n_z = 1.

    `backend` is used for the thermodynamic figures 5 to 18, which plot the published expressions by default.
    """
    record: ParameterRecord = field(default_factory=lambda: ParameterRecord(v0=5.0, r0=1.0, k_osc=1.0, n_r=1, n_z=1))
    consts: Constants = field(default_factory=Constants)
    steps: int = 50
    backend: str = 'paper'

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(f"Unknown backend '{self.backend}', use one of {', '.join(BACKENDS)}.")


@dataclass(frozen=True)
class FigureRecipe:
    """One figure: `quantity` versus `variable` on [start, stop], one curve per value of `series`."""
    id: int
    title: str
    quantity: str
    variable: str
    start: float
    stop: float
    series: str
    values: tuple
    fixed: dict = field(default_factory=dict)

    @property
    def filename(self) -> str:
        return f"fig{self.id:02d}.csv"


_ENERGY = dict(b=2.0, phi_ab=5.0, eps=5.0, m=1)
_TEMPERATURE = dict(b=2.0, phi_ab=5.0, eps=5.0, m=1, T=1.0)
_MS = (0, 1, 2, 3)
_BS = (2.0, 4.0, 6.0, 8.0)

FIGURES: dict[int, FigureRecipe] = {r.id: r for r in (
    FigureRecipe(1, 'Energy versus the magnetic field for various Aharonov-Bohm fluxes',
                 'E', 'B', 0.0, 10.0, 'Phi_AB', (5.0, 10.0, 15.0, 20.0), _ENERGY),
    FigureRecipe(2, 'Energy versus the magnetic field for various n_r',
                 'E', 'B', 0.0, 10.0, 'n_r', (1, 2, 3, 4), _ENERGY),
    FigureRecipe(3, 'Energy versus the electric field for various m',
                 'E', 'eps', 0.0, 10.0, 'm', _MS, _ENERGY),
    FigureRecipe(4, 'Energy versus the magnetic field for various m',
                 'E', 'B', 0.0, 10.0, 'm', _MS, _ENERGY),
    FigureRecipe(5, 'Mean energy versus the temperature for various m',
                 'U', 'T', 0.5, 10.0, 'm', _MS, _TEMPERATURE),
    FigureRecipe(6, 'Specific heat versus the temperature for various m',
                 'Cv', 'T', 0.5, 10.0, 'm', _MS, _TEMPERATURE),
    FigureRecipe(7, 'Free energy versus the temperature for various m',
                 'F', 'T', 0.5, 10.0, 'm', _MS, _TEMPERATURE),
    FigureRecipe(8, 'Entropy versus the temperature for various m',
                 'S', 'T', 0.5, 10.0, 'm', _MS, _TEMPERATURE),
    FigureRecipe(9, 'Mean energy versus the pseudodot size for various B',
                 'U', 'r0', 0.5, 10.0, 'B', _BS, _TEMPERATURE),
    FigureRecipe(10, 'Specific heat versus the pseudodot size for various B',
                 'Cv', 'r0', 0.5, 10.0, 'B', _BS, _TEMPERATURE),
    FigureRecipe(11, 'Persistent current versus the pseudodot size for various B',
                 'I', 'r0', 0.5, 10.0, 'B', _BS, _TEMPERATURE),
    FigureRecipe(12, 'Magnetization versus the pseudodot size for various B',
                 'M', 'r0', 0.5, 10.0, 'B', _BS, _TEMPERATURE),
    FigureRecipe(13, 'Magnetic susceptibility versus the pseudodot size for various B',
                 'chi', 'r0', 0.5, 10.0, 'B', _BS, _TEMPERATURE),
    FigureRecipe(14, 'Entropy versus the pseudodot size for various B',
                 'S', 'r0', 0.5, 10.0, 'B', _BS, _TEMPERATURE),
    FigureRecipe(15, 'Free energy versus the Aharonov-Bohm flux for various pseudodot sizes',
                 'F', 'Phi_AB', 0.0, 20.0, 'r0', (1.0, 2.0, 3.0, 4.0), _TEMPERATURE),
    FigureRecipe(16, 'Persistent current versus the Aharonov-Bohm flux for various m with r0 = 5',
                 'I', 'Phi_AB', 0.0, 20.0, 'm', _MS, {**_TEMPERATURE, 'r0': 5.0}),
    FigureRecipe(17, 'Magnetization versus the Aharonov-Bohm flux for various m with r0 = 5',
                 'M', 'Phi_AB', 0.0, 20.0, 'm', _MS, {**_TEMPERATURE, 'r0': 5.0}),
    FigureRecipe(18, 'Magnetic susceptibility versus the Aharonov-Bohm flux for various m with r0 = 20',
                 'chi', 'Phi_AB', 0.0, 20.0, 'm', _MS, {**_TEMPERATURE, 'r0': 20.0}),
)}


def build_figure(fig_id: int, defaults: FigureDefaults | None = None, steps: int | None = None,
                 backend: str | None = None, processes: int = 1) -> SeriesSet:
    """Compute the dataset of one figure.

    Parameters
    ----------
    fig_id
        Figure number, 1 to 18.
    defaults
        Shared figure parameters.
    steps
        Number of grid points per curve, `defaults.steps` if None.
    backend
        Thermodynamic backend, `defaults.backend` if None. The energy figures 1 to 4 do not depend on it.
    processes
        Number of worker processes per sweep.

    Returns
    -------
    SeriesSet
        One curve per series value, named `quantity[series=value]`.
    """
    if fig_id not in FIGURES:
        raise ValueError(f"Unknown figure {fig_id}, the figures are numbered 1 to {len(FIGURES)}.")
    recipe = FIGURES[fig_id]
    defaults = defaults or FigureDefaults()
    base = defaults.record
    for name, value in recipe.fixed.items():
        base = base.with_value(name, value)

    curves = []
    for value in recipe.values:
        spec = SweepSpec(recipe.variable, recipe.start, recipe.stop, steps or defaults.steps,
                         base.with_value(recipe.series, value), (recipe.quantity,), backend or defaults.backend)
        s = run_sweep(spec, defaults.consts, processes)[0]
        curves.append(Series(s.x, s.values, recipe.variable, recipe.quantity, (recipe.series, value)))
    logger.info("Built figure %d: %s", fig_id, recipe.title)
    return SeriesSet(curves)


def write_figure(fig_id: int, outdir: Path | str = '.', **kwargs) -> Path:
    """Compute a figure dataset and write it to `outdir/figNN.csv`. Returns the path written."""
    data = build_figure(fig_id, **kwargs)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    path = outdir / FIGURES[fig_id].filename
    data.to_csv(path)
    return path
