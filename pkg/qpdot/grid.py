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

from numbers import Integral

from numpy import arange, isclose, linspace, nan, ndarray, rint


class Grid:
    """Class representing a sweep grid over a closed range.

    The `Grid` is defined by its end points (`xmin` and `xmax`) and either the number of points (`steps`) or the
    point spacing (`dx`). Both end points are always included. If the `Grid` is initialized with the number of
    points, the range is divided into `steps - 1` equal intervals. If it is initialized with the spacing, the number
    of intervals is chosen so that the spacing is as close to `dx` as possible.

    An integer grid only accepts integral end points and an integral spacing, and its points are integers.

    Parameters
    ----------
    xmin
        The first grid point.
    xmax
        The last grid point.
    steps
        The number of grid points, at least two.
    dx
        The grid spacing.
    integer
        Whether the grid sweeps an integer variable.

    Raises
    ------
    ValueError
        When none or both of `steps` and `dx` are provided, when xmin ≥ xmax, or when an integer grid would
        contain non-integral points.

    Attributes
    ----------
    xmin
        The first grid point.
    xmax
        The last grid point.
    steps
        The number of grid points.
    dx
        The grid spacing.
    points
        The grid points.
    """

    def __init__(self, xmin: float, xmax: float,
                 steps: int | None = None,
                 dx: float | None = None,
                 integer: bool = False) -> None:

        if (steps is not None) + (dx is not None) != 1:
            raise ValueError('A grid needs to be initialized either with the number of points (steps) or the spacing (dx)')
        if not xmin < xmax:
            raise ValueError(f"The grid needs xmin < xmax, got [{xmin}, {xmax}].")

        self.xmin: float = xmin
        self.xmax: float = xmax
        self.steps: int | None = steps
        self.dx: float | None = dx
        self.integer: bool = integer

        self.points: ndarray | None = None
        """An array of the `steps` grid points."""

        if integer:
            self._grid_integer()
        elif dx is not None:
            self._grid_dx()
        else:
            self._grid_steps()

    def _grid_dx(self) -> None:
        """Create the grid from the spacing `dx`.

        Raises
        ------
        ValueError
            If the spacing is not positive or not smaller than the grid span.
        """
        if not 0.0 < self.dx < self.xmax - self.xmin:
            raise ValueError("The spacing (dx) should be positive and smaller than the grid span.")
        self.steps = int(rint((self.xmax - self.xmin) / self.dx)) + 1
        self._grid_steps()

    def _grid_steps(self) -> None:
        """Create the grid from the number of points `steps`.

        Raises
        ------
        ValueError
            If the number of points is smaller than two.
        """
        if isinstance(self.steps, bool) or not isinstance(self.steps, Integral) or self.steps < 2:
            raise ValueError(f"The number of grid points (steps) should be an integer of at least two, got {self.steps}.")
        self.points = linspace(self.xmin, self.xmax, num=self.steps)
        self.dx = (self.xmax - self.xmin) / (self.steps - 1)

    def _grid_integer(self) -> None:
        """Create an integer grid.

        Raises
        ------
        ValueError
            If the end points or the spacing are not integral.
        """
        if self.xmin != int(self.xmin) or self.xmax != int(self.xmax):
            raise ValueError(f"An integer grid needs integral end points, got [{self.xmin}, {self.xmax}].")
        span = int(self.xmax) - int(self.xmin)
        if self.dx is None:
            self._grid_steps()
            if not isclose(self.dx, rint(self.dx)):
                raise ValueError(f"{self.steps} points do not divide [{self.xmin}, {self.xmax}] into integer steps.")
            self.dx = float(rint(self.dx))
        if self.dx != int(self.dx) or not 0 < self.dx <= span or span % int(self.dx) != 0:
            raise ValueError(f"An integer grid needs an integral spacing that divides the span, got {self.dx}.")
        self.dx = int(self.dx)
        self.points = arange(int(self.xmin), int(self.xmax) + 1, self.dx)
        self.steps = self.points.size

    def __len__(self) -> int:
        return self.steps

    def __iter__(self):
        return iter(self.points.tolist())

    def __repr__(self) -> str:
        kind = 'integer ' if self.integer else ''
        return f"Grid {kind}{self.xmin:0.4f} - {self.xmax:.4f}: dx = {self.dx or nan:6.4f}, n = {self.steps:4d}"

