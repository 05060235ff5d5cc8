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

from collections.abc import Sequence
from pathlib import Path

import pandas as pd
from numpy import array_equal, asarray, diff, isfinite, ndarray

__all__ = ['Series', 'SeriesSet', 'CSV_FORMAT']

CSV_FORMAT = dict(float_format='%.9g', lineterminator='\n', index=False, na_rep='', encoding='utf-8')
"""Keyword arguments passed to `pandas.DataFrame.to_csv` for every CSV the package writes."""


class Series:
    """
    Series is a container for one curve: a quantity sampled over a grid of a swept variable, optionally
    labelled by the value of a second, fixed variable that distinguishes the curves of a figure.

    Attributes
    ----------
    x : 1D ndarray
        The values of the swept variable.
    values : 1D ndarray
        The quantity at each grid point. Failed evaluations are stored as NaN.
    variable : str
        Name of the swept variable.
    quantity : str
        Name of the quantity.
    series : tuple[str, float] | None
        Name and value of the variable that labels the curve.
    """
    def __init__(self, x: Sequence, values: Sequence, variable: str, quantity: str,
                 series: tuple[str, float] | None = None):
        x, values = asarray(x), asarray(values, dtype=float)
        if x.ndim != 1 or values.shape != x.shape:
            raise ValueError("The values must be a one-dimensional array matching the size of the grid.")
        self.x = x.copy()
        self.values = values.copy()
        self.variable = variable
        self.quantity = quantity
        self.series = series

    def __repr__(self) -> str:
        return f"Series '{self.name}' over {self.variable} [{self.x[0]} - {self.x[-1]}] n={self.size}"

    def __len__(self) -> int:
        return self.size

    def __add__(self, other: 'Series') -> 'SeriesSet':
        """Combine two curves sampled over the same grid into a `SeriesSet`."""
        return SeriesSet([self, other])

    @property
    def size(self) -> int:
        return self.x.size

    @property
    def name(self) -> str:
        """Column name of the curve, `quantity[series=value]` for labelled curves."""
        if self.series is None:
            return self.quantity
        label, value = self.series
        return f"{self.quantity}[{label}={value:g}]"

    @property
    def finite(self) -> ndarray:
        """Mask of the grid points with a finite value."""
        return isfinite(self.values)

    def differences(self) -> ndarray:
        """First differences of the values along the grid."""
        return diff(self.values)

    def is_increasing(self, strict: bool = True) -> bool:
        """Whether the finite values increase along the grid."""
        d = diff(self.values[self.finite])
        return bool((d > 0.0).all() if strict else (d >= 0.0).all())

    def is_affine(self, rtol: float = 1e-9) -> bool:
        """Whether the values are an affine function of an evenly spaced grid."""
        d = self.differences()
        scale = max(abs(self.values).max(), 1.0)
        return bool(isfinite(d).all() and (abs(d - d[0]) <= rtol * scale).all())


class SeriesSet:
    """A collection of curves sharing one grid of the swept variable, written as a wide CSV table.

    The first column of the table is the swept variable and every curve adds one column named after it.
    """
    def __init__(self, data: Sequence[Series]):
        self.data: list[Series] = list(data)
        if len(self.data) == 0:
            raise ValueError("A SeriesSet needs at least one Series.")
        ref = self.data[0]
        for s in self.data[1:]:
            if s.variable != ref.variable or not array_equal(s.x, ref.x):
                raise ValueError("All the curves of a SeriesSet must share the same grid.")
        names = [s.name for s in self.data]
        if len(set(names)) != len(names):
            raise ValueError(f"The curve names of a SeriesSet must be unique, got {names}.")
        self.variable: str = ref.variable
        self.x: ndarray = ref.x
        self.names: list[str] = names

    def __getitem__(self, index: int | str) -> Series:
        if isinstance(index, str):
            return self.data[self.names.index(index)]
        return self.data[index]

    def __len__(self) -> int:
        return len(self.data)

    def __iter__(self):
        return iter(self.data)

    def __repr__(self):
        return f"SeriesSet over {self.variable} with {len(self)} curves: {self.names}"

    def __add__(self, other):
        if isinstance(other, Series):
            return SeriesSet(self.data + [other])
        elif isinstance(other, SeriesSet):
            return SeriesSet(self.data + other.data)
        else:
            raise TypeError(f"Can't concatenate SeriesSet and {other.__class__.__name__}")

    def to_frame(self) -> pd.DataFrame:
        """The curves as a wide table with the swept variable in the first column."""
        columns = {self.variable: self.x}
        columns.update({s.name: s.values for s in self.data})
        return pd.DataFrame(columns)

    def to_csv(self, path: Path | str | None = None) -> str | None:
        """Write the table as CSV with nine significant digits, LF line endings and empty fields for failed points.

        Parameters
        ----------
        path
            Output file. If None, the CSV text is returned instead.
        """
        return self.to_frame().to_csv(path, **CSV_FORMAT)

    @classmethod
    def read_csv(cls, path: Path | str) -> 'SeriesSet':
        """Read a table written by `to_csv` back into a `SeriesSet`.

        Column names of the form `quantity[series=value]` restore the curve labels.
        """
        df = pd.read_csv(path)
        variable = df.columns[0]
        x = df[variable].values
        data = []
        for name in df.columns[1:]:
            if name.endswith(']') and '[' in name:
                quantity, label = name[:-1].split('[', 1)
                key, value = label.split('=', 1)
                data.append(Series(x, df[name].values, variable, quantity, (key, float(value))))
            else:
                data.append(Series(x, df[name].values, variable, name))
        return cls(data)
