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

"""Special functions: the Hurwitz zeta function and Kummer's confluent hypergeometric function.

Both are real-argument kernels compiled with numba. The public wrappers validate their arguments and turn the
kernel status codes into exceptions.
"""
from math import isfinite

from numba import njit
from numpy import arange, array, asarray, empty, exp, floor, int64, ndarray
from scipy.special import bernoulli, comb

from .errors import ConvergenceError

__all__ = ['ZETA3', 'hurwitz_zeta', 'riemann_zeta', 'kummer_1f1']

ZETA3 = 1.2020569031595942
"""Apéry's constant ζ(3)."""

# Euler-Maclaurin setup: direct terms and the B_2 ... B_12 corrections divided by (2j)!
_EM_DIRECT = 15
_EM_COEFFS = array([1/6 / 2, -1/30 / 24, 1/42 / 720, -1/30 / 40320, 5/66 / 3628800, -691/2730 / 479001600])

_KUMMER_MAX_TERMS = 10_000
_KUMMER_RTOL = 1e-16


@njit
def _hurwitz_zeta(s: float, q: float) -> float:
    a = _EM_DIRECT + q
    v = 0.0
    for k in range(_EM_DIRECT):
        v += (k + q) ** (-s)
    v += a ** (1.0 - s) / (s - 1.0) + 0.5 * a ** (-s)

    # Rising factorial s(s+1)...(s+2j-2) times a^(-s-2j+1)
    f = s * a ** (-s - 1.0)
    for j in range(_EM_COEFFS.size):
        v += _EM_COEFFS[j] * f
        f *= (s + 2 * j + 1) * (s + 2 * j + 2) / (a * a)
    return v


@njit
def _kummer_series(a: float, b: float, x: float, terminating: bool) -> tuple[float, int]:
    """Sum the 1F1 power series.

    Returns the sum and a status code: 0 converged, 1 term budget exhausted, 2 overflow.
    """
    term = 1.0
    total = 1.0
    for k in range(_KUMMER_MAX_TERMS):
        term *= (a + k) / (b + k) * x / (k + 1)
        total += term
        if not isfinite(total):
            return total, 2
        if term == 0.0:
            return total, 0
        if not terminating and abs(term) <= _KUMMER_RTOL * abs(total):
            return total, 0
    return total, 1


@njit
def _kummer(a: float, b: float, x: float) -> tuple[float, int]:
    if a <= 0.0 and a == floor(a):
        return _kummer_series(a, b, x, True)
    if x < 0.0:
        c = b - a
        v, status = _kummer_series(c, b, -x, c <= 0.0 and c == floor(c))
        return exp(x) * v, status
    return _kummer_series(a, b, x, False)


@njit
def _kummer_many(a: float, b: float, x: ndarray) -> tuple[ndarray, ndarray]:
    values = empty(x.size)
    status = empty(x.size, dtype=int64)
    for i in range(x.size):
        v, st = _kummer(a, b, x[i])
        values[i] = v
        status[i] = st
    return values, status


def hurwitz_zeta(s: float, q: float) -> float:
    """Hurwitz zeta function ζ(s, q) for real arguments.

    Non-positive integer orders use the exact form ζ(-n, q) = -B_{n+1}(q)/(n + 1) with the Bernoulli polynomial
    B_{n+1}. Other orders use the Euler-Maclaurin formula with fifteen direct terms and Bernoulli corrections
    through B_12, which also gives the analytic continuation to s < 1. The supported range is
    s ≥ -1 with 0.1 ≤ q ≤ 10, where the absolute accuracy is better than 1e-12, plus every non-positive integer
    s, which is exact up to rounding in the polynomial sum. Non-integer s < -1 loses accuracy to cancellation.

    Parameters
    ----------
    s
        Order, any real value except 1.
    q
        Shift, strictly positive.

    Returns
    -------
    float

    Raises
    ------
    ValueError
        If s = 1 (the pole) or q ≤ 0.
    """
    s, q = float(s), float(q)
    if s == 1.0:
        raise ValueError("The Hurwitz zeta function has a pole at s = 1.")
    if not q > 0.0:
        raise ValueError(f"The Hurwitz zeta shift q must be positive, got {q}.")
    if s <= 0.0 and s == floor(s):
        return _zeta_nonpositive_integer(int(-s), q)
    return _hurwitz_zeta(s, q)


def _zeta_nonpositive_integer(n: int, q: float) -> float:
    """ζ(-n, q) = -B_{n+1}(q)/(n + 1) from the Bernoulli numbers with B_1 = -1/2."""
    m = n + 1
    k = arange(m + 1)
    return float(-(comb(m, k) * bernoulli(m) * q**(m - k)).sum() / m)


def riemann_zeta(s: float) -> float:
    """Riemann zeta function ζ(s) = ζ(s, 1)."""
    return hurwitz_zeta(s, 1.0)


def kummer_1f1(a: float, b: float, x: float | ndarray) -> float | ndarray:
    """Kummer's confluent hypergeometric function 1F1(a; b; x).

    When `a` is a non-positive integer the series terminates and the polynomial is summed exactly. Otherwise the
    power series is summed until the relative size of a term drops below 1e-16. Negative `x` is mapped through
    Kummer's transformation 1F1(a; b; x) = exp(x) 1F1(b - a; b; -x).

    Parameters
    ----------
    a
        Numerator parameter.
    b
        Denominator parameter, not a non-positive integer.
    x
        Argument, a scalar or an array evaluated elementwise.

    Returns
    -------
    float or ndarray

    Raises
    ------
    ValueError
        If `b` is a non-positive integer.
    OverflowError
        If the series overflows the float range.
    ConvergenceError
        If the series does not converge within 10 000 terms.
    """
    a, b = float(a), float(b)
    if b <= 0.0 and b == floor(b):
        raise ValueError(f"1F1 is undefined for a non-positive integer b, got b = {b}.")
    xa = asarray(x, dtype=float)
    values, status = _kummer_many(a, b, xa.ravel())
    if (status == 2).any():
        raise OverflowError(f"1F1({a}, {b}, x) overflows for x = {xa.ravel()[status == 2][0]}.")
    if (status == 1).any():
        raise ConvergenceError(f"1F1({a}, {b}, x) did not converge for x = {xa.ravel()[status == 1][0]}.")
    if xa.ndim == 0:
        return float(values[0])
    return values.reshape(xa.shape)
