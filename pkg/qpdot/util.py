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

from math import exp, expm1, log, log1p

from numba import njit

_RESCALE = 1e100
_LOG_RESCALE = log(_RESCALE)


@njit
def numerov_radial(x0: float, h: float, npt: int, eta: float, omega2: float, gamma: float) -> tuple[int, float, float]:
    """March the radial equation outwards with the Numerov method on a logarithmic grid.

    With x = ln r the radial equation f'' + f'/r - γ²/r² f - ω² r² f + η f = 0 becomes
    d²f/dx² + Q(x) f = 0 with Q = (η - ω² r²) r² - γ², which has no first-derivative term and can be
    integrated with the Numerov recurrence. The march starts from the regular small-r solution
    f ~ r^γ (1 - η r² / 4(γ + 1)), with the common factor r_min^γ dropped.

    Parameters
    ----------
    x0 : float
        Logarithm of the innermost radius.
    h : float
        Step in x.
    npt : int
        Number of grid points.
    eta : float
        The energy-dependent constant η.
    omega2 : float
        The coefficient ω² of the r² term.
    gamma : float
        The non-negative exponent |γ|.

    Returns
    -------
    tuple
        The number of sign changes of f over the grid, the final value of f in rescaled units, and the
        natural logarithm of the accumulated rescaling factor.
    """
    g2 = gamma * gamma
    c = -eta / (4.0 * (gamma + 1.0))
    hh = h * h / 12.0
    eh = exp(h)

    r0 = exp(x0)
    r1 = r0 * eh
    y0 = 1.0 + c * r0 * r0
    y1 = exp(gamma * h) * (1.0 + c * r1 * r1)
    q0 = (eta - omega2 * r0 * r0) * r0 * r0 - g2
    q1 = (eta - omega2 * r1 * r1) * r1 * r1 - g2

    nodes = 0
    log_scale = 0.0
    r2 = r1
    for i in range(2, npt):
        r2 = r2 * eh
        q2 = (eta - omega2 * r2 * r2) * r2 * r2 - g2
        y2 = (2.0 * (1.0 - 5.0 * hh * q1) * y1 - (1.0 + hh * q0) * y0) / (1.0 + hh * q2)
        if y1 * y2 < 0.0:
            nodes += 1
        if abs(y2) > _RESCALE:
            y1 /= _RESCALE
            y2 /= _RESCALE
            log_scale += _LOG_RESCALE
        y0, y1 = y1, y2
        q0, q1 = q1, q2
    return nodes, y1, log_scale


@njit
def ladder_partition_sum(xi: float, omega: float, beta: float,
                         rel_floor: float, max_terms: int) -> tuple[float, float, int, int]:
    """Sum X = -Σ_{n≥1} ln(1 - exp(-β ω_n)) for the ladder ω_n = Ω (n + Ξ/2).

    The sum stops once a geometric bound on the remaining tail falls below `rel_floor` times the accumulated
    value. With x_k = exp(-β ω_k) the tail after term n is bounded by x_{n+1} / ((1 - x_{n+1})(1 - e^{-βΩ})).

    Returns
    -------
    tuple
        The sum, the tail bound, the number of terms used, and a status code (0 converged, 1 out of terms).
    """
    bw = beta * omega
    hx = 0.5 * xi
    one_minus_ratio = -expm1(-bw)
    total = 0.0
    tail = 0.0
    for n in range(1, max_terms + 1):
        total -= log1p(-exp(-bw * (n + hx)))
        x = exp(-bw * (n + 1 + hx))
        tail = x / ((1.0 - x) * one_minus_ratio)
        if x == 0.0 or tail <= rel_floor * total:
            return total, tail, n, 0
    return total, tail, max_terms, 1
