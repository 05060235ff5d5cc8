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

"""Independent numerical reference values.

This module provides the ground truth the analytic results are checked against: a shooting eigensolver for the
radial equation, the exact truncated partition sum of the ladder spectrum, and a central finite-difference engine
used for every numerical derivative in the package.
"""
import logging
import warnings
from dataclasses import dataclass
from math import exp, isnan, log, sqrt
from typing import Callable, NamedTuple

from numpy import finfo
from scipy.optimize import brentq

from .errors import ConvergenceError
from .spectrum import Constants, FieldConfig, PotentialParams, derived_params, flux_ratio, _check_int
from .util import ladder_partition_sum, numerov_radial

__all__ = ['ShootingConfig', 'TruncationPolicy', 'PartitionSum', 'default_shooting_config',
           'shoot_radial_eigenvalue', 'partition_sum', 'characteristic_exact', 'thermo_exact',
           'central_difference', 'fd_step']

logger = logging.getLogger(__name__)

_EPS = float(finfo(float).eps)


@dataclass(frozen=True)
class ShootingConfig:
    """Integration domain and convergence settings of the shooting eigensolver.

    Attributes
    ----------
    r_min
        Innermost radius, where the regular small-r solution is imposed.
    r_max
        Outermost radius, far in the classically forbidden region.
    steps
        Number of Numerov grid points on the logarithmic grid between `r_min` and `r_max`.
    node_target
        The number of radial nodes of the wanted state, equal to n_r.
    tol
        Absolute energy tolerance of the eigenvalue.
    max_iter
        Iteration budget shared by bracket expansion, node bisection and refinement.
    """
    r_min: float
    r_max: float
    steps: int = 40_000
    node_target: int = 0
    tol: float = 1e-10
    max_iter: int = 200

    def __post_init__(self):
        if not 0.0 < self.r_min < self.r_max:
            raise ValueError(f"The shooting domain needs 0 < r_min < r_max, got [{self.r_min}, {self.r_max}].")
        if self.steps < 1000:
            raise ValueError(f"The shooting grid needs at least 1000 steps, got {self.steps}.")
        if self.node_target < 0:
            raise ValueError(f"The node target must be non-negative, got {self.node_target}.")
        if not self.tol > 0.0:
            raise ValueError(f"The eigenvalue tolerance must be positive, got {self.tol}.")


@dataclass(frozen=True)
class TruncationPolicy:
    """Truncation rule for the exact partition sum."""
    rel_term_floor: float = 1e-16
    max_terms: int = 100_000

    def __post_init__(self):
        if not 0.0 < self.rel_term_floor < 1.0:
            raise ValueError(f"rel_term_floor must lie in (0, 1), got {self.rel_term_floor}.")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be positive, got {self.max_terms}.")


class PartitionSum(NamedTuple):
    """Value of the truncated ladder sum with the bound on the omitted tail and the number of terms used."""
    value: float
    tail_bound: float
    terms: int


def default_shooting_config(n_r: int, m: int, fields: FieldConfig, potential: PotentialParams,
                            consts: Constants) -> ShootingConfig:
    """Shooting configuration sized for the state (n_r, m).

    r_min = 1e-6 r0 and r_max is the outer classical turning point of a state two levels above the wanted one,
    plus ten decay lengths 1/√ω.
    """
    n_r = _check_int('n_r', n_r, 0)
    d = derived_params(m, fields, potential, consts)
    if d.omega == 0.0:
        raise ValueError("The radial problem has no bound states when both v0 and b are zero.")
    w, g = d.omega, d.gamma
    eta = 2.0 * w * (g + 2.0 * n_r + 5.0)
    u = (eta + sqrt(eta**2 - 4.0 * w**2 * g**2)) / (2.0 * w**2)
    return ShootingConfig(r_min=1e-6 * potential.r0, r_max=sqrt(u) + 10.0 / sqrt(w), node_target=n_r)


def shoot_radial_eigenvalue(n_r: int, m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants,
                            cfg: ShootingConfig | None = None) -> float:
    """Radial eigenvalue with n_r nodes found by shooting on the radial equation.

    The radial equation f'' + f'/r - γ²/r² f - ω²r² f + η f = 0 is marched outwards from f ~ r^|γ| with the
    Numerov method on a logarithmic grid. The number of sign changes of the solution grows by one each time η
    crosses an eigenvalue, so bisection on the node count isolates the n_r-th eigenvalue, after which Brent's
    method refines the zero of f(r_max).

    Parameters
    ----------
    n_r, m
        Radial and azimuthal quantum numbers.
    fields, potential, consts
        The model parameters.
    cfg
        Shooting configuration. Defaults to `default_shooting_config`.

    Returns
    -------
    float
        The radial energy.

    Raises
    ------
    ConvergenceError
        If the eigenvalue could not be bracketed or refined within the iteration budget.
    """
    n_r = _check_int('n_r', n_r, 0)
    d = derived_params(m, fields, potential, consts)
    if d.omega == 0.0:
        raise ValueError("The radial problem has no bound states when both v0 and b are zero.")
    if cfg is None:
        cfg = default_shooting_config(n_r, m, fields, potential, consts)
    elif cfg.node_target != n_r:
        raise ValueError(f"The shooting configuration targets {cfg.node_target} nodes but n_r = {n_r}.")

    hb, mu = consts.hbar, consts.mu
    coupling = consts.e * fields.b * (m + flux_ratio(fields, consts)) / (hb * consts.c)

    def energy(eta: float) -> float:
        return hb**2 / (2.0 * mu) * (eta + coupling) - 2.0 * potential.v0

    x0 = log(cfg.r_min)
    h = (log(cfg.r_max) - x0) / (cfg.steps - 1)
    w2, g = d.omega**2, d.gamma

    def march(eta: float) -> tuple[int, float, float]:
        return numerov_radial(x0, h, cfg.steps, eta, w2, g)

    tol_eta = cfg.tol * 2.0 * mu / hb**2
    spacing = 4.0 * d.omega

    # Below η = 2ω|γ| the effective wavenumber is negative everywhere and the solution has no nodes.
    lo = 2.0 * d.omega * g
    n_lo = march(lo)[0]
    hi, step = lo + spacing, spacing
    n_hi = march(hi)[0]
    iterations = 0
    while n_hi <= n_r:
        lo, n_lo = hi, n_hi
        step *= 2.0
        hi += step
        n_hi = march(hi)[0]
        iterations += 1
        if iterations > cfg.max_iter:
            raise ConvergenceError(f"Could not bracket the radial state with {n_r} nodes.", (energy(lo), energy(hi)))
    logger.debug("Initial node bracket [%g, %g] with %d and %d nodes", energy(lo), energy(hi), n_lo, n_hi)

    while not (n_lo == n_r and n_hi == n_r + 1):
        if hi - lo <= tol_eta or iterations > cfg.max_iter:
            raise ConvergenceError(f"Node bisection failed to isolate the radial state with {n_r} nodes.",
                                   (energy(lo), energy(hi)))
        mid = 0.5 * (lo + hi)
        n_mid = march(mid)[0]
        if n_mid > n_r:
            hi, n_hi = mid, n_mid
        else:
            lo, n_lo = mid, n_mid
        iterations += 1
    logger.debug("Isolated eigenvalue bracket [%g, %g]", energy(lo), energy(hi))

    ref = max(march(lo)[2], march(hi)[2])

    def tail(eta: float) -> float:
        _, y, lscale = march(eta)
        return y * exp(lscale - ref)

    try:
        eta = brentq(tail, lo, hi, xtol=tol_eta, rtol=4 * _EPS, maxiter=cfg.max_iter)
    except RuntimeError as exc:
        raise ConvergenceError(f"Eigenvalue refinement failed: {exc}", (energy(lo), energy(hi))) from exc
    return energy(eta)


def partition_sum(Xi: float, Omega: float, beta: float, policy: TruncationPolicy | None = None) -> PartitionSum:
    """Exact characteristic function X = -Σ_{n≥1} ln(1 - exp(-β ω_n)) of the ladder ω_n = (Ω/2)(2n + Ξ).

    Returns
    -------
    PartitionSum
        The truncated sum, a rigorous bound on the omitted tail, and the number of terms.

    Raises
    ------
    ValueError
        If β ≤ 0, Ω ≤ 0 or Ξ ≤ -2 (a non-positive lowest mode).
    ConvergenceError
        If the tail bound does not reach the policy floor within `policy.max_terms` terms.
    """
    policy = policy or TruncationPolicy()
    if not beta > 0.0:
        raise ValueError(f"The inverse temperature must be positive, got {beta}.")
    if not Omega > 0.0:
        raise ValueError(f"The ladder spacing Omega must be positive, got {Omega}.")
    if not Xi > -2.0:
        raise ValueError(f"The ladder needs Xi > -2 for a positive lowest mode, got {Xi}.")
    value, tail, terms, status = ladder_partition_sum(float(Xi), float(Omega), float(beta),
                                                      policy.rel_term_floor, policy.max_terms)
    if status != 0:
        raise ConvergenceError(f"The partition sum did not converge in {policy.max_terms} terms "
                               f"(tail bound {tail:.3g} at beta = {beta}).")
    return PartitionSum(value, tail, terms)


def characteristic_exact(Xi: float, Omega: float, beta: float, policy: TruncationPolicy | None = None) -> float:
    """Exact characteristic function X = ln Z of the ladder spectrum, see `partition_sum`."""
    return partition_sum(Xi, Omega, beta, policy).value


def fd_step(x: float, order: int = 1) -> float:
    """Default finite-difference step: max(|x|, 1) ε^{1/3} for first and max(|x|, 1) ε^{1/6} for second derivatives."""
    return max(abs(x), 1.0) * _EPS**(1/3 if order == 1 else 1/6)


def central_difference(f: Callable[[float], float], x: float, order: int = 1, h: float | None = None) -> float:
    """Central finite-difference derivative with one level of Richardson extrapolation.

    Parameters
    ----------
    f
        Scalar function of one variable.
    x
        Evaluation point.
    order
        Derivative order, 1 or 2.
    h
        Step size. Defaults to `fd_step(x, order)`.

    Returns
    -------
    float

    Raises
    ------
    FloatingPointError
        If the function produces NaN near x.
    """
    if order not in (1, 2):
        raise ValueError(f"Only first and second derivatives are supported, got order {order}.")
    h = fd_step(x, order) if h is None else float(h)
    if not h > 0.0:
        raise ValueError(f"The finite-difference step must be positive, got {h}.")
    h = (x + h) - x

    with warnings.catch_warnings():
        warnings.simplefilter('error', RuntimeWarning)
        if order == 1:
            def d(s):
                return (f(x + s) - f(x - s)) / (2.0 * s)
        else:
            f0 = f(x)

            def d(s):
                return (f(x + s) - 2.0 * f0 + f(x - s)) / (s * s)
        try:
            v = (4.0 * d(0.5 * h) - d(h)) / 3.0
        except RuntimeWarning as exc:
            raise FloatingPointError(f"Finite difference at x = {x} failed: {exc}") from exc
    if isnan(v):
        raise FloatingPointError(f"Finite difference at x = {x} produced NaN.")
    return float(v)


def _temperature_step(T: float, order: int) -> float:
    return min(fd_step(T, order), 0.25 * T)


def thermo_exact(Xi: float, Omega: float, T: float, policy: TruncationPolicy | None = None):
    """Thermodynamics of the ladder spectrum from the exact partition sum.

    Uses F = -T X, U = T² ∂X/∂T, S = -∂F/∂T = X + T ∂X/∂T and C_V = ∂U/∂T = 2T ∂X/∂T + T² ∂²X/∂T², with the
    temperature derivatives of X taken by central differences.

    Returns
    -------
    ThermoPoint
        A point with the backend tag 'exact' and no field responses.
    """
    from .thermo import ThermoPoint

    if not T > 0.0:
        raise ValueError(f"The temperature must be positive, got {T}.")

    def x_of_t(t: float) -> float:
        return characteristic_exact(Xi, Omega, 1.0 / t, policy)

    x = x_of_t(T)
    dx = central_difference(x_of_t, T, 1, _temperature_step(T, 1))
    d2x = central_difference(x_of_t, T, 2, _temperature_step(T, 2))
    return ThermoPoint(T=T, X=x, F=-T * x, U=T**2 * dx, S=x + T * dx, Cv=2.0 * T * dx + T**2 * d2x, backend='exact')
