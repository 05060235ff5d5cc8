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

"""Energy levels and radial wavefunctions of a quantum pseudodot in external fields.

The pseudodot confines a carrier with the pseudoharmonic potential V0 (r/r0 - r0/r)² in the plane and a harmonic
oscillator of stiffness K along z. A uniform magnetic field B, an Aharonov-Bohm flux Φ_AB and an electric field ε
along z are applied. The problem separates into a radial and an axial part, and both spectra are analytic.
"""
from dataclasses import dataclass
from numbers import Integral
from typing import Literal, NamedTuple

import pandas as pd
from numpy import abs as nabs, asarray, exp, inf, log, ndarray, pi, sqrt
from scipy.integrate import quad
from scipy.optimize import brentq

from .specfun import kummer_1f1

__all__ = ['Constants', 'PotentialParams', 'FieldConfig', 'QuantumNumbers', 'DerivedParams', 'LadderParams',
           'cyclotron_frequency', 'flux_quantum', 'flux_ratio', 'derived_params', 'eta_of_energy',
           'radial_energy', 'radial_energy_cetin', 'axial_energy', 'stark_shift', 'total_energy', 'ladder_params',
           'landau_limit_energy', 'radial_wavefunction', 'radial_equation_residual', 'energy_levels']


def _check_int(name: str, value, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise TypeError(f"The quantum number '{name}' must be an integer, got {value!r}.")
    if minimum is not None and value < minimum:
        raise ValueError(f"The quantum number '{name}' must be ≥ {minimum}, got {value}.")
    return int(value)


def _set_floats(obj, names) -> None:
    for name in names:
        object.__setattr__(obj, name, float(getattr(obj, name)))


@dataclass(frozen=True)
class Constants:
    """The unit system.

    The default is the natural unit system ħ = c = e = k_B = μ = 1 used for every figure. Temperatures are always
    given in energy units, that is, k_B T.
    """
    hbar: float = 1.0
    c: float = 1.0
    e: float = 1.0
    kB: float = 1.0
    mu: float = 1.0

    def __post_init__(self):
        _set_floats(self, ('hbar', 'c', 'e', 'kB', 'mu'))
        for name in ('hbar', 'c', 'e', 'kB', 'mu'):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"The constant '{name}' must be strictly positive, got {getattr(self, name)}.")

    @classmethod
    def gaussian(cls, mass_ratio: float = 1.0) -> 'Constants':
        """Gaussian-cgs constants for a carrier with effective mass `mass_ratio` × m_e.

        The model equations are written in Gaussian units (ω_c = eB/μc), so these values can be used as such.
        """
        from astropy import constants as ac
        return cls(hbar=ac.hbar.cgs.value, c=ac.c.cgs.value, e=ac.e.gauss.value, kB=ac.k_B.cgs.value,
                   mu=mass_ratio * ac.m_e.cgs.value)


@dataclass(frozen=True)
class PotentialParams:
    """Confinement parameters: the pseudoharmonic height `v0`, its zero point `r0` and the axial stiffness `k_osc`.

    `v0 = 0` is accepted and gives the pure Landau problem in the plane.
    """
    v0: float = 5.0
    r0: float = 1.0
    k_osc: float = 1.0

    def __post_init__(self):
        _set_floats(self, ('v0', 'r0', 'k_osc'))
        if not self.v0 >= 0.0:
            raise ValueError(f"The potential height v0 must be non-negative, got {self.v0}.")
        if not self.r0 > 0.0:
            raise ValueError(f"The potential zero point r0 must be positive, got {self.r0}.")
        if not self.k_osc > 0.0:
            raise ValueError(f"The axial oscillator constant k_osc must be positive, got {self.k_osc}.")


@dataclass(frozen=True)
class FieldConfig:
    """External fields: magnetic flux density `b`, Aharonov-Bohm flux `phi_ab` and electric field `eps` along z."""
    b: float = 0.0
    phi_ab: float = 0.0
    eps: float = 0.0

    def __post_init__(self):
        _set_floats(self, ('b', 'phi_ab', 'eps'))
        if not self.b >= 0.0:
            raise ValueError(f"The magnetic field b must be non-negative, got {self.b}.")
        if not self.phi_ab >= 0.0:
            raise ValueError(f"The Aharonov-Bohm flux phi_ab must be non-negative, got {self.phi_ab}.")
        if not abs(self.eps) < inf:
            raise ValueError(f"The electric field eps must be finite, got {self.eps}.")


@dataclass(frozen=True)
class QuantumNumbers:
    """Quantum numbers of a bound state: radial `n_r ≥ 0`, axial `n_z ≥ 1` and azimuthal `m`."""
    n_r: int = 0
    n_z: int = 1
    m: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'n_r', _check_int('n_r', self.n_r, 0))
        object.__setattr__(self, 'n_z', _check_int('n_z', self.n_z, 1))
        object.__setattr__(self, 'm', _check_int('m', self.m))


@dataclass(frozen=True)
class DerivedParams:
    """Field-dependent parameters of the radial equation for one azimuthal quantum number."""
    omega_c: float
    xi: float
    gamma: float
    omega: float
    phi0: float


class LadderParams(NamedTuple):
    """Offset `a` of the total spectrum and the ladder parameters Ξ = 2a/ħ and Ω."""
    a: float
    Xi: float
    Omega: float


def cyclotron_frequency(fields: FieldConfig, consts: Constants) -> float:
    """Cyclotron frequency ω_c = eB/(μc)."""
    return consts.e * fields.b / (consts.mu * consts.c)


def flux_quantum(consts: Constants) -> float:
    """Flux quantum Φ0 = 2πħc/e."""
    return 2.0 * pi * consts.hbar * consts.c / consts.e


def flux_ratio(fields: FieldConfig, consts: Constants) -> float:
    """Aharonov-Bohm flux in units of the flux quantum, ξ = Φ_AB/Φ0."""
    return fields.phi_ab / flux_quantum(consts)


def _omega2(b: float, potential: PotentialParams, consts: Constants) -> float:
    hb, mu = consts.hbar, consts.mu
    return 2.0 * mu * potential.v0 / (hb**2 * potential.r0**2) + (consts.e * b / (2.0 * hb * consts.c))**2


def _gamma(mx: float, potential: PotentialParams, consts: Constants) -> float:
    return sqrt(mx**2 + 2.0 * consts.mu * potential.v0 * potential.r0**2 / consts.hbar**2)


def derived_params(m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants) -> DerivedParams:
    """Derived parameters (ω_c, ξ, |γ|, ω, Φ0) of the radial equation for azimuthal quantum number `m`.

    The radial equation reads f'' + f'/r - γ²/r² f - ω² r² f + η f = 0 with
    ω² = 2μV0/(ħ²r0²) + e²B²/(4ħ²c²) and γ² = 2μV0r0²/ħ² + (m + ξ)².
    """
    m = _check_int('m', m)
    xi = flux_ratio(fields, consts)
    return DerivedParams(omega_c=cyclotron_frequency(fields, consts), xi=xi,
                         gamma=float(_gamma(m + xi, potential, consts)),
                         omega=float(sqrt(_omega2(fields.b, potential, consts))),
                         phi0=flux_quantum(consts))


def eta_of_energy(E: float, m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants) -> float:
    """The energy-dependent constant η = 2μ(E + 2V0)/ħ² - eB(m + ξ)/(ħc) of the radial equation."""
    m = _check_int('m', m)
    hb = consts.hbar
    return (2.0 * consts.mu * (E + 2.0 * potential.v0) / hb**2
            - consts.e * fields.b * (m + flux_ratio(fields, consts)) / (hb * consts.c))


def _radial_root(b: float, potential: PotentialParams, consts: Constants) -> float:
    """√(ħ²ω_c² + 8V0ħ²/(r0²μ)), the level spacing of the radial spectrum over two."""
    hb, mu = consts.hbar, consts.mu
    wc = consts.e * b / (mu * consts.c)
    return sqrt(hb**2 * wc**2 + 8.0 * potential.v0 * hb**2 / (potential.r0**2 * mu))


def radial_energy(n_r: int, m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants) -> float:
    """Radial energy E_r of the state (n_r, m).

    E_r = (ħω_c/2)(m + ξ) - 2V0 + √(ħ²ω_c² + 8V0ħ²/(r0²μ)) [n_r + 1/2 + √((m + ξ)² + 2μV0r0²/ħ²)/2]

    Raises
    ------
    ValueError
        If v0 = 0 and b = 0, when the radial problem has no bound states.
    """
    n_r = _check_int('n_r', n_r, 0)
    m = _check_int('m', m)
    if potential.v0 == 0.0 and fields.b == 0.0:
        raise ValueError("The radial problem has no bound states when both v0 and b are zero.")
    mx = m + flux_ratio(fields, consts)
    wc = cyclotron_frequency(fields, consts)
    return float(0.5 * consts.hbar * wc * mx - 2.0 * potential.v0
                 + _radial_root(fields.b, potential, consts) * (n_r + 0.5 + 0.5 * _gamma(mx, potential, consts)))


def radial_energy_cetin(n_r: int, m: int, fields: FieldConfig, potential: PotentialParams,
                        consts: Constants) -> float:
    """The radial energy in the rewritten form ħ√(ω_c² + 8V0/(r0²μ)) (n + (β + 1)/2) + ħω_c(m + α)/2 - 2V0.

    Here α = ξ and β = |γ|. Numerically equal to `radial_energy`.
    """
    n_r = _check_int('n_r', n_r, 0)
    d = derived_params(m, fields, potential, consts)
    if d.omega == 0.0:
        raise ValueError("The radial problem has no bound states when both v0 and b are zero.")
    hb = consts.hbar
    return float(hb * sqrt(d.omega_c**2 + 8.0 * potential.v0 / (potential.r0**2 * consts.mu)) * (n_r + (d.gamma + 1.0) / 2.0)
                 + hb * d.omega_c * (m + d.xi) / 2.0 - 2.0 * potential.v0)


def stark_shift(fields: FieldConfig, potential: PotentialParams, consts: Constants) -> float:
    """The electric-field shift -ħ²e²ε²/(4K) of the axial spectrum."""
    return 0.0 - (consts.hbar * consts.e * fields.eps)**2 / (4.0 * potential.k_osc)


def axial_energy(n_z: int, fields: FieldConfig, potential: PotentialParams, consts: Constants) -> float:
    """Axial energy E_z = (ħ/2)√(K/μ)(n_z + 1) - ħ²e²ε²/(4K), with n_z = 1, 2, ..."""
    n_z = _check_int('n_z', n_z, 1)
    return float(0.5 * consts.hbar * sqrt(potential.k_osc / consts.mu) * (n_z + 1)
                 + stark_shift(fields, potential, consts))


def total_energy(q: QuantumNumbers, fields: FieldConfig, potential: PotentialParams, consts: Constants) -> float:
    """Total energy E = E_r + E_z of the state `q`."""
    return radial_energy(q.n_r, q.m, fields, potential, consts) + axial_energy(q.n_z, fields, potential, consts)


def _ladder_offset(m: int, b: float, phi_ab: float, eps: float, potential: PotentialParams,
                   consts: Constants) -> float:
    hb, mu, e, c = consts.hbar, consts.mu, consts.e, consts.c
    mx = m + phi_ab / flux_quantum(consts)
    return float(0.5 * _radial_root(b, potential, consts) * (1.0 + _gamma(mx, potential, consts))
                 + hb * e * b / (2.0 * mu * c) * mx
                 - 2.0 * potential.v0
                 - (hb * e * eps)**2 / (4.0 * potential.k_osc)
                 + 0.5 * hb * sqrt(potential.k_osc / mu))


def ladder_params(m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants,
                  omega: float = 1.0) -> LadderParams:
    """Offset a of the total spectrum and the ladder parameters Ξ = 2a/ħ and Ω.

    The offset collects every level-independent term of the total energy,
    a = ½√(ħ²ω_c² + 8V0ħ²/(r0²μ)) [1 + √((m+ξ)² + 2μV0r0²/ħ²)] + (ħeB/2μc)(m+ξ) - 2V0 - ħ²e²ε²/(4K) + (ħ/2)√(K/μ).
    """
    m = _check_int('m', m)
    if not omega > 0.0:
        raise ValueError(f"The ladder spacing omega must be positive, got {omega}.")
    a = _ladder_offset(m, fields.b, fields.phi_ab, fields.eps, potential, consts)
    return LadderParams(a=a, Xi=2.0 * a / consts.hbar, Omega=float(omega))


def landau_limit_energy(n: int, m: int, fields: FieldConfig, consts: Constants,
                        mode: Literal['derived', 'paper'] = 'derived') -> float:
    """Radial energy without the pseudoharmonic potential.

    Parameters
    ----------
    n
        Radial quantum number, n ≥ 0.
    m
        Azimuthal quantum number.
    fields
        External fields.
    consts
        Unit system.
    mode
        'derived' gives the V0 → 0 limit of the radial energy, (ħω_c/2)[2n + 1 + |m+ξ| + (m+ξ)]. 'paper' gives
        the published zero-potential formula, which carries (m+ξ)/2 in place of the last (m+ξ).

    Returns
    -------
    float
    """
    n = _check_int('n', n, 0)
    m = _check_int('m', m)
    mx = m + flux_ratio(fields, consts)
    hw = 0.5 * consts.hbar * cyclotron_frequency(fields, consts)
    match mode:
        case 'derived':
            return float(hw * (2 * n + 1 + abs(mx) + mx))
        case 'paper':
            return float(hw * (2 * n + 1 + abs(mx) + 0.5 * mx))
        case _:
            raise ValueError(f"Unknown Landau limit mode '{mode}', use 'derived' or 'paper'.")


def _wavefunction(zeta: ndarray, n_r: int, gamma: float) -> ndarray:
    return exp(-0.5 * zeta) * zeta**(0.5 * gamma) * kummer_1f1(-n_r, gamma + 1.0, zeta)


def _normalization_radius(n_r: int, gamma: float, omega: float) -> float:
    """Radius where the envelope exp(-ζ/2) ζ^p, p = |γ|/2 + n_r, has dropped to 1e-14 of its peak."""
    p = 0.5 * gamma + n_r
    zp = 2.0 * p
    lpeak = -0.5 * zp + (p * log(zp) if p > 0.0 else 0.0)
    target = lpeak + log(1e-14)

    def lenv(z):
        return -0.5 * z + (p * log(z) if p > 0.0 else 0.0) - target

    zl = max(zp, 1e-300)
    zh = zl + 64.0
    while lenv(zh) > 0.0:
        zh *= 2.0
    return float(sqrt(brentq(lenv, zl, zh) / omega))


def radial_wavefunction(n_r: int, m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants,
                        r: float | ndarray, normalize: bool = False) -> float | ndarray:
    """Radial wavefunction f(r) = exp(-ζ/2) ζ^{|γ|/2} 1F1(-n_r; |γ| + 1; ζ) with ζ = ωr².

    Parameters
    ----------
    n_r, m
        Radial and azimuthal quantum numbers.
    fields, potential, consts
        The model parameters.
    r
        Radius or array of radii, r ≥ 0.
    normalize
        If True, scale f so that ∫ f² r dr = 1. The integral runs up to the radius where the envelope has
        decayed to 1e-14 of its peak.

    Returns
    -------
    float or ndarray
    """
    n_r = _check_int('n_r', n_r, 0)
    d = derived_params(m, fields, potential, consts)
    if d.omega == 0.0:
        raise ValueError("The radial problem has no bound states when both v0 and b are zero.")
    ra = asarray(r, dtype=float)
    if (ra < 0.0).any():
        raise ValueError("The radius must be non-negative.")
    f = _wavefunction(d.omega * ra**2, n_r, d.gamma)
    if normalize:
        rmax = _normalization_radius(n_r, d.gamma, d.omega)
        norm2 = quad(lambda x: _wavefunction(d.omega * x * x, n_r, d.gamma)**2 * x, 0.0, rmax, limit=200)[0]
        f = f / sqrt(norm2)
    return float(f) if ra.ndim == 0 else f


def radial_equation_residual(n_r: int, m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants,
                             r: float | ndarray) -> float | ndarray:
    """Relative residual of the radial equation for the analytic eigenstate (n_r, m) at radii r > 0.

    The derivatives of f are evaluated analytically through the derivative identities of 1F1, and the residual
    f'' + f'/r - γ²/r² f - ω²r² f + η f is divided by the sum of the absolute values of its five terms.
    """
    n_r = _check_int('n_r', n_r, 0)
    d = derived_params(m, fields, potential, consts)
    eta = eta_of_energy(radial_energy(n_r, m, fields, potential, consts), m, fields, potential, consts)
    ra = asarray(r, dtype=float)
    if (ra <= 0.0).any():
        raise ValueError("The residual is evaluated at strictly positive radii.")

    w, g = d.omega, d.gamma
    a, b, p = -float(n_r), g + 1.0, 0.5 * g
    z = w * ra**2
    f0 = kummer_1f1(a, b, z)
    f1 = a / b * kummer_1f1(a + 1.0, b + 1.0, z)
    f2 = a * (a + 1.0) / (b * (b + 1.0)) * kummer_1f1(a + 2.0, b + 2.0, z)
    u = -0.5 + p / z
    env = exp(-0.5 * z) * z**p

    f = env * f0
    fz = env * (u * f0 + f1)
    fzz = env * ((u * u - p / z**2) * f0 + 2.0 * u * f1 + f2)
    fr = 2.0 * w * ra * fz
    frr = 2.0 * w * fz + 4.0 * w**2 * ra**2 * fzz

    terms = (frr, fr / ra, -g**2 / ra**2 * f, -w**2 * ra**2 * f, eta * f)
    res = nabs(sum(terms)) / sum(nabs(t) for t in terms)
    return float(res) if ra.ndim == 0 else res


def energy_levels(n_r_max: int, n_z_max: int, m_values, fields: FieldConfig, potential: PotentialParams,
                  consts: Constants) -> pd.DataFrame:
    """Tabulate the total spectrum over 0 ≤ n_r ≤ n_r_max, 1 ≤ n_z ≤ n_z_max and the given m values.

    Returns
    -------
    DataFrame
        Columns n_r, n_z, m, E_r, E_z and E, sorted by E.
    """
    rows = []
    for m in m_values:
        for n_r in range(n_r_max + 1):
            er = radial_energy(n_r, m, fields, potential, consts)
            for n_z in range(1, n_z_max + 1):
                ez = axial_energy(n_z, fields, potential, consts)
                rows.append((n_r, n_z, int(m), er, ez, er + ez))
    df = pd.DataFrame(rows, columns=['n_r', 'n_z', 'm', 'E_r', 'E_z', 'E'])
    return df.sort_values('E', kind='stable').reset_index(drop=True)
