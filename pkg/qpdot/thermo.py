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

"""Thermodynamics of the pseudodot ladder spectrum.

The total spectrum is mapped to the equally spaced ladder ω_n = (Ω/2)(2n + Ξ) with Ξ = 2a/ħ, where a is the
level-independent offset of the total energy. Three backends give the thermodynamic quantities:

exact
    The truncated partition sum with finite-difference derivatives (see `qpdot.oracle`).
closed
    The first-order closed-form characteristic function in A = 1/2 - a/ħ, differentiated analytically.
paper
    The published closed-form expressions for U, C_V, F, S, I, M and χ, evaluated as printed.
"""
from dataclasses import asdict, dataclass, replace
from math import log, pi, sqrt
from typing import Literal, NamedTuple

from scipy.special import gammaln

from .oracle import TruncationPolicy, central_difference, characteristic_exact, thermo_exact
from .specfun import ZETA3, hurwitz_zeta, riemann_zeta
from .spectrum import (Constants, FieldConfig, PotentialParams, _check_int, _ladder_offset, _radial_root,
                       flux_quantum, ladder_params)

__all__ = ['BACKENDS', 'Backend', 'LadderSpectrum', 'ThermoPoint', 'FieldResponse', 'OffsetDerivatives',
           'characteristic_closed', 'characteristic_asymptotic', 'thermo_closed', 'paper_thermo',
           'dX_ddelta_paper', 'dX_ddelta_residue', 'offset_derivatives', 'field_response',
           'paper_current_chain_rule', 'free_energy']

Backend = Literal['exact', 'closed', 'paper']
BACKENDS: tuple[str, ...] = ('exact', 'closed', 'paper')

_C = 2.0 - pi**2 / 4.0


def _check_backend(backend: str) -> str:
    if backend not in BACKENDS:
        raise ValueError(f"Unknown backend '{backend}', use one of {', '.join(BACKENDS)}.")
    return backend


def _check_temperature(T: float) -> float:
    T = float(T)
    if not T > 0.0:
        raise ValueError(f"The temperature must be positive, got {T}.")
    return T


@dataclass(frozen=True)
class LadderSpectrum:
    """The ladder spectrum ω_n = (Ω/2)(2n + Ξ) with Ξ = 2a/ħ."""
    a: float
    Xi: float
    Omega: float = 1.0

    def __post_init__(self):
        if not self.Omega > 0.0:
            raise ValueError(f"The ladder spacing Omega must be positive, got {self.Omega}.")

    @classmethod
    def from_offset(cls, a: float, consts: Constants, Omega: float = 1.0) -> 'LadderSpectrum':
        return cls(a=float(a), Xi=2.0 * a / consts.hbar, Omega=float(Omega))

    @classmethod
    def from_params(cls, m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants,
                    Omega: float = 1.0) -> 'LadderSpectrum':
        return cls(*ladder_params(m, fields, potential, consts, Omega))

    def delta(self, beta: float) -> float:
        """The Mellin variable δ = Ωβ/4π."""
        return self.Omega * beta / (4.0 * pi)


@dataclass(frozen=True)
class ThermoPoint:
    """Thermodynamic state at one temperature, tagged with the backend that produced it.

    S and C_V are dimensionless (k_B = 1). The field responses I, M and χ are optional.
    """
    T: float
    X: float
    F: float
    U: float
    S: float
    Cv: float
    backend: str
    I: float | None = None
    M: float | None = None
    chi: float | None = None

    def __post_init__(self):
        _check_temperature(self.T)
        _check_backend(self.backend)

    def with_response(self, response: 'FieldResponse') -> 'ThermoPoint':
        return replace(self, I=response.I, M=response.M, chi=response.chi)

    def as_dict(self) -> dict:
        return asdict(self)


class FieldResponse(NamedTuple):
    """Persistent current I = -∂F/∂Φ_AB, magnetization M = -∂F/∂B and susceptibility χ = ∂M/∂B."""
    I: float
    M: float
    chi: float


class OffsetDerivatives(NamedTuple):
    """Partial derivatives of the ladder offset a with respect to the fields."""
    da_dB: float
    da_dPhi: float
    d2a_dB2: float


def characteristic_closed(a: float, beta: float, consts: Constants) -> float:
    """Closed-form characteristic function, first order in A = 1/2 - a/ħ.

    X = A [ln(4π/β) + β/2 - (2 - π²/4)π²/(3β)] - ln(4π/β) - 11β/48 + π²/(6β)
    """
    if not beta > 0.0:
        raise ValueError(f"The inverse temperature must be positive, got {beta}.")
    A = 0.5 - a / consts.hbar
    L = log(4.0 * pi / beta)
    return A * (L + 0.5 * beta - _C * pi**2 / (3.0 * beta)) - L - 11.0 * beta / 48.0 + pi**2 / (6.0 * beta)


def characteristic_asymptotic(Xi: float, Omega: float, beta: float) -> float:
    """High-temperature expansion of the exact ladder characteristic function.

    Collects the residues of Γ(s) ζ(s+1) ζ(s, q) (βΩ)^(-s), q = 1 + Ξ/2, at s = 1, 0, -1, -2 and -4 (the pole at
    s = -3 has a vanishing residue):

    X ≈ π²/(6βΩ) + ((Ξ+1)/2) ln(βΩ) + ln Γ(q) - ln(2π)/2 + (βΩ/2) ζ(-1, q) - (βΩ)²/24 ζ(-2, q)
        + (βΩ)⁴/2880 ζ(-4, q)

    The expansion converges for βΩ < 2π and is accurate to better than 1e-8 for βΩ ≤ 0.1.
    """
    if not beta > 0.0:
        raise ValueError(f"The inverse temperature must be positive, got {beta}.")
    if not Xi > -2.0:
        raise ValueError(f"The ladder needs Xi > -2, got {Xi}.")
    b = beta * Omega
    q = 1.0 + 0.5 * Xi
    return (pi**2 / (6.0 * b) + 0.5 * (Xi + 1.0) * log(b) + float(gammaln(q)) - 0.5 * log(2.0 * pi)
            + 0.5 * b * hurwitz_zeta(-1.0, q) - b**2 / 24.0 * hurwitz_zeta(-2.0, q)
            + b**4 / 2880.0 * hurwitz_zeta(-4.0, q))


def thermo_closed(a: float, T: float, consts: Constants) -> ThermoPoint:
    """Thermodynamics from the closed-form characteristic function.

    With A = 1/2 - a/ħ and L = ln(4πT), analytic differentiation gives

    - U = -∂X/∂β = A [T - 1/2 - (2 - π²/4)π²T²/3] - T + 11/48 + π²T²/6
    - C_V = ∂U/∂T = A [1 - 2(2 - π²/4)π²T/3] - 1 + π²T/3
    - S = X + U/T = A [L + 1 - 2(2 - π²/4)π²T/3] - L - 1 + π²T/3
    - F = -T X
    """
    T = _check_temperature(T)
    A = 0.5 - a / consts.hbar
    L = log(4.0 * pi * T)
    X = characteristic_closed(a, 1.0 / T, consts)
    U = A * (T - 0.5 - _C * pi**2 * T**2 / 3.0) - T + 11.0 / 48.0 + pi**2 * T**2 / 6.0
    Cv = A * (1.0 - 2.0 * _C * pi**2 * T / 3.0) - 1.0 + pi**2 * T / 3.0
    S = A * (L + 1.0 - 2.0 * _C * pi**2 * T / 3.0) - L - 1.0 + pi**2 * T / 3.0
    return ThermoPoint(T=T, X=X, F=-T * X, U=U, S=S, Cv=Cv, backend='closed')


def paper_thermo(a: float, T: float, consts: Constants) -> ThermoPoint:
    """The published closed-form thermodynamic expressions, evaluated as printed.

    The unreadable symbol in the last denominator of the mean energy is taken as 1. X is the closed-form
    characteristic function the expressions were derived from.
    """
    T = _check_temperature(T)
    A = 0.5 - a / consts.hbar
    p2 = pi**2
    U = A * (T - 0.5 - (p2 / 4.0 - 2.0) * p2 * T**2) - T + 11.0 / 48.0 - p2 * T**2 / 6.0
    Cv = A * (-3.0 + 2.0 / T + 2.0 * p2 / 3.0 * (p2 / 4.0 - 2.0) * T) + 1.0 + 5.0 / (12.0 * T) - p2 / 3.0 * T
    F = A * (-2.0 / T**2 + 2.0 * p2 / 3.0 * (2.0 - p2 / 4.0) * T) - 5.0 / (12.0 * T**2) + p2 / 3.0
    S = 4.0 * A / T**3 - 5.0 / (6.0 * T**3)
    return ThermoPoint(T=T, X=characteristic_closed(a, 1.0 / T, consts), F=F, U=U, S=S, Cv=Cv, backend='paper')


def dX_ddelta_paper(delta: float, Xi: float) -> float:
    """The published δ-derivative of the characteristic function, including its printed π/94 prefactor.

    Diagnostic only; never used for thermodynamic output.
    """
    if not delta > 0.0:
        raise ValueError(f"delta must be positive, got {delta}.")
    d = Xi - 1.0
    bracket = 0.25 - (pi**2 - 8.0) * d + (7.0 * ZETA3 - 8.0) * d**2
    return -pi / (94.0 * delta**2) * bracket - pi / 12.0 * (3.0 * Xi * (Xi + 2.0) + 2.0) + (Xi + 1.0) / (2.0 * delta)


def dX_ddelta_residue(delta: float, Xi: float) -> float:
    """High-temperature form of ∂X/∂δ from the residues at s = 2, 1, 0 of the Mellin representation.

    With β = 4πδ/Ω the derivative is -2π Σ Γ(s)(2πδ)^(-s) ζ(s) 2^(1-s) ζ(s-1, 1 + Ξ/2) over the poles, which gives
    -π/(24δ²) + (Ξ+1)/(2δ) - (π/12)[3Ξ(Ξ+2) + 2].
    """
    if not delta > 0.0:
        raise ValueError(f"delta must be positive, got {delta}.")
    q = 1.0 + 0.5 * Xi
    y = 2.0 * pi * delta
    res2 = riemann_zeta(2.0) / (2.0 * y**2)
    res1 = hurwitz_zeta(0.0, q) / y
    res0 = 2.0 * riemann_zeta(0.0) * hurwitz_zeta(-1.0, q)
    return -2.0 * pi * (res2 + res1 + res0)


def _field_terms(m: int, b: float, phi_ab: float, potential: PotentialParams, consts: Constants):
    hb, mu, e, c = consts.hbar, consts.mu, consts.e, consts.c
    mx = m + phi_ab / flux_quantum(consts)
    root_w = _radial_root(b, potential, consts)
    gamma = sqrt(mx**2 + 2.0 * mu * potential.v0 * potential.r0**2 / hb**2)
    return mx, root_w, gamma


def offset_derivatives(m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants) -> OffsetDerivatives:
    """Analytic derivatives of the ladder offset a with respect to B and Φ_AB.

    With W = ħ²e²B²/(μ²c²) + 8V0ħ²/(r0²μ) and Γ = √((m+ξ)² + 2μV0r0²/ħ²),

    - ∂a/∂B = (1 + Γ) ħ²e²B / (2μ²c²√W) + (ħe/2μc)(m + ξ)
    - ∂a/∂Φ_AB = [√W (m + ξ) / (2Γ) + ħeB/(2μc)] / Φ0
    - ∂²a/∂B² = (1 + Γ) ħ²e² / (2μ²c²) · 8V0ħ²/(r0²μ) / W^(3/2)

    Raises
    ------
    ValueError
        If W = 0 or Γ = 0, where the derivatives are undefined.
    """
    m = _check_int('m', m)
    hb, mu, e, c = consts.hbar, consts.mu, consts.e, consts.c
    mx, root_w, gamma = _field_terms(m, fields.b, fields.phi_ab, potential, consts)
    if root_w == 0.0 or gamma == 0.0:
        raise ValueError("The offset derivatives are undefined when v0 = 0 together with b = 0 or m + xi = 0.")
    k = (hb * e / (mu * c))**2
    da_db = (1.0 + gamma) * k * fields.b / (2.0 * root_w) + hb * e / (2.0 * mu * c) * mx
    da_dphi = (0.5 * root_w * mx / gamma + hb * e * fields.b / (2.0 * mu * c)) / flux_quantum(consts)
    d2a_db2 = (1.0 + gamma) * k / 2.0 * (8.0 * potential.v0 * hb**2 / (potential.r0**2 * mu)) / root_w**3
    return OffsetDerivatives(float(da_db), float(da_dphi), float(d2a_db2))


def free_energy(a: float, T: float, consts: Constants, backend: Backend = 'closed',
                policy: TruncationPolicy | None = None, Omega: float = 1.0) -> float:
    """Free energy F(a, T) of the ladder with offset a on the given backend."""
    T = _check_temperature(T)
    match _check_backend(backend):
        case 'exact':
            return -T * characteristic_exact(2.0 * a / consts.hbar, Omega, 1.0 / T, policy)
        case 'closed':
            return -T * characteristic_closed(a, 1.0 / T, consts)
        case 'paper':
            return paper_thermo(a, T, consts).F


def _paper_prefactor(T: float) -> float:
    return 2.0 / T**2 - 2.0 * pi**2 / 3.0 * _C


def _paper_response(m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants,
                    T: float) -> FieldResponse:
    hb, mu, e, c = consts.hbar, consts.mu, consts.e, consts.c
    b = fields.b
    mx, root_w, gamma = _field_terms(m, b, fields.phi_ab, potential, consts)
    if root_w == 0.0:
        raise ValueError("The published field responses are singular when v0 = 0 and b = 0.")
    w = root_w**2
    p = _paper_prefactor(T)
    current = p * (root_w * mx * pi * e / (hb**2 * c) + e**2 * b * pi / (hb * c))
    magnetization = p * (hb * e**2 * b * (1.0 + gamma) * e * mx / (2.0 * mu**2 * c**2 * root_w) + e * mx / (2.0 * hb * c))
    chi = p * (3.0 * hb**3 * e**4 * b * (1.0 + gamma) / (2.0 * mu**4 * c**4 * w**1.5)
               + 3.0 * hb**5 * e**6 * b**3 * (1.0 + gamma) / (2.0 * mu**6 * c**6 * w**2.5))
    return FieldResponse(float(current), float(magnetization), float(chi))


def paper_current_chain_rule(m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants,
                             T: float) -> float:
    """The published persistent current with the 1/√((m+ξ)² + 2μV0r0²/ħ²) factor of the chain rule restored."""
    T = _check_temperature(T)
    m = _check_int('m', m)
    hb, e, c = consts.hbar, consts.e, consts.c
    mx, root_w, gamma = _field_terms(m, fields.b, fields.phi_ab, potential, consts)
    if gamma == 0.0:
        raise ValueError("The corrected current is undefined when v0 = 0 and m + xi = 0.")
    return float(_paper_prefactor(T) * (root_w * mx * pi * e / (hb**2 * c * gamma) + e**2 * fields.b * pi / (hb * c)))


def field_response(m: int, fields: FieldConfig, potential: PotentialParams, consts: Constants, T: float,
                   backend: Backend = 'closed', policy: TruncationPolicy | None = None) -> FieldResponse:
    """Persistent current, magnetization and magnetic susceptibility.

    Parameters
    ----------
    m
        Azimuthal quantum number.
    fields, potential, consts
        The model parameters.
    T
        Temperature.
    backend
        'closed' applies the chain rule through `offset_derivatives` to the closed-form free energy, which is
        linear in a. 'exact' takes central differences of the exact free energy over Φ_AB and B. 'paper'
        evaluates the published expressions.
    policy
        Truncation policy of the exact partition sum.

    Returns
    -------
    FieldResponse
    """
    T = _check_temperature(T)
    m = _check_int('m', m)
    match _check_backend(backend):
        case 'closed':
            beta = 1.0 / T
            dF_da = T / consts.hbar * (log(4.0 * pi / beta) + 0.5 * beta - _C * pi**2 / (3.0 * beta))
            d = offset_derivatives(m, fields, potential, consts)
            return FieldResponse(-dF_da * d.da_dPhi, -dF_da * d.da_dB, -dF_da * d.d2a_dB2)
        case 'exact':
            def f_of(b: float, phi: float) -> float:
                a = _ladder_offset(m, b, phi, fields.eps, potential, consts)
                return free_energy(a, T, consts, 'exact', policy)

            b, phi = fields.b, fields.phi_ab
            current = -central_difference(lambda x: f_of(b, x), phi, 1)
            magnetization = -central_difference(lambda x: f_of(x, phi), b, 1)
            chi = -central_difference(lambda x: f_of(x, phi), b, 2)
            return FieldResponse(current, magnetization, chi)
        case 'paper':
            return _paper_response(m, fields, potential, consts, T)
