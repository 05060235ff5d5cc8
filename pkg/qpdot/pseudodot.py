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

"""High-level access to a quantum pseudodot at one point of parameter space."""
import logging
from dataclasses import asdict, dataclass, fields as dc_fields, replace
from typing import Any

from .oracle import TruncationPolicy, thermo_exact
from .spectrum import (Constants, FieldConfig, PotentialParams, QuantumNumbers, _check_int, axial_energy,
                       derived_params, ladder_params, radial_energy, stark_shift)
from .thermo import Backend, BACKENDS, ThermoPoint, field_response, paper_thermo, thermo_closed

__all__ = ['ParameterRecord', 'QuantumPseudodot', 'thermo_point', 'QUANTITIES', 'VARIABLES']

logger = logging.getLogger(__name__)

QUANTITIES: tuple[str, ...] = ('E', 'X', 'F', 'U', 'S', 'Cv', 'I', 'M', 'chi')
"""Quantities that can be evaluated and swept."""

THERMO_QUANTITIES = frozenset(('X', 'F', 'U', 'S', 'Cv'))
FIELD_QUANTITIES = frozenset(('I', 'M', 'chi'))

VARIABLES: dict[str, str] = {'B': 'b', 'Phi_AB': 'phi_ab', 'eps': 'eps', 'r0': 'r0', 'V0': 'v0', 'K': 'k_osc',
                             'T': 'T', 'm': 'm', 'n_r': 'n_r', 'n_z': 'n_z'}
"""Map from the public variable names to the `ParameterRecord` attributes."""

INTEGER_VARIABLES = frozenset(('m', 'n_r', 'n_z'))


@dataclass(frozen=True)
class ParameterRecord:
    """The full parameter record of one evaluation point.

    The defaults are V0 = 5, r0 = K = 1, the lowest state n_r = 0, n_z = 1, m = 0, no applied fields and T = 1.
    """
    v0: float = 5.0
    r0: float = 1.0
    k_osc: float = 1.0
    b: float = 0.0
    phi_ab: float = 0.0
    eps: float = 0.0
    m: int = 0
    n_r: int = 0
    n_z: int = 1
    T: float = 1.0

    def __post_init__(self):
        # Build the value objects once to run their validation.
        _ = (self.potential, self.fields, self.quantum_numbers)
        if not self.T > 0.0:
            raise ValueError(f"The temperature must be positive, got {self.T}.")

    @property
    def potential(self) -> PotentialParams:
        return PotentialParams(v0=self.v0, r0=self.r0, k_osc=self.k_osc)

    @property
    def fields(self) -> FieldConfig:
        return FieldConfig(b=self.b, phi_ab=self.phi_ab, eps=self.eps)

    @property
    def quantum_numbers(self) -> QuantumNumbers:
        return QuantumNumbers(n_r=self.n_r, n_z=self.n_z, m=self.m)

    def with_value(self, variable: str, value: Any) -> 'ParameterRecord':
        """A copy with one variable, given by its public name ('B', 'Phi_AB', ...) or attribute name, replaced."""
        name = VARIABLES.get(variable, variable)
        if name not in {f.name for f in dc_fields(self)}:
            raise ValueError(f"Unknown parameter '{variable}', use one of {', '.join(VARIABLES)}.")
        if variable in INTEGER_VARIABLES or name in INTEGER_VARIABLES:
            if isinstance(value, float) and value.is_integer():
                value = int(value)
            value = _check_int(name, value)
        return replace(self, **{name: value})

    def as_dict(self) -> dict:
        return asdict(self)


def thermo_point(record: ParameterRecord, backend: Backend = 'closed', consts: Constants | None = None,
                 with_fields: bool = True, policy: TruncationPolicy | None = None) -> ThermoPoint:
    """Thermodynamic state of the ladder spectrum defined by `record` at the record's temperature.

    Parameters
    ----------
    record
        The parameter record. The temperature and the azimuthal quantum number are taken from it.
    backend
        One of 'exact', 'closed' and 'paper'.
    consts
        Unit system, natural units by default.
    with_fields
        Whether to include the persistent current, the magnetization and the susceptibility.
    policy
        Truncation policy of the exact partition sum.

    Returns
    -------
    ThermoPoint
    """
    if backend not in BACKENDS:
        raise ValueError(f"Unknown backend '{backend}', use one of {', '.join(BACKENDS)}.")
    consts = consts or Constants()
    lp = ladder_params(record.m, record.fields, record.potential, consts)
    match backend:
        case 'exact':
            point = thermo_exact(lp.Xi, lp.Omega, record.T, policy)
        case 'closed':
            point = thermo_closed(lp.a, record.T, consts)
        case _:
            point = paper_thermo(lp.a, record.T, consts)
    if with_fields:
        point = point.with_response(field_response(record.m, record.fields, record.potential, consts, record.T,
                                                   backend, policy))
    return point


class QuantumPseudodot:
    """A quantum pseudodot in external magnetic, Aharonov-Bohm and electric fields.

    Parameters
    ----------
    record
        The model parameters, quantum numbers and temperature.
    consts
        The unit system. Defaults to natural units.
    backend
        Default thermodynamic backend, one of 'exact', 'closed' and 'paper'.
    policy
        Truncation policy of the exact partition sum.
    """

    def __init__(self, record: ParameterRecord | None = None, consts: Constants | None = None,
                 backend: Backend = 'closed', policy: TruncationPolicy | None = None):
        if backend not in BACKENDS:
            raise ValueError(f"Unknown backend '{backend}', use one of {', '.join(BACKENDS)}.")
        self.record: ParameterRecord = record or ParameterRecord()
        self.consts: Constants = consts or Constants()
        self.backend: str = backend
        self.policy: TruncationPolicy = policy or TruncationPolicy()

    def __repr__(self) -> str:
        r = self.record
        return (f"QuantumPseudodot(V0={r.v0:g}, r0={r.r0:g}, K={r.k_osc:g}, B={r.b:g}, Phi_AB={r.phi_ab:g}, "
                f"eps={r.eps:g}, n_r={r.n_r}, n_z={r.n_z}, m={r.m}, T={r.T:g}, backend='{self.backend}')")

    @classmethod
    def from_values(cls, consts: Constants | None = None, backend: Backend = 'closed', **values) -> 'QuantumPseudodot':
        """Create a pseudodot from parameter values given by their public or attribute names."""
        record = ParameterRecord()
        for name, value in values.items():
            record = record.with_value(name, value)
        return cls(record, consts, backend)

    def with_value(self, variable: str, value: Any) -> 'QuantumPseudodot':
        """A copy of the pseudodot with one parameter replaced."""
        return QuantumPseudodot(self.record.with_value(variable, value), self.consts, self.backend, self.policy)

    @property
    def potential(self) -> PotentialParams:
        return self.record.potential

    @property
    def fields(self) -> FieldConfig:
        return self.record.fields

    @property
    def quantum_numbers(self) -> QuantumNumbers:
        return self.record.quantum_numbers

    @property
    def radial_energy(self) -> float:
        r = self.record
        return radial_energy(r.n_r, r.m, self.fields, self.potential, self.consts)

    @property
    def axial_energy(self) -> float:
        return axial_energy(self.record.n_z, self.fields, self.potential, self.consts)

    @property
    def energy(self) -> float:
        """Total energy E = E_r + E_z of the state."""
        return self.radial_energy + self.axial_energy

    def energy_report(self) -> dict[str, float]:
        """The energies, the ladder offset and the derived parameters of the state."""
        r = self.record
        d = derived_params(r.m, self.fields, self.potential, self.consts)
        lp = ladder_params(r.m, self.fields, self.potential, self.consts)
        er, ez = self.radial_energy, self.axial_energy
        return {'E_r': er, 'E_z': ez, 'E': er + ez, 'stark_shift': stark_shift(self.fields, self.potential, self.consts),
                'a': lp.a, 'Xi': lp.Xi, 'Omega': lp.Omega, 'omega_c': d.omega_c, 'xi': d.xi, 'gamma': d.gamma,
                'omega': d.omega, 'phi0': d.phi0}

    def thermo(self, backend: Backend | None = None, with_fields: bool = True) -> ThermoPoint:
        """Thermodynamic state at the record temperature, see `thermo_point`."""
        return thermo_point(self.record, backend or self.backend, self.consts, with_fields, self.policy)

    def evaluate(self, quantities: str | tuple[str, ...] | list[str], backend: Backend | None = None) -> dict[str, float]:
        """Evaluate the requested quantities.

        The energy, the thermodynamic quantities and the field responses are computed independently, so a failure
        in one group leaves the others intact. Quantities of a failed group are returned as NaN and the failure is
        logged as a warning.

        Parameters
        ----------
        quantities
            Quantity names from `QUANTITIES`.
        backend
            Thermodynamic backend, the pseudodot default if None.

        Returns
        -------
        dict
            Quantity values keyed by name, in the requested order.
        """
        quantities = (quantities,) if isinstance(quantities, str) else tuple(quantities)
        unknown = [q for q in quantities if q not in QUANTITIES]
        if unknown:
            raise ValueError(f"Unknown quantities {unknown}, use {', '.join(QUANTITIES)}.")
        backend = backend or self.backend
        values: dict[str, float] = {}

        if 'E' in quantities:
            values.update(self._guarded(('E',), lambda: {'E': self.energy}))
        requested = set(quantities)
        if requested & THERMO_QUANTITIES:
            def state():
                p = thermo_point(self.record, backend, self.consts, False, self.policy)
                return {'X': p.X, 'F': p.F, 'U': p.U, 'S': p.S, 'Cv': p.Cv}
            values.update(self._guarded(tuple(requested & THERMO_QUANTITIES), state))
        if requested & FIELD_QUANTITIES:
            def response():
                r = self.record
                return field_response(r.m, self.fields, self.potential, self.consts, r.T, backend, self.policy)._asdict()
            values.update(self._guarded(tuple(requested & FIELD_QUANTITIES), response))
        return {q: values[q] for q in quantities}

    def _guarded(self, names: tuple[str, ...], compute) -> dict[str, float]:
        try:
            result = compute()
            return {n: float(result[n]) for n in names}
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            logger.warning("Could not evaluate %s at %s: %s", ', '.join(sorted(names)), self, exc)
            return {n: float('nan') for n in names}
