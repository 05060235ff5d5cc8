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

from .errors import QPDotError, ConvergenceError, VerificationError
from .spectrum import (Constants, PotentialParams, FieldConfig, QuantumNumbers, DerivedParams, LadderParams,
                       cyclotron_frequency, flux_quantum, flux_ratio, derived_params, eta_of_energy, radial_energy,
                       radial_energy_cetin, axial_energy, stark_shift, total_energy, ladder_params,
                       landau_limit_energy, radial_wavefunction, radial_equation_residual, energy_levels)
from .specfun import hurwitz_zeta, riemann_zeta, kummer_1f1
from .oracle import (ShootingConfig, TruncationPolicy, PartitionSum, shoot_radial_eigenvalue, partition_sum,
                     characteristic_exact, thermo_exact, central_difference)
from .thermo import (LadderSpectrum, ThermoPoint, FieldResponse, characteristic_closed, characteristic_asymptotic,
                     thermo_closed, paper_thermo, field_response, offset_derivatives)
from .pseudodot import ParameterRecord, QuantumPseudodot, thermo_point
from .grid import Grid
from .dataset import Series, SeriesSet
from .sweep import SweepSpec, run_sweep

__version__ = '0.1.0'
