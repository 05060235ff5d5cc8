from dataclasses import replace
from math import exp, log, pi, sin, cos

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qpdot.errors import ConvergenceError
from qpdot.oracle import (ShootingConfig, TruncationPolicy, central_difference, characteristic_exact,
                          default_shooting_config, fd_step, partition_sum, shoot_radial_eigenvalue, thermo_exact)
from qpdot.spectrum import Constants, FieldConfig, PotentialParams, radial_energy

NATURAL = Constants()


@pytest.mark.parametrize('n_r, m, b, phi, v0, r0', [(0, 0, 0.0, 0.0, 5.0, 1.0), (1, 1, 2.0, 5.0, 5.0, 1.0),
                                                    (2, 0, 1.0, 0.0, 5.0, 1.0), (0, -1, 1.0, 2.0, 5.0, 1.0),
                                                    (0, 0, 2.0, 0.0, 0.0, 1.0), (3, 1, 0.5, 1.0, 5.0, 2.0)])
def test_shooting_matches_the_analytic_spectrum(n_r, m, b, phi, v0, r0):
    fields, potential = FieldConfig(b=b, phi_ab=phi), PotentialParams(v0=v0, r0=r0)
    shot = shoot_radial_eigenvalue(n_r, m, fields, potential, NATURAL)
    assert shot == pytest.approx(radial_energy(n_r, m, fields, potential, NATURAL), rel=1e-6)


def test_default_shooting_config():
    cfg = default_shooting_config(2, 1, FieldConfig(b=2.0), PotentialParams(), NATURAL)
    assert cfg.node_target == 2
    assert cfg.r_min == pytest.approx(1e-6)
    assert cfg.r_max > 3.0
    with pytest.raises(ValueError):
        default_shooting_config(0, 0, FieldConfig(), PotentialParams(v0=0.0), NATURAL)


@pytest.mark.parametrize('kwargs', [dict(r_min=0.0, r_max=1.0), dict(r_min=2.0, r_max=1.0),
                                    dict(r_min=1e-6, r_max=5.0, steps=10), dict(r_min=1e-6, r_max=5.0, tol=0.0),
                                    dict(r_min=1e-6, r_max=5.0, node_target=-1)])
def test_invalid_shooting_config(kwargs):
    with pytest.raises(ValueError):
        ShootingConfig(**kwargs)


def test_shooting_node_target_mismatch():
    cfg = default_shooting_config(1, 0, FieldConfig(), PotentialParams(), NATURAL)
    with pytest.raises(ValueError):
        shoot_radial_eigenvalue(0, 0, FieldConfig(), PotentialParams(), NATURAL, cfg)


def test_shooting_iteration_budget():
    cfg = replace(default_shooting_config(3, 0, FieldConfig(), PotentialParams(), NATURAL), max_iter=0)
    with pytest.raises(ConvergenceError) as exc:
        shoot_radial_eigenvalue(3, 0, FieldConfig(), PotentialParams(), NATURAL, cfg)
    assert exc.value.bracket is not None
    assert 'last bracket' in str(exc.value)


@pytest.mark.parametrize('Xi, value', [(1.0, 0.38644168033), (3.0, 0.13395922)])
def test_partition_sum_values(Xi, value):
    ps = partition_sum(Xi, 1.0, 1.0)
    assert ps.value == pytest.approx(value, abs=1e-8)
    assert ps.tail_bound <= 1e-16 * ps.value
    assert ps.terms > 10
    assert characteristic_exact(Xi, 1.0, 1.0) == ps.value


@given(st.floats(-1.5, 10.0), st.floats(0.2, 3.0), st.floats(0.05, 5.0))
@settings(max_examples=50)
def test_partition_sum_matches_direct_summation(Xi, Omega, beta):
    n = np.arange(1, 20_000)
    direct = -np.log1p(-np.exp(-beta * Omega * (n + 0.5 * Xi))).sum()
    assert characteristic_exact(Xi, Omega, beta) == pytest.approx(direct, rel=1e-12)


@pytest.mark.parametrize('args', [(-2.0, 1.0, 1.0), (-3.0, 1.0, 1.0), (1.0, 0.0, 1.0), (1.0, 1.0, 0.0),
                                  (1.0, 1.0, -1.0)])
def test_partition_sum_invalid_arguments(args):
    with pytest.raises(ValueError):
        partition_sum(*args)


def test_partition_sum_term_budget():
    with pytest.raises(ConvergenceError):
        partition_sum(1.0, 1.0, 0.01, TruncationPolicy(max_terms=3))


@given(st.floats(-1.5, 10.0), st.floats(0.05, 5.0), st.floats(1.01, 3.0))
@settings(max_examples=50)
def test_characteristic_function_decreases_with_beta_and_xi(Xi, beta, factor):
    x = characteristic_exact(Xi, 1.0, beta)
    assert characteristic_exact(Xi, 1.0, factor * beta) < x
    assert characteristic_exact(Xi + factor - 1.0, 1.0, beta) < x


@pytest.mark.parametrize('Xi, Omega, beta', [(1.0, 1.0, 1.0), (-1.5, 0.5, 0.2), (2.8472, 1.0, 0.05)])
def test_tail_bound_covers_the_omitted_terms(Xi, Omega, beta):
    loose = partition_sum(Xi, Omega, beta, TruncationPolicy(rel_term_floor=1e-6))
    tight = partition_sum(Xi, Omega, beta)
    assert tight.terms > loose.terms
    assert 0.0 <= tight.value - loose.value <= loose.tail_bound
    doubled = partition_sum(Xi, Omega, beta, TruncationPolicy(max_terms=2 * tight.terms))
    assert abs(doubled.value - tight.value) <= tight.tail_bound


@pytest.mark.parametrize('kwargs', [dict(rel_term_floor=0.0), dict(rel_term_floor=1.0), dict(max_terms=0)])
def test_invalid_truncation_policy(kwargs):
    with pytest.raises(ValueError):
        TruncationPolicy(**kwargs)


def test_fd_step():
    assert fd_step(0.0) == pytest.approx(np.finfo(float).eps**(1/3))
    assert fd_step(100.0, 2) == pytest.approx(100 * np.finfo(float).eps**(1/6))


@pytest.mark.parametrize('x', [0.0, 0.7, 2.5, 30.0])
def test_central_difference(x):
    assert central_difference(sin, x) == pytest.approx(cos(x), rel=1e-9, abs=1e-10)
    assert central_difference(sin, x, 2) == pytest.approx(-sin(x), rel=1e-6, abs=1e-6)
    assert central_difference(lambda t: exp(0.1 * t), x) == pytest.approx(0.1 * exp(0.1 * x), rel=1e-9)


def test_central_difference_errors():
    with pytest.raises(ValueError):
        central_difference(sin, 1.0, 3)
    with pytest.raises(ValueError):
        central_difference(sin, 1.0, 1, -1e-3)
    with pytest.raises(FloatingPointError):
        central_difference(np.log, 0.0)
    with pytest.raises(FloatingPointError):
        central_difference(lambda x: float('nan'), 1.0)


@pytest.mark.parametrize('Xi, T', [(1.0, 0.5), (2.8472, 1.0), (0.0, 5.0)])
def test_exact_thermodynamic_identities(Xi, T):
    tp = thermo_exact(Xi, 1.0, T)
    assert tp.backend == 'exact'
    assert tp.F == pytest.approx(tp.U - T * tp.S, rel=1e-10, abs=1e-12)
    assert tp.F == pytest.approx(-T * characteristic_exact(Xi, 1.0, 1.0 / T))
    dudt = central_difference(lambda t: thermo_exact(Xi, 1.0, t).U, T, 1, 1e-2 * T)
    assert tp.Cv == pytest.approx(dudt, rel=1e-5)
    dfdt = central_difference(lambda t: -t * characteristic_exact(Xi, 1.0, 1.0 / t), T, 1, 1e-2 * T)
    assert tp.S == pytest.approx(-dfdt, rel=1e-6)
    assert tp.I is None


def test_exact_thermodynamics_at_low_temperature():
    # Only the lowest mode is populated
    tp = thermo_exact(1.0, 1.0, 0.05)
    e1 = 1.5
    assert tp.U == pytest.approx(e1 * exp(-e1 / 0.05), rel=1e-3)
    assert tp.Cv > 0.0


@pytest.mark.parametrize('Xi', [1.0, 2.8472])
@pytest.mark.parametrize('T', [0.5, 1.0, 5.0, 50.0])
def test_exact_heat_capacity_matches_the_mode_sum(Xi, T):
    w = (np.arange(1, 100_000) + 0.5 * Xi) / T
    cv = (w**2 * np.exp(-w) / np.expm1(-w)**2).sum()
    assert thermo_exact(Xi, 1.0, T).Cv == pytest.approx(cv, rel=1e-7)


def test_exact_thermo_rejects_non_positive_temperature():
    with pytest.raises(ValueError):
        thermo_exact(1.0, 1.0, 0.0)


def test_high_temperature_partition_sum():
    x = characteristic_exact(0.0, 1.0, 0.01)
    assert x == pytest.approx(pi**2 / (6 * 0.01) + 0.5 * log(0.01) - 0.5 * log(2 * pi), rel=1e-5)
