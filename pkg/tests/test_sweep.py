import logging

import numpy as np
import pytest

from qpdot.pseudodot import ParameterRecord, QuantumPseudodot
from qpdot.sweep import SweepSpec, evaluate_records, run_sweep


def test_sweep_spec_defaults():
    spec = SweepSpec('B', 0.0, 10.0)
    assert spec.steps == 50
    assert spec.quantities == ('E',)
    assert spec.backend == 'closed'
    assert len(spec.records()) == 50
    assert spec.records()[-1].b == 10.0


def test_sweep_spec_quantity_string():
    spec = SweepSpec('T', 0.5, 5.0, 10, quantities='U, Cv,S')
    assert spec.quantities == ('U', 'Cv', 'S')


@pytest.mark.parametrize('kwargs', [dict(variable='X'), dict(quantities=('E', 'Q')), dict(quantities=''),
                                    dict(backend='other'), dict(steps=1), dict(start=5.0, stop=1.0),
                                    dict(variable='B', start=-1.0), dict(variable='m', start=0.5, stop=3.0),
                                    dict(variable='n_z', start=0.0, stop=3.0), dict(variable='T', start=0.0)])
def test_invalid_sweep_spec(kwargs):
    args = dict(variable='B', start=0.0, stop=4.0, steps=5) | kwargs
    with pytest.raises(ValueError):
        SweepSpec(**args)


def test_sweep_row_count_and_grid():
    ss = run_sweep(SweepSpec('eps', 0.0, 10.0, 21, ParameterRecord(b=2.0, phi_ab=5.0, m=1), ('E', 'U')))
    assert ss.variable == 'eps'
    assert ss.names == ['E', 'U']
    assert len(ss.x) == 21
    np.testing.assert_allclose(ss.x, np.linspace(0.0, 10.0, 21))
    assert ss['E'].finite.all()
    text = ss.to_csv()
    assert text.split('\n')[0] == 'eps,E,U'
    assert len(text.strip().split('\n')) == 22


def test_landau_sweep_is_affine_in_the_field():
    fixed = ParameterRecord(v0=0.0, m=0, phi_ab=0.0)
    ss = run_sweep(SweepSpec('B', 0.5, 5.0, 10, fixed))
    assert ss['E'].is_affine()
    assert ss['E'].is_increasing()


def test_radial_quantum_number_sweep():
    ss = run_sweep(SweepSpec('n_r', 0, 5, 6, ParameterRecord(b=2.0, phi_ab=5.0, m=1)))
    assert ss.x.tolist() == [0, 1, 2, 3, 4, 5]
    d = ss['E'].differences()
    np.testing.assert_allclose(d, 2 * np.sqrt(11.0), rtol=1e-12)


def test_azimuthal_sweep_over_negative_values():
    ss = run_sweep(SweepSpec('m', -2, 2, 5))
    e = ss['E'].values
    np.testing.assert_allclose(e, e[::-1], rtol=1e-12)


def test_sweep_with_processes_matches_serial():
    spec = SweepSpec('T', 0.5, 5.0, 8, ParameterRecord(b=2.0, phi_ab=5.0, m=1), ('F', 'M'))
    serial = run_sweep(spec)
    parallel = run_sweep(spec, processes=2)
    for q in ('F', 'M'):
        np.testing.assert_array_equal(serial[q].values, parallel[q].values)


def test_failed_points_are_nan_with_a_warning(caplog):
    spec = SweepSpec('B', 0.0, 2.0, 5, ParameterRecord(v0=0.0, m=1), ('chi',), 'paper')
    with caplog.at_level(logging.WARNING, logger='qpdot'):
        ss = run_sweep(spec)
    chi = ss['chi'].values
    assert np.isnan(chi[0])
    assert np.isfinite(chi[1:]).all()
    assert any('Could not evaluate' in r.message for r in caplog.records)
    assert ss.to_csv().split('\n')[1] == '0,'


def test_evaluate_records_keeps_the_input_order():
    records = [ParameterRecord(T=t) for t in (3.0, 1.0, 2.0)]
    rows = evaluate_records(records, ('U',))
    assert rows == [QuantumPseudodot(r).evaluate(('U',)) for r in records]
    assert len({r['U'] for r in rows}) == 3
