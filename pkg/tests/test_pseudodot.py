import logging
from math import isnan, sqrt

import pytest

from qpdot.pseudodot import QUANTITIES, ParameterRecord, QuantumPseudodot, thermo_point
from qpdot.thermo import field_response, paper_thermo, thermo_closed


def test_parameter_record_defaults():
    r = ParameterRecord()
    values = (r.v0, r.r0, r.k_osc, r.b, r.phi_ab, r.eps, r.m, r.n_r, r.n_z, r.T)
    assert values == (5.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0, 0, 1, 1.0)
    assert r.as_dict()['n_z'] == 1


@pytest.mark.parametrize('kwargs', [dict(v0=-1.0), dict(r0=0.0), dict(b=-2.0), dict(n_z=0), dict(T=0.0),
                                    dict(T=-1.0)])
def test_parameter_record_validation(kwargs):
    with pytest.raises(ValueError):
        ParameterRecord(**kwargs)


def test_parameter_record_with_value():
    r = ParameterRecord()
    assert r.with_value('B', 2.0).b == 2.0
    assert r.with_value('Phi_AB', 5.0).phi_ab == 5.0
    assert r.with_value('phi_ab', 5.0).phi_ab == 5.0
    assert r.with_value('K', 3.0).k_osc == 3.0
    m = r.with_value('m', -2.0).m
    assert m == -2 and isinstance(m, int)
    with pytest.raises(TypeError):
        r.with_value('m', 1.5)
    with pytest.raises(ValueError):
        r.with_value('Q', 1.0)
    with pytest.raises(ValueError):
        r.with_value('V0', -1.0)
    assert r.with_value('V0', 2.0).v0 == 2.0
    assert r.v0 == 5.0


def test_default_energy():
    qp = QuantumPseudodot()
    assert qp.radial_energy == pytest.approx(sqrt(10.0))
    assert qp.axial_energy == pytest.approx(1.0)
    assert qp.energy == pytest.approx(sqrt(10.0) + 1.0)


def test_energy_report():
    qp = QuantumPseudodot.from_values(B=2.0, Phi_AB=5.0, eps=5.0, m=1, n_r=1)
    report = qp.energy_report()
    assert list(report) == ['E_r', 'E_z', 'E', 'stark_shift', 'a', 'Xi', 'Omega', 'omega_c', 'xi', 'gamma', 'omega',
                            'phi0']
    assert report['E_r'] == pytest.approx(13.806862754, rel=1e-9)
    assert report['E_z'] == pytest.approx(-5.25)
    assert report['stark_shift'] == pytest.approx(-6.25)
    assert report['a'] == pytest.approx(1.4236132, rel=1e-6)
    assert report['Xi'] == 2 * report['a']


def test_from_values_and_with_value():
    qp = QuantumPseudodot.from_values(backend='paper', B=2.0, m=1)
    assert qp.backend == 'paper'
    assert qp.record.b == 2.0 and qp.record.m == 1
    qp2 = qp.with_value('T', 3.0)
    assert qp2.record.T == 3.0 and qp.record.T == 1.0
    assert qp2.backend == 'paper'
    assert "backend='paper'" in repr(qp2)
    with pytest.raises(ValueError):
        QuantumPseudodot(backend='other')


def test_thermo_point_backends():
    record = ParameterRecord(b=2.0, phi_ab=5.0, m=1, T=2.0)
    qp = QuantumPseudodot(record)
    a = qp.energy_report()['a']
    closed = thermo_point(record)
    assert closed.backend == 'closed'
    assert closed.U == thermo_closed(a, 2.0, qp.consts).U
    assert closed.M == field_response(1, record.fields, record.potential, qp.consts, 2.0).M
    paper = thermo_point(record, 'paper', with_fields=False)
    assert paper.backend == 'paper'
    assert paper.F == paper_thermo(a, 2.0, qp.consts).F
    assert paper.I is None
    exact = qp.thermo('exact')
    assert exact.backend == 'exact'
    assert exact.chi is not None
    with pytest.raises(ValueError):
        thermo_point(record, 'other')


def test_evaluate_order():
    qp = QuantumPseudodot.from_values(B=2.0, Phi_AB=5.0, m=1)
    values = qp.evaluate(('chi', 'E', 'U', 'I'))
    assert list(values) == ['chi', 'E', 'U', 'I']
    assert values['E'] == pytest.approx(qp.energy)
    assert set(qp.evaluate(QUANTITIES)) == set(QUANTITIES)
    assert list(qp.evaluate('F')) == ['F']


def test_evaluate_unknown_quantity():
    with pytest.raises(ValueError):
        QuantumPseudodot().evaluate(('E', 'Z'))


def test_evaluate_failed_group_is_nan(caplog):
    qp = QuantumPseudodot.from_values(backend='paper', V0=0.0, m=1)
    with caplog.at_level(logging.WARNING, logger='qpdot'):
        values = qp.evaluate(('U', 'M', 'E'))
    assert isnan(values['M'])
    assert isnan(values['E'])
    assert not isnan(values['U'])
    assert len(caplog.records) == 2
