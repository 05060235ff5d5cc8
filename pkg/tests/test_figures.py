import numpy as np
import pytest

from qpdot.figures import FIGURES, FigureDefaults, build_figure, write_figure
from qpdot.pseudodot import ParameterRecord, thermo_point


def test_recipes():
    assert sorted(FIGURES) == list(range(1, 19))
    assert FIGURES[1].filename == 'fig01.csv'
    assert FIGURES[18].filename == 'fig18.csv'
    assert [FIGURES[i].quantity for i in range(5, 9)] == ['U', 'Cv', 'F', 'S']
    assert all(FIGURES[i].variable == 'r0' and FIGURES[i].values == (2.0, 4.0, 6.0, 8.0) for i in range(9, 15))
    assert FIGURES[16].fixed['r0'] == 5.0
    assert FIGURES[17].fixed['r0'] == 5.0
    assert FIGURES[18].fixed['r0'] == 20.0


def test_default_parameters():
    d = FigureDefaults()
    assert (d.record.v0, d.record.r0, d.record.k_osc, d.record.n_r, d.record.n_z) == (5.0, 1.0, 1.0, 1, 1)
    assert d.backend == 'paper'
    with pytest.raises(ValueError):
        FigureDefaults(backend='other')


def test_energy_versus_field_for_various_fluxes():
    data = build_figure(1, steps=6)
    assert data.names == ['E[Phi_AB=5]', 'E[Phi_AB=10]', 'E[Phi_AB=15]', 'E[Phi_AB=20]']
    np.testing.assert_allclose(data.x, np.linspace(0.0, 10.0, 6))
    assert all(s.is_increasing() for s in data)
    values = np.array([s.values for s in data])
    assert (np.diff(values, axis=0) > 0.0).all()


def test_energy_versus_field_for_various_radial_states():
    data = build_figure(2, steps=5)
    values = np.array([s.values for s in data])
    np.testing.assert_allclose(np.diff(values, axis=0), np.tile(np.sqrt(data.x**2 + 40.0), (3, 1)), rtol=1e-12)


def test_energy_decreases_with_the_electric_field():
    data = build_figure(3, steps=6)
    assert data.variable == 'eps'
    assert all((s.differences() < 0.0).all() for s in data)


def test_thermodynamic_figure_backends():
    paper = build_figure(7, steps=4)
    closed = build_figure(7, steps=4, backend='closed')
    record = FigureDefaults().record.with_value('m', 0).with_value('b', 2.0).with_value('phi_ab', 5.0)
    record = record.with_value('eps', 5.0).with_value('T', 0.5)
    assert paper[0].values[0] == pytest.approx(thermo_point(record, 'paper').F)
    assert closed[0].values[0] == pytest.approx(thermo_point(record, 'closed').F)
    assert paper[0].values[0] != closed[0].values[0]


def test_figure_values_are_finite():
    for fig_id in (9, 13, 15, 18):
        data = build_figure(fig_id, steps=4)
        assert all(s.finite.all() for s in data)


def test_custom_defaults():
    defaults = FigureDefaults(record=ParameterRecord(v0=2.0, n_r=1, n_z=1), steps=3)
    data = build_figure(4, defaults)
    assert len(data.x) == 3
    assert data.names == ['E[m=0]', 'E[m=1]', 'E[m=2]', 'E[m=3]']


def test_write_figure(tmp_path):
    path = write_figure(16, tmp_path / 'out', steps=5)
    assert path == tmp_path / 'out' / 'fig16.csv'
    lines = path.read_text().split('\n')
    assert lines[0] == 'Phi_AB,I[m=0],I[m=1],I[m=2],I[m=3]'
    assert len(lines) == 7


def test_unknown_figure():
    with pytest.raises(ValueError):
        build_figure(19)
    with pytest.raises(ValueError):
        write_figure(0)
