import pytest
from qpdot.grid import Grid


def test_grid_steps():
    grid = Grid(0.5, 2.5, steps=5)
    assert grid.xmin == 0.5
    assert grid.xmax == 2.5
    assert grid.dx == 0.5
    assert grid.steps == 5
    assert grid.points.shape == (5,)
    assert grid.points[0] == 0.5
    assert grid.points[-1] == 2.5


def test_grid_dx():
    grid = Grid(0.5, 2.5, dx=0.5)
    assert grid.xmin == 0.5
    assert grid.xmax == 2.5
    assert grid.dx == 0.5
    assert grid.steps == 5
    assert grid.points.shape == (5,)


def test_grid_dx_rounds_to_nearest_spacing():
    grid = Grid(0.0, 1.0, dx=0.3)
    assert grid.steps == 4
    assert grid.dx == pytest.approx(1 / 3)
    assert grid.points[-1] == 1.0


def test_integer_grid():
    grid = Grid(0, 3, steps=4, integer=True)
    assert grid.points.tolist() == [0, 1, 2, 3]
    assert grid.points.dtype.kind == 'i'
    assert list(grid) == [0, 1, 2, 3]
    assert all(isinstance(v, int) for v in grid)


def test_integer_grid_with_spacing():
    grid = Grid(0, 6, dx=2, integer=True)
    assert grid.points.tolist() == [0, 2, 4, 6]
    assert grid.steps == 4


@pytest.mark.parametrize('kwargs', [dict(xmin=0, xmax=3, steps=3), dict(xmin=0.5, xmax=3, steps=4),
                                    dict(xmin=0, xmax=5, dx=2), dict(xmin=0, xmax=3, dx=0.5)])
def test_integer_grid_rejects_non_integral_points(kwargs):
    with pytest.raises(ValueError):
        Grid(integer=True, **kwargs)


def test_grid_needs_steps_or_dx():
    with pytest.raises(ValueError):
        Grid(0.0, 1.0)
    with pytest.raises(ValueError):
        Grid(0.0, 1.0, steps=5, dx=0.1)


@pytest.mark.parametrize('kwargs', [dict(xmin=1.0, xmax=1.0, steps=5), dict(xmin=2.0, xmax=1.0, steps=5),
                                    dict(xmin=0.0, xmax=1.0, steps=1), dict(xmin=0.0, xmax=1.0, dx=2.0)])
def test_invalid_grid(kwargs):
    with pytest.raises(ValueError):
        Grid(**kwargs)


def test_grid_repr():
    assert repr(Grid(0.0, 10.0, steps=51)) == "Grid 0.0000 - 10.0000: dx = 0.2000, n =   51"
    assert len(Grid(0.0, 10.0, steps=51)) == 51
