import pytest

from freeplane import fixtures as fx


@pytest.fixture
def fano():
    return fx.fano()


@pytest.fixture
def quad():
    return fx.quad()


@pytest.fixture
def star():
    return fx.star()


@pytest.fixture
def mk8():
    return fx.mobius_kantor()


@pytest.fixture
def rigid():
    return fx.rigid()


@pytest.fixture
def two_points():
    return fx.two_points()


@pytest.fixture
def path3():
    return fx.path3()


@pytest.fixture
def triangle():
    return fx.triangle()
