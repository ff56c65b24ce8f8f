import pytest

from kummer_lcd import (hermitian_curve, hermitian_quotient_curve,
                        lifted_hermitian_curve, norm_trace_curve)


@pytest.fixture(scope="session")
def h2():
    return hermitian_curve(2)


@pytest.fixture(scope="session")
def h3():
    return hermitian_curve(3)


@pytest.fixture(scope="session")
def h4():
    return hermitian_curve(4)


@pytest.fixture(scope="session")
def c1():
    return hermitian_quotient_curve(4)


@pytest.fixture(scope="session")
def c2():
    return lifted_hermitian_curve(2, 3)


@pytest.fixture(scope="session")
def nt():
    return norm_trace_curve(2, 3)


@pytest.fixture(scope="session")
def family(h2, h3, h4, c1, c2, nt):
    """The six curves every sweep-style check runs over."""
    return (h2, h3, h4, c1, c2, nt)
