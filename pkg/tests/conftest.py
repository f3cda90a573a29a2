import pytest

from liebider import MapLaw, block_upper_triangular, solve_space, upper_triangular


@pytest.fixture(scope="session")
def t2():
    return upper_triangular(2, 1)


@pytest.fixture(scope="session")
def t3():
    return upper_triangular(3, 2)


@pytest.fixture(scope="session")
def t4():
    return upper_triangular(4, 2)


@pytest.fixture(scope="session")
def block21():
    return block_upper_triangular([2, 1], 1)


@pytest.fixture(scope="session")
def t2_space(t2):
    return solve_space(t2.alg, MapLaw.LIE_BIDER)


@pytest.fixture(scope="session")
def t3_space(t3):
    return solve_space(t3.alg, MapLaw.LIE_BIDER)


@pytest.fixture(scope="session")
def t4_space(t4):
    return solve_space(t4.alg, MapLaw.LIE_BIDER)
