import pytest

from leibnizalg import GF, QQ
from leibnizalg.corpus import aff1, e4, heisenberg, reduce_mod, sl2


@pytest.fixture(scope="session")
def qq():
    return QQ


@pytest.fixture(scope="session")
def f2():
    return GF(2)


@pytest.fixture(scope="session")
def f5():
    return GF(5)


@pytest.fixture(scope="session")
def alg_e4():
    return e4()


@pytest.fixture(scope="session")
def alg_sl2():
    return sl2()


@pytest.fixture(scope="session")
def alg_heis():
    return heisenberg()


@pytest.fixture(scope="session")
def alg_aff1():
    return aff1()


@pytest.fixture(scope="session")
def alg_e4_mod2():
    return reduce_mod(e4(), 2)


@pytest.fixture(scope="session")
def alg_e4_mod5():
    return reduce_mod(e4(), 5)
