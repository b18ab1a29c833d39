import pytest

from stable_resolve.ideal import minimalize, stable_corpus
from stable_resolve.poset import AdmissiblePoset, Symbol

P_DEFAULT = 32003

# <a,b,c>^2 written as exponent vectors
M2_GENS = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]

a2, ab, ac, b2, bc, c2 = M2_GENS


def sym(I, m):
    return Symbol(tuple(I), m)


@pytest.fixture(scope="session")
def m2():
    return minimalize(M2_GENS)


@pytest.fixture(scope="session")
def m2_poset(m2):
    return AdmissiblePoset(m2)


@pytest.fixture(scope="session")
def principal():
    return minimalize([(1,)])


@pytest.fixture(scope="session")
def corpus():
    return stable_corpus(seed=0, count=50)


@pytest.fixture(scope="session")
def small_corpus():
    return stable_corpus(seed=7, count=12, max_d=3, max_degree=4, max_gens=10)
