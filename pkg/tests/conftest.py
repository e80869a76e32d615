import pytest

from bogomolov.exactlinalg import Field
from bogomolov.families import (
    abelian,
    class2_corpus,
    freest_gen_heisenberg,
    heisenberg,
    theorem1_quotient,
)

Q = Field.rationals()
GF2, GF3, GF5 = Field.prime(2), Field.prime(3), Field.prime(5)

CORPUS_SEED = 20240601


def named_corpus(field=Q):
    out = [("abelian-3", abelian(3, field)), ("heisenberg-1", heisenberg(1, field)),
           ("heisenberg-2", heisenberg(2, field)), ("L3", freest_gen_heisenberg(3, field))]
    return out + class2_corpus(12, CORPUS_SEED, 8, field)


@pytest.fixture(scope="session")
def corpus():
    return named_corpus()


@pytest.fixture(scope="session")
def t1_small():
    return theorem1_quotient(1)
