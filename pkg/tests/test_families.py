import pytest

from bogomolov.exactlinalg import Field
from bogomolov.families import (
    FamilySpec,
    ParameterError,
    class2_corpus,
    freest_gen_heisenberg,
    heisenberg,
    heisenberg_as_quotient,
    heisenberg_ideal,
    random_class2,
    theorem1_ideal,
    theorem1_quotient,
    y_index,
)
from bogomolov.liealg import center, derived_subalgebra, nilpotency_class, validate


@pytest.mark.parametrize("d", range(2, 9))
def test_gen_heisenberg_dims(d):
    L = freest_gen_heisenberg(d)
    assert L.dim == d * (d + 1) // 2
    assert validate(L)
    assert center(L) == derived_subalgebra(L)


def test_y_index_is_a_bijection():
    d = 6
    pos = [y_index(d, i, j) for i in range(d) for j in range(i + 1, d)]
    assert pos == list(range(d, d * (d + 1) // 2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_heisenberg(n):
    H = heisenberg(n)
    assert H.dim == 2 * n + 1 and validate(H)
    assert center(H).dim == 1 and nilpotency_class(H) == 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_heisenberg_quotient_matches(n):
    Lq, M = heisenberg_as_quotient(n)
    assert Lq.same_structure(heisenberg(n))
    assert M.dim == n * (2 * n - 1) - 1


def test_theorem1_quotient_shape():
    Lq, M = theorem1_quotient(1)
    assert Lq.dim == 14 and M.dim == 1 and validate(Lq)
    Lq2, M2 = theorem1_quotient(2)
    assert Lq2.dim == 43 and M2.dim == 2
    with pytest.raises(ParameterError):
        theorem1_ideal(1, 4)


def test_heisenberg_ideal_n1_is_zero():
    assert heisenberg_ideal(1).dim == 0


def test_random_class2_deterministic():
    a, b = random_class2(4, 2, 7), random_class2(4, 2, 7)
    assert a.same_structure(b)
    assert validate(a) and nilpotency_class(a) <= 2
    with pytest.raises(ParameterError):
        random_class2(3, 4, 0)


def test_corpus_deterministic_and_bounded():
    c1, c2 = class2_corpus(10, 3), class2_corpus(10, 3)
    assert [n for n, _ in c1] == [n for n, _ in c2]
    assert all(L.dim <= 8 for _, L in c1)


def test_family_spec():
    F5 = Field.prime(5)
    assert FamilySpec("heisenberg", (2,), F5).build().field == F5
    L, M = FamilySpec("theorem1", (1, 5)).build_with_ideal()
    assert L.dim == 15 and M.dim == 1
    L, M = FamilySpec("abelian", (2,)).build_with_ideal()
    assert M is None
    with pytest.raises(ParameterError):
        FamilySpec("heisenberg", (1, 2)).build()
    with pytest.raises(ParameterError):
        FamilySpec("nope", ()).build()
