from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bogomolov.exactlinalg import (
    DimensionError,
    Field,
    FieldError,
    SpanBuilder,
    annihilator,
    inverse,
    intersect,
    is_prime,
    kernel,
    mat_mul,
    mat_vec,
    quotient_coordinates,
    rank,
    restricted_kernel,
    rref,
    span,
    subspace_sum,
)

Q = Field.rationals()
GF7 = Field.prime(7)


def zassenhaus_intersection(a, b):
    """Independent oracle: RREF of [[A, A], [B, 0]] and read off the right block."""
    n, F = a.ambient_dim, a.field
    rows = [tuple(r) + tuple(r) for r in a.basis]
    rows += [tuple(r) + (F.zero,) * n for r in b.basis]
    red, piv = rref(rows, F, 2 * n)
    return span([r[n:] for r, p in zip(red, piv) if p >= n], n, F)


small_int = st.integers(-4, 4)


def matrices(rows=st.integers(0, 5), cols=st.integers(1, 6)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small_int, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]).map(lambda m: (m, rc[1])))


def test_field_parse_and_coercion():
    assert Field.parse("Q") == Q
    assert Field.parse("GF:5") == Field.prime(5)
    assert Q("3/6") == Fraction(1, 2)
    assert GF7("1/2") == 4
    assert GF7(-1) == 6
    with pytest.raises(FieldError):
        Field.parse("GF:9")
    with pytest.raises(FieldError):
        Field.parse("R")
    with pytest.raises(FieldError):
        Q(0.5)
    with pytest.raises(FieldError):
        Q(True)
    with pytest.raises(FieldError):
        Field.prime(3)("1/3")


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)


def test_rref_example():
    basis, piv = rref([[2, 4], [1, 3]], Q, 2)
    assert basis == ((1, 0), (0, 1)) and piv == (0, 1)
    basis, piv = rref([[2, 4], [1, 2]], Q, 2)
    assert basis == ((1, 2),) and piv == (0,)


def test_rref_rejects_ragged():
    with pytest.raises(DimensionError):
        rref([[1, 2], [1]], Q, 2)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_is_canonical(mc):
    m, n = mc
    basis, piv = rref(m, Q, n)
    assert list(piv) == sorted(set(piv))
    for r, p in zip(basis, piv):
        assert r[p] == 1
        assert all(other[p] == 0 for other in basis if other is not r)
    # same row space gives the same RREF
    again, _ = rref(list(basis) + [list(basis[0])] if basis else [], Q, n)
    assert again == basis


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(mc):
    m, n = mc
    K = kernel(m, Q, n)
    assert rank(m, Q, n) + K.dim == n
    for v in K.basis:
        assert all(x == 0 for x in mat_vec(m, v, Q))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_modp_matches_reduction_of_integer_rows(mc):
    m, n = mc
    r7 = rank([[x % 7 for x in row] for row in m], GF7, n)
    assert r7 <= rank(m, Q, n)


@settings(max_examples=60, deadline=None)
@given(matrices(), matrices(), st.sampled_from([Q, GF7]))
def test_intersection_against_zassenhaus(ma, mb, F):
    n = min(ma[1], mb[1])
    a = span([r[:n] for r in ma[0]], n, F)
    b = span([r[:n] for r in mb[0]], n, F)
    i = intersect(a, b)
    assert i == zassenhaus_intersection(a, b)
    assert a.dim + b.dim == subspace_sum(a, b).dim + i.dim


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_annihilator_duality(mc):
    m, n = mc
    s = span(m, n, Q)
    ann = annihilator(s)
    assert s.dim + ann.dim == n
    assert all(sum(a * b for a, b in zip(f, v)) == 0 for f in ann.basis for v in s.basis)
    assert annihilator(ann) == s


@settings(max_examples=40, deadline=None)
@given(matrices(), matrices())
def test_restricted_kernel(ms, me):
    n = min(ms[1], me[1])
    s = span([r[:n] for r in ms[0]], n, Q)
    eqs = [r[:n] for r in me[0]]
    rk = restricted_kernel(s, eqs)
    assert rk == intersect(s, kernel(eqs, Q, n))


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_quotient_coordinates(mc):
    m, n = mc
    s = span(m, n, Q)
    proj, sec = quotient_coordinates(s)
    k = n - s.dim
    assert len(proj) == k
    assert mat_mul(proj, sec, Q) == tuple(tuple(Q.one if i == j else Q.zero for j in range(k))
                                           for i in range(k))
    assert kernel(proj, Q, n) == s


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_span_builder_matches_span(mc):
    m, n = mc
    sb = SpanBuilder(n, GF7)
    grew = [sb.add([x % 7 for x in r]) for r in m]
    s = span([[x % 7 for x in r] for r in m], n, GF7)
    assert sb.subspace() == s
    assert sum(grew) == s.dim


def test_inverse():
    m = ((2, 1), (1, 1))
    inv = inverse(m, Q)
    assert mat_mul(m, inv, Q) == ((1, 0), (0, 1))
    with pytest.raises(ZeroDivisionError):
        inverse(((1, 2), (2, 4)), Q)


def test_subspace_membership_and_coordinates():
    s = span([[1, 2, 3], [0, 1, 1]], 3, Q)
    v = (2, 5, 7)
    assert v in s
    assert s.vector(s.coordinates(v)) == v
    assert (0, 0, 1) not in s
    with pytest.raises(ValueError):
        s.coordinates((0, 0, 1))
    with pytest.raises(DimensionError):
        s.contains((1, 2))


def test_large_prime_path():
    p = 2**61 - 1
    F = Field.prime(p)
    basis, piv = rref([[2, 4], [3, 7]], F, 2)
    assert piv == (0, 1)
