from collections import defaultdict

import pytest

from bogomolov.cohomology import bogomolov_cohomological
from bogomolov.exactlinalg import Field, intersect, rank
from bogomolov.families import (
    abelian,
    freest_gen_heisenberg,
    heisenberg,
    heisenberg_ideal,
    theorem1_ideal,
)
from bogomolov.hopf import (
    ClassTooHigh,
    UnsupportedClass,
    check_five_term,
    free_nilpotent,
    hopf_bogomolov,
    hopf_details,
    present,
    witt_counts,
)
from bogomolov.liealg import (
    LieAlgebra,
    is_ideal,
    lower_central_series,
    validate,
    zero_ideal,
)
from bogomolov.varietyspan import EXHAUSTIVE

Q = Field.rationals()


# free associative algebra: {word: coeff}, truncated above degree 3
def _mul(p, q):
    out = defaultdict(int)
    for u, a in p.items():
        for v, b in q.items():
            if len(u) + len(v) <= 3:
                out[u + v] += a * b
    return out


def _comm(p, q):
    out = defaultdict(int, _mul(p, q))
    for w, c in _mul(q, p).items():
        out[w] -= c
    return {w: c for w, c in out.items() if c}


def _hall_polys(FN):
    d = FN.d
    x = [{(i,): 1} for i in range(d)]
    polys = list(x)
    for b in range(d):
        for a in range(b + 1, d):
            polys.append(_comm(x[a], x[b]))
    for b in range(d):
        for a in range(b + 1, d):
            ab = _comm(x[a], x[b])
            polys.extend(_comm(ab, x[c]) for c in range(b, d))
    return polys


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_hall_basis_against_associative_realization(d):
    FN = free_nilpotent(d)
    L = FN.algebra
    polys = _hall_polys(FN)
    words = sorted({w for p in polys for w in p})
    mat = [[p.get(w, 0) for w in words] for p in polys]
    assert rank(mat, Q, len(words)) == L.dim  # Hall elements independent
    for i in range(L.dim):
        for j in range(L.dim):
            want = _comm(polys[i], polys[j])
            got = defaultdict(int)
            for k, c in L.basis_bracket(i, j).items():
                for w, a in polys[k].items():
                    got[w] += c * a
            assert {w: c for w, c in got.items() if c} == want


@pytest.mark.parametrize("d", range(0, 6))
def test_witt_counts(d):
    FN = free_nilpotent(d)
    assert FN.degree_counts() == witt_counts(d)
    assert validate(FN.algebra)
    assert lower_central_series(FN.algebra)[-1].dim == 0
    assert len(lower_central_series(FN.algebra)) <= 4


def test_free_nilpotent_examples():
    FN = free_nilpotent(2, 3)
    assert FN.algebra.dim == 5 and FN.degree_counts() == (2, 1, 2)
    one = free_nilpotent(1, 3).algebra
    assert one.dim == 1 and not one.brackets
    with pytest.raises(UnsupportedClass):
        free_nilpotent(2, 4)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_class2_free_is_gen_heisenberg(d):
    F2 = free_nilpotent(d, 2).algebra
    L = freest_gen_heisenberg(d)
    # h(a, b) = [x_a, x_b] with a > b is -y_ba; flipping the sign of the
    # degree-2 basis identifies the structure constants
    flipped = {(i, j): {k: -c for k, c in col.items()} for (i, j), col in F2.brackets.items()}
    assert LieAlgebra(F2.dim, Q, flipped).same_structure(L)


def test_present_examples():
    P = present(abelian(2))
    assert P.F.algebra.dim == 5 and P.R.dim == 3
    assert present(heisenberg(1)).R.dim == 2
    P = present(freest_gen_heisenberg(3))
    assert P.R.dim == 8
    assert P.R == intersect(P.R, lower_central_series(P.F.algebra)[2])


def test_present_invariants(corpus):
    for _, L in corpus:
        P = present(L)
        assert is_ideal(P.F.algebra, P.R)
        assert P.R.dim == P.F.algebra.dim - L.dim


def test_class_too_high():
    filiform = LieAlgebra(4, Q, {(0, 1): {2: 1}, (0, 2): {3: 1}})
    with pytest.raises(ClassTooHigh):
        present(filiform)
    sl2 = LieAlgebra(3, Q, {(0, 1): {2: 1}, (0, 2): {0: -2}, (1, 2): {1: 2}})
    with pytest.raises(ClassTooHigh):
        hopf_bogomolov(sl2)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_hopf_gen_heisenberg(d):
    assert hopf_bogomolov(freest_gen_heisenberg(d)) == 0


@pytest.mark.parametrize("n", [1, 2])
def test_hopf_heisenberg(n):
    assert hopf_bogomolov(heisenberg(n)) == 0


def test_hopf_theorem1(t1_small):
    Lq, _ = t1_small
    assert hopf_bogomolov(Lq) == 1


def test_hopf_matches_cohomology(corpus):
    for _, L in corpus:
        h = hopf_details(L)
        assert h.K_FR <= h.FprimeR
        assert h.B0 == bogomolov_cohomological(L).dims["B0"]


def test_five_term_zero_ideal():
    for L in [heisenberg(2), freest_gen_heisenberg(3)]:
        r = check_five_term(L, zero_ideal(L))
        assert r.t1 == 0 and r.t4 == 0 and r.t2 == r.t3 and r.exact


def test_five_term_heisenberg_corollary():
    M = heisenberg_ideal(2)
    r = check_five_term(M.parent, M)
    assert r.t4 == 0 and r.exact


def test_five_term_theorem1_exhaustive_gf2():
    M = theorem1_ideal(1, 5, Field.prime(2))
    r = check_five_term(M.parent, M, EXHAUSTIVE)
    assert (r.t1, r.t2, r.t3, r.t4) == (0, 0, 1, 1)
    assert r.exact and r.certainty.value == "exact"
    assert r.to_json()["alternating_sum"] == 0
