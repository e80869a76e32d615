import json

import pytest

from bogomolov.exactlinalg import Field, DimensionError, full_space, zero_space
from bogomolov.families import (
    abelian,
    class2_corpus,
    freest_gen_heisenberg,
    heisenberg,
    heisenberg_ideal,
    theorem1_ideal,
)
from bogomolov.liealg import LieAlgebra, center, change_field, derived_subalgebra
from bogomolov.varietyspan import (
    EXHAUSTIVE,
    RANDOMIZED,
    Certainty,
    ConfigError,
    EnumerationTooLarge,
    Mode,
    SaturationConfig,
    WedgeIndex,
    commutator_span_in,
    commuting_wedge_space,
    cross_validate_mod_p,
    naive_commutator_span_in,
    naive_commuting_wedge_space,
    wedge_coords,
)

Q = Field.rationals()
GF2, GF3 = Field.prime(2), Field.prime(3)


def test_wedge_coords_examples():
    idx = WedgeIndex(3)
    e1, e2 = (1, 0, 0), (0, 1, 0)
    assert wedge_coords(idx, e1, e2, Q) == (1, 0, 0)
    assert wedge_coords(idx, (1, 2, 3), (1, 2, 3), Q) == (0, 0, 0)
    assert wedge_coords(idx, (1, 1, 0), e2, Q) == (1, 0, 0)
    assert wedge_coords(idx, e2, e1, Q) == (-1, 0, 0)
    with pytest.raises(DimensionError):
        wedge_coords(idx, (1, 0), e2, Q)


def test_wedge_index():
    idx = WedgeIndex(4)
    assert len(idx) == 6
    assert idx.pairs[idx.index(1, 3)] == (1, 3)
    assert idx.signed_index(3, 1) == (idx.index(1, 3), -1)
    assert idx.signed_index(2, 2) is None


def test_config_validation():
    with pytest.raises(ConfigError):
        SaturationConfig(stabilization_window=0)
    with pytest.raises(ConfigError):
        SaturationConfig(stabilization_window=30, sample_cap=10)
    with pytest.raises(ConfigError):
        commuting_wedge_space(heisenberg(1), EXHAUSTIVE)
    cfg = SaturationConfig(mode=Mode.EXHAUSTIVE, enumeration_cap=100)
    with pytest.raises(EnumerationTooLarge):
        commuting_wedge_space(heisenberg(3, GF3), cfg)


def test_abelian_full():
    for n in range(5):
        W = commuting_wedge_space(abelian(n))
        assert W.dim == n * (n - 1) // 2
    assert commuting_wedge_space(abelian(3, GF2), EXHAUSTIVE).dim == 3


def test_heisenberg1_against_brute_force():
    H = heisenberg(1, GF3)
    brute = naive_commuting_wedge_space(H)  # 27 x 27 pairs
    assert brute.dim == 2
    ex = commuting_wedge_space(H, EXHAUSTIVE)
    assert ex.space == brute and ex.certainty is Certainty.EXACT
    assert commuting_wedge_space(heisenberg(1)).dim == 2


def _tiny_algebras(F):
    sl2 = LieAlgebra(3, F, {(0, 1): {2: 1}, (0, 2): {0: -2}, (1, 2): {1: 2}})
    filiform = LieAlgebra(4, F, {(0, 1): {2: 1}, (0, 2): {3: 1}})
    out = [heisenberg(1, F), sl2, filiform, freest_gen_heisenberg(2, F)]
    out += [L for _, L in class2_corpus(4, 11, 5, F)]
    return out


@pytest.mark.parametrize("F", [GF2, GF3])
def test_exhaustive_equals_definitional_span(F):
    for L in _tiny_algebras(F):
        if F.p ** L.dim > 300:
            continue
        assert commuting_wedge_space(L, EXHAUSTIVE).space == naive_commuting_wedge_space(L)
        M = derived_subalgebra(L)
        assert commutator_span_in(L, M, EXHAUSTIVE).space == naive_commutator_span_in(L, M)
        Z = center(L)
        assert commutator_span_in(L, Z, EXHAUSTIVE).space == naive_commutator_span_in(L, Z)


def test_randomized_is_subspace_of_exact_on_reduction():
    for _, L in class2_corpus(6, 5, 7):
        Lp = change_field(L, GF3)
        ex = commuting_wedge_space(Lp, EXHAUSTIVE)
        rnd = commuting_wedge_space(Lp, RANDOMIZED)
        assert rnd.space.is_subspace_of(ex.space)
        assert rnd.certainty is Certainty.MONTE_CARLO


def test_contains_forced_wedges(corpus):
    for _, L in corpus:
        W = commuting_wedge_space(L).space
        idx = WedgeIndex(L.dim)
        for i, j in idx.pairs:
            if (i, j) not in L.brackets:
                assert wedge_coords(idx, L.unit(i), L.unit(j), L.field) in W
        for z in center(L).basis:
            for i in range(L.dim):
                assert wedge_coords(idx, z, L.unit(i), L.field) in W


def test_monotone_in_sample_cap(corpus):
    for _, L in corpus[:8]:
        small = commuting_wedge_space(L, SaturationConfig(stabilization_window=1, sample_cap=1))
        big = commuting_wedge_space(L, SaturationConfig(stabilization_window=40, sample_cap=400))
        assert small.space.is_subspace_of(big.space)


def test_deterministic(corpus):
    for _, L in corpus[:6]:
        cfg = SaturationConfig(rng_seed=9)
        assert commuting_wedge_space(L, cfg) == commuting_wedge_space(L, cfg)


def test_commutator_span_full_algebra():
    for L in [heisenberg(2, GF3), freest_gen_heisenberg(3, GF2)]:
        r = commutator_span_in(L, full_space(L.dim, L.field), EXHAUSTIVE)
        assert r.space == derived_subalgebra(L)


def test_commutator_span_in_theorem1_ideal_is_zero():
    for F in (GF2, GF3):
        M = theorem1_ideal(1, 5, F)
        assert commutator_span_in(M.parent, M.space, EXHAUSTIVE).dim == 0
    M = theorem1_ideal(1, 5)
    assert commutator_span_in(M.parent, M.space).dim == 0


def test_commutator_span_degenerate_zero_ideal():
    M = heisenberg_ideal(1)
    assert M.dim == 0
    assert commutator_span_in(M.parent, M.space).dim == 0


def test_commutator_span_dimension_check():
    with pytest.raises(DimensionError):
        commutator_span_in(heisenberg(1), zero_space(4, Q))


def test_cross_validation_hook():
    out = cross_validate_mod_p(heisenberg(2), [2, 3, 5])
    assert out == {2: 9, 3: 9, 5: 9}
    assert commuting_wedge_space(heisenberg(2)).dim == 9
    capped = SaturationConfig(mode=Mode.EXHAUSTIVE, enumeration_cap=20)
    assert cross_validate_mod_p(heisenberg(2), [5], capped) == {5: None}


def test_config_json():
    assert json.dumps(RANDOMIZED.to_json(), sort_keys=True) == json.dumps(
        SaturationConfig().to_json(), sort_keys=True)
