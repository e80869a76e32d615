"""Second cohomology with trivial coefficients and the Bogomolov multiplier.

A 2-cochain is stored by its values f(e_i, e_j), i < j, on the pair basis
of Λ²L, so alternation holds by construction in every characteristic.
Cochains act on wedge vectors by the dot product, which makes
"f vanishes on W" the statement f ∈ Ann(W).

The homological route works on the dual side with the Chevalley-Eilenberg
maps d2: Λ²L -> L and d3: Λ³L -> Λ²L and shares only W with the
cohomological route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlinalg import (
    Subspace,
    annihilator,
    kernel,
    rank,
    restricted_kernel,
    span,
    subspace_sum,
)
from .liealg import LieAlgebra
from .varietyspan import (
    RANDOMIZED,
    Certainty,
    SaturationConfig,
    SpanResult,
    WedgeIndex,
    commuting_wedge_space,
)


def cocycle_equations(L: LieAlgebra) -> list[tuple]:
    """One row per triple i<j<k that touches a nonzero bracket.

    The row expresses f([e_i,e_j],e_k) + f([e_j,e_k],e_i) + f([e_k,e_i],e_j).
    """
    F, n = L.field, L.dim
    idx = WedgeIndex(n)
    nz = L.brackets
    rows = []

    def put(row, col: dict, k, sign):
        # sign * f(sum_m col[m] e_m, e_k)
        for m, c in col.items():
            hit = idx.signed_index(m, k)
            if hit is not None:
                pos, s = hit
                row[pos] = row.get(pos, 0) + sign * s * c

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if (i, j) not in nz and (j, k) not in nz and (i, k) not in nz:
                    continue
                row: dict = {}
                put(row, L.basis_bracket(i, j), k, 1)
                put(row, L.basis_bracket(j, k), i, 1)
                put(row, L.basis_bracket(i, k), j, -1)
                dense = [F.zero] * len(idx)
                for pos, v in row.items():
                    dense[pos] = F.norm(v)
                if any(dense):
                    rows.append(tuple(dense))
    return rows


def cocycle_space(L: LieAlgebra) -> Subspace:
    """Z²(L): alternating forms satisfying the cocycle identity."""
    return kernel(cocycle_equations(L), L.field, len(WedgeIndex(L.dim)))


def coboundary_space(L: LieAlgebra) -> Subspace:
    """B²(L): forms (x, y) -> -σ([x, y]) for σ = e_k^*."""
    F, n = L.field, L.dim
    idx = WedgeIndex(n)
    vecs = [[F.zero] * len(idx) for _ in range(n)]
    for (i, j), col in L.brackets.items():
        pos = idx.index(i, j)
        for k, c in col.items():
            vecs[k][pos] = F.norm(-c)
    return span(vecs, len(idx), F)


def schur_multiplier_dim(L: LieAlgebra) -> int:
    return cocycle_space(L).dim - coboundary_space(L).dim


@dataclass(frozen=True)
class CohomologySpaces:
    Z2: Subspace
    B2: Subspace
    W: SpanResult
    B0_cocycles: Subspace
    representatives: tuple

    @property
    def certainty(self) -> Certainty:
        return self.W.certainty

    @property
    def dims(self) -> dict:
        return {
            "Z2": self.Z2.dim,
            "B2": self.B2.dim,
            "H2": self.Z2.dim - self.B2.dim,
            "W": self.W.dim,
            "B0": self.B0_cocycles.dim - self.B2.dim,
        }


def _complement_reps(big: Subspace, small: Subspace) -> tuple:
    """RREF basis of a complement of ``small`` inside ``big``.

    The basis vectors of ``big`` that extend ``small`` are picked greedily
    and their span is returned in RREF, so the output is stable.
    """
    if big.dim == small.dim:
        return ()
    F = big.field
    grown = small
    picked = []
    for b in big.basis:
        if not grown.contains(b):
            picked.append(b)
            grown = span(grown.basis + (b,), big.ambient_dim, F)
    return span(picked, big.ambient_dim, F).basis


def bogomolov_cohomological(L: LieAlgebra, cfg: SaturationConfig = RANDOMIZED,
                            W: SpanResult | None = None) -> CohomologySpaces:
    """B₀(L) as cocycles vanishing on W modulo coboundaries."""
    if W is None:
        W = commuting_wedge_space(L, cfg)
    Z2 = cocycle_space(L)
    B2 = coboundary_space(L)
    for b in B2.basis:
        if not Z2.contains(b):
            raise AssertionError("coboundary fails the cocycle identity")
    annW = annihilator(W.space)
    Zb = restricted_kernel(annW, cocycle_equations(L))
    for b in B2.basis:
        if not Zb.contains(b):
            raise AssertionError("coboundary does not vanish on commuting wedges")
    return CohomologySpaces(Z2, B2, W, Zb, _complement_reps(Zb, B2))


def d2_matrix(L: LieAlgebra) -> tuple:
    """Matrix (n rows, |Λ²| columns) of x ^ y -> [x, y]."""
    F, n = L.field, L.dim
    idx = WedgeIndex(n)
    m = [[F.zero] * len(idx) for _ in range(n)]
    for (i, j), col in L.brackets.items():
        pos = idx.index(i, j)
        for k, c in col.items():
            m[k][pos] = c
    return tuple(tuple(r) for r in m)


def d3_image(L: LieAlgebra) -> Subspace:
    """im d3 with x^y^z -> [x,y]^z - [x,z]^y + [y,z]^x on basis triples."""
    F, n = L.field, L.dim
    idx = WedgeIndex(n)
    nz = L.brackets
    vecs = []

    def put(acc, i, j, k, sign):
        # acc += sign * [e_i, e_j] ^ e_k
        for m, c in nz.get((i, j), {}).items():
            hit = idx.signed_index(m, k)
            if hit is not None:
                pos, s = hit
                acc[pos] = acc.get(pos, 0) + sign * s * c

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if (i, j) not in nz and (j, k) not in nz and (i, k) not in nz:
                    continue
                acc: dict = {}
                put(acc, i, j, k, 1)
                put(acc, i, k, j, -1)
                put(acc, j, k, i, 1)
                v = [F.zero] * len(idx)
                for pos, x in acc.items():
                    v[pos] = F.norm(x)
                if any(v):
                    vecs.append(v)
    return span(vecs, len(idx), F)


@dataclass(frozen=True)
class HomologyDims:
    ker_d2: int
    im_d3: int
    im_d3_plus_W: int
    certainty: Certainty

    @property
    def H2(self) -> int:
        return self.ker_d2 - self.im_d3

    @property
    def B0(self) -> int:
        return self.ker_d2 - self.im_d3_plus_W


def homology_details(L: LieAlgebra, cfg: SaturationConfig = RANDOMIZED,
                     W: SpanResult | None = None) -> HomologyDims:
    if W is None:
        W = commuting_wedge_space(L, cfg)
    F = L.field
    idx = WedgeIndex(L.dim)
    m = len(idx)
    ker_dim = m - rank(d2_matrix(L), F, m)
    cols = [(idx.index(i, j), col) for (i, j), col in L.brackets.items()]
    for w in W.space.basis:
        img = [F.zero] * L.dim
        for pos, col in cols:
            if w[pos]:
                for k, c in col.items():
                    img[k] += w[pos] * c
        if any(F.norm(x) for x in img):
            raise AssertionError("commuting wedge outside ker d2")
    im3 = d3_image(L)
    both = subspace_sum(im3, W.space)
    return HomologyDims(ker_dim, im3.dim, both.dim, W.certainty)


def bogomolov_homological(L: LieAlgebra, cfg: SaturationConfig = RANDOMIZED,
                          W: SpanResult | None = None) -> int:
    """dim ker d2 / (im d3 + W)."""
    return homology_details(L, cfg, W).B0

