"""Hopf-type formula B₀(L) = (F' ∩ R) / <K(F) ∩ R> for class ≤ 2.

A genuinely free F is infinite dimensional, but for a target of class at
most 2 we have R ⊇ γ3(F) and <K(F) ∩ R> ⊇ [F, R] ⊇ γ4(F), so both sides
factor through F/γ4(F).  The free nilpotent algebra of class 3 on
d = dim L/L' generators is therefore enough.

Hall basis used for that algebra (generators x_0..x_{d-1}):

* degree 2: h(a, b) = [x_a, x_b] with a > b, ordered by (b, a);
* degree 3: H(a, b, c) = [[x_a, x_b], x_c] with a > b, c >= b, ordered by
  (b, a, c).

Everything else is rewritten into this basis with the Jacobi identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import bogomolov_cohomological
from .exactlinalg import (
    Field,
    Subspace,
    annihilator,
    intersect,
    kernel,
    mat_mul,
    rank,
)
from .liealg import (
    IdealHandle,
    LieAlgebra,
    LieAlgebraError,
    derived_subalgebra,
    is_ideal,
    nilpotency_class,
    quotient,
)
from .varietyspan import (
    RANDOMIZED,
    Certainty,
    SaturationConfig,
    commutator_span_in,
)

Q = Field.rationals()


class UnsupportedClass(LieAlgebraError):
    pass


class ClassTooHigh(LieAlgebraError):
    pass


@dataclass(frozen=True)
class FreeNilpotent:
    algebra: LieAlgebra
    d: int
    c: int
    degree: tuple
    hall_labels: tuple

    @property
    def generators(self) -> tuple:
        return tuple(range(self.d))

    def degree_counts(self) -> tuple:
        return tuple(self.degree.count(k) for k in range(1, self.c + 1))


def witt_counts(d: int) -> tuple:
    return d, d * (d - 1) // 2, (d ** 3 - d) // 3


def free_nilpotent(d: int, c: int = 3, field: Field = Q) -> FreeNilpotent:
    if c < 1 or c > 3:
        raise UnsupportedClass(f"free nilpotent algebras are built for class 1..3, not {c}")
    if d < 0:
        raise LieAlgebraError("d must be >= 0")
    gens = [f"x{i + 1}" for i in range(d)]
    deg2 = [(a, b) for b in range(d) for a in range(b + 1, d)] if c >= 2 else []
    deg3 = ([(a, b, cc) for b in range(d) for a in range(b + 1, d) for cc in range(b, d)]
            if c >= 3 else [])
    pos2 = {k: d + t for t, k in enumerate(deg2)}
    pos3 = {k: d + len(deg2) + t for t, k in enumerate(deg3)}

    br: dict = {}

    def put(i, j, vec: dict):
        # store [e_i, e_j] = vec, normalizing to i < j
        if i > j:
            i, j = j, i
            vec = {k: -v for k, v in vec.items()}
        vec = {k: v for k, v in vec.items() if v}
        if vec:
            br[(i, j)] = vec

    def comm21(a, b, i):
        """[[x_a, x_b], x_i] for a > b in the Hall basis."""
        if i >= b:
            return {pos3[(a, b, i)]: 1}
        out: dict = {}
        out[pos3[(a, i, b)]] = out.get(pos3[(a, i, b)], 0) + 1
        out[pos3[(b, i, a)]] = out.get(pos3[(b, i, a)], 0) - 1
        return out

    if c >= 2:
        for b in range(d):
            for a in range(b + 1, d):
                put(a, b, {pos2[(a, b)]: 1})
    if c >= 3:
        for (a, b), p2 in pos2.items():
            for i in range(d):
                put(p2, i, comm21(a, b, i))

    labels = list(gens)
    labels += [f"[{gens[a]},{gens[b]}]" for a, b in deg2]
    labels += [f"[[{gens[a]},{gens[b]}],{gens[cc]}]" for a, b, cc in deg3]
    degree = (1,) * d + (2,) * len(deg2) + (3,) * len(deg3)
    L = LieAlgebra(len(labels), field, br, labels)
    return FreeNilpotent(L, d, c, degree, tuple(labels))


@dataclass(frozen=True)
class Presentation:
    F: FreeNilpotent
    target: LieAlgebra
    gen_images: tuple
    pi: tuple
    R: Subspace

    def preimage(self, M: Subspace) -> Subspace:
        """pi^{-1}(M) inside F."""
        eqs = annihilator(M).basis
        FF = self.F.algebra
        if not eqs:
            return kernel([], FF.field, FF.dim)
        return kernel(mat_mul(eqs, self.pi, FF.field), FF.field, FF.dim)


def _require_class2(L: LieAlgebra):
    c = nilpotency_class(L)
    if c is None or c > 2:
        raise ClassTooHigh(f"needs a nilpotent algebra of class <= 2 (class {c})")


def present(L: LieAlgebra) -> Presentation:
    """F/R ≅ L with F free nilpotent of class 3 on dim L/L' generators."""
    _require_class2(L)
    K = L.field
    D = derived_subalgebra(L)
    pivset = set(D.pivots)
    gens = [L.unit(j) for j in range(L.dim) if j not in pivset]
    FN = free_nilpotent(len(gens), 3, K)
    FF = FN.algebra
    d = len(gens)
    # images in Hall basis order: degree 1, then (b, a), then (b, a, c)
    images = list(gens)
    for b in range(d):
        for a in range(b + 1, d):
            images.append(L.bracket(gens[a], gens[b]))
    for b in range(d):
        for a in range(b + 1, d):
            ab = L.bracket(gens[a], gens[b])
            images.extend(L.bracket(ab, gens[cc]) for cc in range(b, d))
    pi = tuple(tuple(images[col][row] for col in range(FF.dim)) for row in range(L.dim))
    if rank(pi, K, FF.dim) != L.dim:
        raise AssertionError("presentation map is not surjective")
    for (i, j), col in FF.brackets.items():
        lhs = [K.zero] * L.dim
        for k, cf in col.items():
            for r in range(L.dim):
                lhs[r] += cf * pi[r][k]
        lhs = tuple(K.norm(x) for x in lhs)
        if lhs != L.bracket(images[i], images[j]):
            raise AssertionError("presentation map is not a homomorphism")
    R = kernel(pi, K, FF.dim)
    if not is_ideal(FF, R):
        raise AssertionError("kernel of the presentation is not an ideal")
    return Presentation(FN, L, tuple(gens), pi, R)


@dataclass(frozen=True)
class HopfDims:
    F_dim: int
    R_dim: int
    FprimeR: int
    K_FR: int
    certainty: Certainty

    @property
    def B0(self) -> int:
        return self.FprimeR - self.K_FR


def hopf_details(L: LieAlgebra, cfg: SaturationConfig = RANDOMIZED) -> HopfDims:
    P = present(L)
    FF = P.F.algebra
    FR = intersect(derived_subalgebra(FF), P.R)
    K = commutator_span_in(FF, P.R, cfg)
    if not K.space.is_subspace_of(FR):
        raise AssertionError("<K(F) ∩ R> escaped F' ∩ R")
    return HopfDims(FF.dim, P.R.dim, FR.dim, K.dim, K.certainty)


def hopf_bogomolov(L: LieAlgebra, cfg: SaturationConfig = RANDOMIZED) -> int:
    return hopf_details(L, cfg).B0


@dataclass(frozen=True)
class FiveTermReport:
    t1: int
    t2: int
    t3: int
    t4: int
    certainty: Certainty

    @property
    def alternating_sum(self) -> int:
        return self.t1 - self.t2 + self.t3 - self.t4

    @property
    def exact(self) -> bool:
        return self.alternating_sum == 0

    def to_json(self) -> dict:
        return {
            "t1": self.t1,
            "t2": self.t2,
            "t3": self.t3,
            "t4": self.t4,
            "alternating_sum": self.alternating_sum,
            "exact": self.exact,
            "certainty": self.certainty.value,
            "T": "preimage of M under the presentation of L",
        }


def check_five_term(L: LieAlgebra, M: IdealHandle, cfg: SaturationConfig = RANDOMIZED) -> FiveTermReport:
    """Dimensions of the four terms around B₀(L) -> B₀(L/M) and their alternating sum.

    t1 = (R ∩ <K(F) ∩ T>) / <K(F) ∩ R>, t2 = B₀(L), t3 = B₀(L/M),
    t4 = (M ∩ L') / <K(L) ∩ M>, with T the preimage of M in F.
    """
    if M.parent is not L and not M.parent.same_structure(L):
        raise LieAlgebraError("ideal belongs to a different algebra")
    P = present(L)
    FF = P.F.algebra
    T = P.preimage(M.space)
    KT = commutator_span_in(FF, T, cfg)
    KR = commutator_span_in(FF, P.R, cfg)
    t1 = intersect(P.R, KT.space).dim - KR.dim
    B0L = bogomolov_cohomological(L, cfg)
    Lq, _, _ = quotient(L, M)
    B0q = bogomolov_cohomological(Lq, cfg)
    KM = commutator_span_in(L, M.space, cfg)
    t4 = intersect(M.space, derived_subalgebra(L)).dim - KM.dim
    flags = {KT.certainty, KR.certainty, B0L.certainty, B0q.certainty, KM.certainty}
    cert = Certainty.EXACT if flags == {Certainty.EXACT} else Certainty.MONTE_CARLO
    return FiveTermReport(t1, B0L.dims["B0"], B0q.dims["B0"], t4, cert)
