"""Linear spans of commuting-type varieties.

Two spans are computed here:

* the commuting-wedge space ``W = span{x ^ y : [x, y] = 0}`` inside the
  exterior square, and
* ``<K(L) ∩ M> = span{[x, y] : [x, y] in M}`` for a subspace M.

Neither set is linear, so both are built by collecting, for many x, the
whole linear fiber of admissible y.  Over GF(p) the collection can be
exhaustive; over Q it is seeded and then randomly sampled.

Both computations factor through the center Z = Z(L).  Let C be spanned by
the coordinates that are not pivots of Z's RREF, so L = C ⊕ Z.  Then
``[x, y]`` only depends on the C-parts of x and y, and
``W = (Z ^ L) ⊕ (W ∩ Λ²C)``.  So x ranges over C only, and only the
Λ²C-component of each wedge is collected.  Scaling x does not change
either span, so the exhaustive mode visits one x per line.

Sampled spans are always subspaces of the true spans: every inserted
vector is checked against its defining condition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _backend
from .exactlinalg import (
    DimensionError,
    Field,
    SpanBuilder,
    Subspace,
    annihilator,
    intersect,
    kernel,
    kernel_vectors,
    quotient_coordinates,
    span,
    zero_space,
)
from .liealg import (
    LieAlgebra,
    center,
    bracket_forms,
    change_field,
    derived_subalgebra,
    form_rows,
)


class Mode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOMIZED = "randomized"


class Certainty(str, Enum):
    EXACT = "exact"
    MONTE_CARLO = "monte_carlo"


class ConfigError(ValueError):
    pass


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SaturationConfig:
    mode: Mode = Mode.RANDOMIZED
    rng_seed: int = 0
    coefficient_bound: int = 10
    stabilization_window: int = 20
    sample_cap: int = 500
    enumeration_cap: int = 2**20

    def __post_init__(self):
        if self.stabilization_window < 1:
            raise ConfigError("stabilization_window must be >= 1")
        if self.sample_cap < self.stabilization_window:
            raise ConfigError("sample_cap must be >= stabilization_window")
        if self.enumeration_cap < self.stabilization_window:
            raise ConfigError("enumeration_cap must be >= stabilization_window")
        if self.coefficient_bound < 1:
            raise ConfigError("coefficient_bound must be >= 1")
        object.__setattr__(self, "mode", Mode(self.mode))

    @property
    def exhaustive(self) -> bool:
        return self.mode is Mode.EXHAUSTIVE

    def check_enumeration(self, F: Field, c: int):
        if not F.p:
            raise ConfigError("exhaustive enumeration needs a prime field")
        if F.p >= _backend.MAX_SATURATION_MODULUS:
            raise ConfigError(f"exhaustive enumeration needs p < {_backend.MAX_SATURATION_MODULUS}")
        if F.p ** c > self.enumeration_cap:
            raise EnumerationTooLarge(
                f"{F.p}^{c} field points exceed enumeration_cap={self.enumeration_cap}")

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "seed": self.rng_seed,
            "coeff_bound": self.coefficient_bound,
            "window": self.stabilization_window,
            "samples": self.sample_cap,
            "enumeration_cap": self.enumeration_cap,
        }


EXHAUSTIVE = SaturationConfig(mode=Mode.EXHAUSTIVE)
RANDOMIZED = SaturationConfig()


@dataclass(frozen=True)
class SpanResult:
    space: Subspace
    certainty: Certainty
    samples_used: int

    @property
    def dim(self) -> int:
        return self.space.dim


class WedgeIndex:
    """Lexicographic pair basis {(i, j) : i < j} of Λ²F^n."""

    __slots__ = ("n", "pairs", "_pos")

    def __init__(self, n: int):
        self.n = n
        self.pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
        self._pos = {p: k for k, p in enumerate(self.pairs)}

    def __len__(self):
        return len(self.pairs)

    def index(self, i: int, j: int) -> int:
        return self._pos[(i, j)]

    def signed_index(self, i: int, j: int):
        """``(position, sign)`` of e_i ^ e_j, or None when i == j."""
        if i < j:
            return self._pos[(i, j)], 1
        if i > j:
            return self._pos[(j, i)], -1
        return None


def wedge_coords(idx: WedgeIndex, x, y, F: Field) -> tuple:
    """Coordinates of x ^ y: entry (i, j) is x_i y_j - x_j y_i."""
    if len(x) != idx.n or len(y) != idx.n:
        raise DimensionError("vector length does not match the wedge index")
    return tuple(F.norm(x[i] * y[j] - x[j] * y[i]) for i, j in idx.pairs)


class CentralFrame:
    """Splitting L = C ⊕ Z(L) on non-pivot coordinates of the center."""

    def __init__(self, L: LieAlgebra):
        self.L = L
        self.Z = center(L)
        proj, _ = quotient_coordinates(self.Z)
        self.proj = proj
        pivset = set(self.Z.pivots)
        self.comp = tuple(j for j in range(L.dim) if j not in pivset)
        self.c = len(self.comp)

    def project(self, x) -> tuple:
        """C-coordinates of x (length c)."""
        F = self.L.field
        return tuple(F.norm(sum((a * b for a, b in zip(row, x) if a), F.zero))
                     for row in self.proj)

    def lift(self, t) -> tuple:
        F = self.L.field
        x = [F.zero] * self.L.dim
        for a, ta in zip(self.comp, t):
            x[a] = ta
        return tuple(x)


def _normalize_line(t, F: Field):
    for a in t:
        if a:
            inv = F.inv(a)
            return tuple(F.norm(inv * b) for b in t)
    return None


def _seed_points(frame: CentralFrame):
    """Projected seeds e_i, e_i ± e_j and center basis, one per line."""
    L = frame.L
    F, n = L.field, L.dim
    raw = [L.unit(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for s in (1, -1):
                v = [F.zero] * n
                v[i] = F.one
                v[j] = F(s)
                raw.append(tuple(v))
    raw.extend(frame.Z.basis)
    seen = set()
    for x in raw:
        t = _normalize_line(frame.project(x), F)
        if t is not None and t not in seen:
            seen.add(t)
            yield t


def _sample(frame: CentralFrame, cfg: SaturationConfig, visit, full) -> int:
    """Run seeds then random points through ``visit``; return points used.

    ``visit(t)`` returns True when the span grew; ``full()`` reports that a
    proven upper bound has been reached.
    """
    F = frame.L.field
    used = 0
    if full():
        return used
    for t in _seed_points(frame):
        used += 1
        visit(t)
        if full():
            return used
    rng = random.Random(cfg.rng_seed)
    stale = drawn = 0
    while drawn < cfg.sample_cap and stale < cfg.stabilization_window and not full():
        t = tuple(F.random(rng, cfg.coefficient_bound) for _ in range(frame.c))
        drawn += 1
        if not any(t):
            stale += 1
            continue
        used += 1
        stale = 0 if visit(t) else stale + 1
    return used


def _wedge_bound(frame: CentralFrame) -> int:
    """dim of ker([.,.]) on Λ²C, an upper bound for W ∩ Λ²C."""
    L = frame.L
    idx = WedgeIndex(frame.c)
    cols = []
    for a, b in idx.pairs:
        v = [L.field.zero] * L.dim
        for k, coef in L.basis_bracket(frame.comp[a], frame.comp[b]).items():
            v[k] = coef
        cols.append(v)
    if not cols:
        return 0
    return kernel(list(zip(*cols)), L.field, len(cols)).dim


def _embed_wedges(frame: CentralFrame, part: Subspace) -> Subspace:
    """Λ²C-part plus Z ^ L, as a subspace of Λ²L."""
    L = frame.L
    F, n = L.field, L.dim
    big = WedgeIndex(n)
    small = WedgeIndex(frame.c)
    vecs = []
    for row in part.basis:
        v = [F.zero] * len(big)
        for (a, b), x in zip(small.pairs, row):
            if x:
                v[big.index(frame.comp[a], frame.comp[b])] = x
        vecs.append(v)
    Zb = frame.Z.basis
    for r, z in enumerate(Zb):
        for a in frame.comp:
            vecs.append(wedge_coords(big, z, L.unit(a), F))
        for z2 in Zb[r + 1:]:
            vecs.append(wedge_coords(big, z, z2, F))
    return span(vecs, len(big), F)


def _wedge_tensors(frame: CentralFrame):
    """Fiber tensor A[a] = ad(e_{C_a}) and collector B for x ^ y on Λ²C."""
    L = frame.L
    p = L.field.p
    T = L.ad_tensor_modp()
    comp = list(frame.comp)
    A = np.ascontiguousarray(T[comp])
    idx = WedgeIndex(frame.c)
    P = np.array(frame.proj, dtype=np.int64).reshape(frame.c, L.dim) % p
    B = np.zeros((frame.c, L.dim, len(idx)), dtype=np.int64)
    for k, (a, b) in enumerate(idx.pairs):
        # t_a u_b - t_b u_a with u = P y
        B[a, :, k] = (B[a, :, k] + P[b]) % p
        B[b, :, k] = (B[b, :, k] - P[a]) % p
    return A, B


def commuting_wedge_space(L: LieAlgebra, cfg: SaturationConfig = RANDOMIZED) -> SpanResult:
    """W = span{x ^ y : [x, y] = 0} in the pair basis of Λ²L."""
    F = L.field
    frame = CentralFrame(L)
    small = WedgeIndex(frame.c)
    bound = _wedge_bound(frame)
    if cfg.exhaustive:
        cfg.check_enumeration(F, frame.c)
        if bound:
            A, B = _wedge_tensors(frame)
            basis, piv, used = _backend.saturate_modp(A, B, F.p, bound)
            part = Subspace(F, len(small), tuple(tuple(int(v) for v in r) for r in basis.tolist()),
                            tuple(piv))
        else:
            part, used = zero_space(len(small), F), 0
        return SpanResult(_embed_wedges(frame, part), Certainty.EXACT, used)

    sb = SpanBuilder(len(small), F)
    forms = bracket_forms(L)

    def visit(t):
        x = frame.lift(t)
        grew = False
        for y in kernel_vectors(form_rows(forms, x, F, L.dim), F, L.dim):
            if any(L.bracket(x, y)):
                raise AssertionError("non-commuting pair reached the wedge span")
            grew |= sb.add(wedge_coords(small, t, frame.project(y), F))
        return grew

    used = _sample(frame, cfg, visit, lambda: sb.dim >= bound)
    return SpanResult(_embed_wedges(frame, sb.subspace()), Certainty.MONTE_CARLO, used)


def commutator_span_in(L: LieAlgebra, M: Subspace,
                       cfg: SaturationConfig = RANDOMIZED) -> SpanResult:
    """<K(L) ∩ M> = span{[x, y] : [x, y] in M}."""
    if M.ambient_dim != L.dim:
        raise DimensionError("M lives in a different space")
    F = L.field
    frame = CentralFrame(L)
    bound = intersect(M, derived_subalgebra(L)).dim
    if cfg.exhaustive:
        cfg.check_enumeration(F, frame.c)
        if not bound:
            return SpanResult(zero_space(L.dim, F), Certainty.EXACT, 0)
        T = L.ad_tensor_modp()
        comp = list(frame.comp)
        Qm = np.array(annihilator(M).basis, dtype=np.int64).reshape(-1, L.dim)
        A = np.ascontiguousarray(np.einsum("rk,akj->arj", Qm, T[comp]) % F.p)
        B = np.ascontiguousarray(np.transpose(T[comp], (0, 2, 1)))
        basis, piv, used = _backend.saturate_modp(A, B, F.p, bound)
        space = Subspace(F, L.dim, tuple(tuple(int(v) for v in r) for r in basis.tolist()),
                         tuple(piv))
        for b in space.basis:
            if not M.contains(b):
                raise AssertionError("collected commutator escaped M")
        return SpanResult(space, Certainty.EXACT, used)

    sb = SpanBuilder(L.dim, F)
    forms = bracket_forms(L, annihilator(M).basis)

    def visit(t):
        x = frame.lift(t)
        grew = False
        for y in kernel_vectors(form_rows(forms, x, F, L.dim), F, L.dim):
            v = L.bracket(x, y)
            if not any(v):
                continue
            if not M.contains(v):
                raise AssertionError("collected commutator escaped M")
            grew |= sb.add(v)
        return grew

    used = _sample(frame, cfg, visit, lambda: sb.dim >= bound)
    return SpanResult(sb.subspace(), Certainty.MONTE_CARLO, used)


def cross_validate_mod_p(L: LieAlgebra, primes, cfg: SaturationConfig = EXHAUSTIVE) -> dict:
    """dim W of L reduced mod each prime (diagnostic only; bad primes may differ)."""
    out = {}
    for p in primes:
        Lp = change_field(L, Field.prime(p))
        try:
            out[p] = commuting_wedge_space(Lp, cfg).dim
        except EnumerationTooLarge:
            out[p] = None
    return out


def naive_commuting_wedge_space(L: LieAlgebra) -> Subspace:
    """Definitional W over GF(p): every pair (x, y) of field points.

    Feasible only for tiny p^n; kept as an oracle.
    """
    import itertools

    F = L.field
    if not F.p:
        raise ConfigError("naive enumeration needs a prime field")
    idx = WedgeIndex(L.dim)
    pts = list(itertools.product(range(F.p), repeat=L.dim))
    vecs = []
    for x in pts:
        for y in pts:
            if not any(L.bracket(x, y)):
                vecs.append(wedge_coords(idx, x, y, F))
    return span(vecs, len(idx), F)


def naive_commutator_span_in(L: LieAlgebra, M: Subspace) -> Subspace:
    """Definitional <K(L) ∩ M> over GF(p) by enumerating all pairs."""
    import itertools

    F = L.field
    if not F.p:
        raise ConfigError("naive enumeration needs a prime field")
    pts = list(itertools.product(range(F.p), repeat=L.dim))
    vecs = []
    for x in pts:
        for y in pts:
            v = L.bracket(x, y)
            if M.contains(v):
                vecs.append(v)
    return span(vecs, L.dim, F)
