"""Checking isoclinisms (alpha, beta) between two Lie algebras.

Coordinates: L/Z(L) uses the non-pivot coordinates of Z(L)'s RREF (see
``quotient_coordinates``), and L' uses the pivot entries of its RREF basis.
alpha is a matrix from L/Z(L) coordinates to K/Z(K) coordinates, beta a
matrix from L' coordinates to K' coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlinalg import (
    DimensionError,
    Field,
    identity,
    inverse,
    mat_vec,
    quotient_coordinates,
    rank,
)
from .liealg import LieAlgebra, center, derived_subalgebra, direct_sum, LieAlgebraError


class IsoclinismError(LieAlgebraError):
    pass


class DimMismatch(IsoclinismError):
    pass


@dataclass(frozen=True)
class IsoclinismWitness:
    alpha: tuple
    beta: tuple

    def inverse(self, F: Field) -> IsoclinismWitness:
        return IsoclinismWitness(_inv(self.alpha, F), _inv(self.beta, F))

    def to_json(self, F: Field) -> dict:
        return {"alpha": [[F.fmt(x) for x in r] for r in self.alpha],
                "beta": [[F.fmt(x) for x in r] for r in self.beta]}

    @classmethod
    def from_json(cls, data: dict, F: Field) -> IsoclinismWitness:
        try:
            return cls(tuple(tuple(F(x) for x in r) for r in data["alpha"]),
                       tuple(tuple(F(x) for x in r) for r in data["beta"]))
        except (KeyError, TypeError) as exc:
            raise IsoclinismError(f"malformed witness: {exc}") from exc


def _inv(m, F):
    return inverse(m, F) if m else ()


def commutator_pairing(L: LieAlgebra, shift=None) -> tuple:
    """phi[u][v] = L'-coordinates of [s(u), s(v)] for quotient basis u, v.

    ``shift`` is an optional list of central vectors added to the section
    of each quotient basis vector; the result must not depend on it.
    """
    F = L.field
    Z = center(L)
    D = derived_subalgebra(L)
    _, sec = quotient_coordinates(Z)
    k = L.dim - Z.dim
    lifts = [tuple(sec[r][u] for r in range(L.dim)) for u in range(k)]
    if shift is not None:
        if len(shift) != k:
            raise DimensionError("one shift vector per quotient basis element")
        for s in shift:
            if not Z.contains(s):
                raise IsoclinismError("section shift must be central")
        lifts = [tuple(F.norm(a + b) for a, b in zip(x, s)) for x, s in zip(lifts, shift)]
    return tuple(tuple(D.coordinates(L.bracket(lifts[u], lifts[v])) for v in range(k))
                 for u in range(k))


def _invertible(m, n: int, F: Field) -> bool:
    if len(m) != n or any(len(r) != n for r in m):
        return False
    return n == 0 or rank(m, F, n) == n


def verify(L: LieAlgebra, K: LieAlgebra, w: IsoclinismWitness) -> bool:
    """True iff beta(phi(u, v)) = theta(alpha u, alpha v) on quotient basis pairs."""
    if L.field != K.field:
        raise DimMismatch("algebras over different fields")
    F = L.field
    phi = commutator_pairing(L)
    theta = commutator_pairing(K)
    k, kk = len(phi), len(theta)
    dl, dk = derived_subalgebra(L).dim, derived_subalgebra(K).dim
    if k != kk or dl != dk:
        raise DimMismatch(f"central quotients {k} vs {kk}, derived algebras {dl} vs {dk}")
    if not (_invertible(w.alpha, k, F) and _invertible(w.beta, dl, F)):
        return False
    # images of quotient basis vectors are the columns of alpha
    cols = [tuple(w.alpha[r][u] for r in range(k)) for u in range(k)]
    for u in range(k):
        for v in range(u + 1, k):
            lhs = mat_vec(w.beta, phi[u][v], F) if dl else ()
            rhs = [F.zero] * dk
            for a in range(k):
                if not cols[u][a]:
                    continue
                for b in range(k):
                    if cols[v][b]:
                        c = cols[u][a] * cols[v][b]
                        for t, x in enumerate(theta[a][b]):
                            rhs[t] += c * x
            if tuple(lhs) != tuple(F.norm(x) for x in rhs):
                return False
    return True


def identity_witness(L: LieAlgebra) -> IsoclinismWitness:
    F = L.field
    k = L.dim - center(L).dim
    return IsoclinismWitness(identity(k, F), identity(derived_subalgebra(L).dim, F))


def attach_abelian(L: LieAlgebra, k: int):
    """``(L ⊕ F^k, witness)``; the witness is read off the embedding of L."""
    if k < 0:
        raise IsoclinismError("k must be >= 0")
    F = L.field
    A = LieAlgebra(k, F, labels=[f"a{i + 1}" for i in range(k)])
    K = direct_sum(L, A)

    def pad(v):
        return tuple(v) + (F.zero,) * k

    ZL, ZK = center(L), center(K)
    DL, DK = derived_subalgebra(L), derived_subalgebra(K)
    _, secL = quotient_coordinates(ZL)
    projK, _ = quotient_coordinates(ZK)
    q = L.dim - ZL.dim
    lifts = [pad(secL[r][u] for r in range(L.dim)) for u in range(q)]
    alpha_cols = [mat_vec(projK, x, F) for x in lifts]
    alpha = tuple(tuple(alpha_cols[u][r] for u in range(q)) for r in range(len(projK)))
    beta_cols = [DK.coordinates(pad(b)) for b in DL.basis]
    beta = tuple(tuple(beta_cols[u][r] for u in range(DL.dim)) for r in range(DK.dim))
    return K, IsoclinismWitness(alpha, beta)


def scaled(w: IsoclinismWitness, c, F: Field) -> IsoclinismWitness:
    """Witness with beta multiplied by c (a test helper for negative cases)."""
    return IsoclinismWitness(w.alpha, tuple(tuple(F.norm(c * x) for x in r) for r in w.beta))

