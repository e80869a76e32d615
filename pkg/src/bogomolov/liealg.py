"""Finite-dimensional Lie algebras given by structure constants.

Only brackets ``[e_i, e_j]`` with ``i < j`` are stored; ``[e_j, e_i]`` and
``[e_i, e_i]`` are implied by antisymmetry, so input cannot be inconsistent
on that score.  Everything structural (center, centralizers, ideals,
quotients) reduces to kernels and spans in :mod:`bogomolov.exactlinalg`.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .exactlinalg import (
    DimensionError,
    Field,
    SpanBuilder,
    Subspace,
    annihilator,
    full_space,
    kernel,
    mat_vec,
    quotient_coordinates,
    span,
    sparse,
    unit,
    zero_space,
)


class LieAlgebraError(ValueError):
    pass


class NotAnIdealError(LieAlgebraError):
    pass


class LieAlgebra:
    """Lie algebra on basis e_0..e_{dim-1} with ``[e_i,e_j] = sum_k c_ij^k e_k``.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to ``{k: c_ij^k}``; zero
    coefficients are dropped on construction.
    """

    __slots__ = ("dim", "field", "brackets", "labels")

    def __init__(self, dim: int, field: Field,
                 brackets: Mapping[tuple[int, int], Mapping[int, object]] | None = None,
                 labels: Sequence[str] | None = None):
        if dim < 0:
            raise LieAlgebraError("negative dimension")
        table = {}
        for (i, j), col in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise LieAlgebraError(f"bracket index pair ({i}, {j}) must satisfy 0 <= i < j < {dim}")
            clean = {}
            for k, c in col.items():
                if not 0 <= k < dim:
                    raise LieAlgebraError(f"basis index {k} out of range")
                c = field(c)
                if c:
                    clean[k] = c
            if clean:
                table[(i, j)] = MappingProxyType(dict(sorted(clean.items())))
        if labels is None:
            labels = [f"e{i + 1}" for i in range(dim)]
        if len(labels) != dim:
            raise LieAlgebraError("one label per basis element required")
        self.dim = dim
        self.field = field
        self.brackets = MappingProxyType(dict(sorted(table.items())))
        self.labels = tuple(labels)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field}, nonzero_brackets={len(self.brackets)})"

    def same_structure(self, other: LieAlgebra) -> bool:
        """Equal dimension, field and structure constants (labels ignored)."""
        return (self.dim == other.dim and self.field == other.field
                and dict(self.brackets) == dict(other.brackets))

    def relabel(self, labels: Sequence[str]) -> LieAlgebra:
        return LieAlgebra(self.dim, self.field, self.brackets, labels)

    def basis_bracket(self, i: int, j: int) -> dict:
        """``[e_i, e_j]`` as a sparse ``{k: coeff}``."""
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        if i > j:
            F = self.field
            return {k: F.norm(-c) for k, c in self.brackets.get((j, i), {}).items()}
        return {}

    def _check(self, *vs):
        for v in vs:
            if len(v) != self.dim:
                raise DimensionError(f"vector of length {len(v)} in a {self.dim}-dimensional algebra")

    def bracket(self, x, y) -> tuple:
        self._check(x, y)
        F = self.field
        out = [F.zero] * self.dim
        sx = [(i, a) for i, a in enumerate(x) if a]
        sy = [(j, b) for j, b in enumerate(y) if b]
        if len(sx) * len(sy) < len(self.brackets):
            # sparse inputs: walk the supports instead of the table
            table = self.brackets
            for i, a in sx:
                for j, b in sy:
                    if i < j:
                        col, w = table.get((i, j)), a * b
                    elif i > j:
                        col, w = table.get((j, i)), -a * b
                    else:
                        continue
                    if col:
                        for k, c in col.items():
                            out[k] += w * c
            return tuple(F.norm(v) for v in out)
        for (i, j), col in self.brackets.items():
            w = x[i] * y[j] - x[j] * y[i]
            if w:
                for k, c in col.items():
                    out[k] += w * c
        return tuple(F.norm(v) for v in out)

    def ad(self, x) -> tuple:
        """Matrix of ``y -> [x, y]`` (rows indexed by output coordinate)."""
        self._check(x)
        F = self.field
        n = self.dim
        m = [[F.zero] * n for _ in range(n)]
        for (i, j), col in self.brackets.items():
            xi, xj = x[i], x[j]
            if not (xi or xj):
                continue
            for k, c in col.items():
                if xi:
                    m[k][j] += xi * c
                if xj:
                    m[k][i] -= xj * c
        return tuple(tuple(F.norm(v) for v in row) for row in m)

    def ad_tensor_modp(self) -> np.ndarray:
        """Dense ``T[i] = ad(e_i)`` as an int64 array (prime fields only)."""
        if not self.field.p:
            raise LieAlgebraError("dense residue tensor needs a prime field")
        n, p = self.dim, self.field.p
        T = np.zeros((n, n, n), dtype=np.int64)
        for (i, j), col in self.brackets.items():
            for k, c in col.items():
                T[i, k, j] = c % p
                T[j, k, i] = (-c) % p
        return T

    def unit(self, i: int) -> tuple:
        return unit(self.dim, i, self.field)


@dataclass(frozen=True)
class Diagnosis:
    ok: bool
    triple: tuple[int, int, int] | None = None
    residual: tuple | None = None

    def __bool__(self):
        return self.ok


def _add_bracket_into(L: LieAlgebra, acc: dict, coeffs: dict, k: int, sign):
    """acc += sign * [sum_m coeffs[m] e_m, e_k]."""
    for m, a in coeffs.items():
        for t, b in L.basis_bracket(m, k).items():
            acc[t] = acc.get(t, 0) + sign * a * b


def validate(L: LieAlgebra) -> Diagnosis:
    """Jacobi identity on every basis triple i<j<k; first failure reported."""
    F = L.field
    n = L.dim
    nz = L.brackets
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if (i, j) not in nz and (j, k) not in nz and (i, k) not in nz:
                    continue
                acc: dict = {}
                _add_bracket_into(L, acc, L.basis_bracket(i, j), k, 1)
                _add_bracket_into(L, acc, L.basis_bracket(j, k), i, 1)
                _add_bracket_into(L, acc, L.basis_bracket(k, i), j, 1)
                res = [F.zero] * n
                for t, v in acc.items():
                    res[t] = F.norm(v)
                if any(res):
                    return Diagnosis(False, (i, j, k), tuple(res))
    return Diagnosis(True)


def bracket_forms(L: LieAlgebra, functionals=None) -> list[dict]:
    """For each functional f, ``{i: [(j, f([e_i, e_j])), ...]}`` (nonzero values).

    ``None`` means the coordinate functionals e_0^*, ..., e_{n-1}^*.
    """
    F = L.field
    if functionals is None:
        forms = [{} for _ in range(L.dim)]
        for (i, j), col in L.brackets.items():
            for k, c in col.items():
                forms[k].setdefault(i, []).append((j, c))
                forms[k].setdefault(j, []).append((i, F.norm(-c)))
        return forms
    funcs = [dict(sparse(f)) for f in functionals]
    forms = [{} for _ in funcs]
    for (i, j), col in L.brackets.items():
        for f, form in zip(funcs, forms):
            g = F.norm(sum((c * f[k] for k, c in col.items() if k in f), F.zero))
            if g:
                form.setdefault(i, []).append((j, g))
                form.setdefault(j, []).append((i, F.norm(-g)))
    return forms


def form_rows(forms: list[dict], x, F: Field, n: int) -> list:
    """Rows of y -> (f([x, y]))_f, zero rows dropped."""
    sx = sparse(x)
    rows = []
    for form in forms:
        row = [F.zero] * n
        hit = False
        for i, a in sx:
            for j, g in form.get(i, ()):
                row[j] += a * g
                hit = True
        if hit:
            row = [F.norm(v) for v in row]
            if any(row):
                rows.append(row)
    return rows


def center(L: LieAlgebra) -> Subspace:
    """Z(L): z with [e_i, z] = 0 for every i."""
    n, F = L.dim, L.field
    rows = []
    for form in bracket_forms(L):
        for i, entries in form.items():
            row = [F.zero] * n
            for j, g in entries:
                row[j] = g
            rows.append(row)
    return kernel(rows, F, n)


def centralizer(L: LieAlgebra, x) -> Subspace:
    L._check(x)
    return kernel(form_rows(bracket_forms(L), x, L.field, L.dim), L.field, L.dim)


def centralizer_mod(L: LieAlgebra, x, M: Subspace) -> Subspace:
    """{y : [x, y] in M}."""
    if M.ambient_dim != L.dim:
        raise DimensionError("ideal lives in a different space")
    L._check(x)
    eqs = annihilator(M).basis
    if not eqs:
        return full_space(L.dim, L.field)
    return kernel(form_rows(bracket_forms(L, eqs), x, L.field, L.dim), L.field, L.dim)


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    vecs = []
    for col in L.brackets.values():
        v = [L.field.zero] * L.dim
        for k, c in col.items():
            v[k] = c
        vecs.append(v)
    return span(vecs, L.dim, L.field)


def bracket_with_space(L: LieAlgebra, S: Subspace) -> Subspace:
    """span [L, S]."""
    return span((L.bracket(L.unit(i), b) for i in range(L.dim) for b in S.basis),
                L.dim, L.field)


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    """gamma_1 = L, gamma_{k+1} = [L, gamma_k], up to the first repeat."""
    series = [full_space(L.dim, L.field)]
    for _ in range(L.dim + 1):
        nxt = bracket_with_space(L, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


NOT_NILPOTENT = None


def nilpotency_class(L: LieAlgebra) -> int | None:
    """Least c with gamma_{c+1} = 0, or ``NOT_NILPOTENT`` (None)."""
    series = lower_central_series(L)
    if series[-1].dim:
        return NOT_NILPOTENT
    return len(series) - 1


def is_ideal(L: LieAlgebra, S: Subspace) -> bool:
    F = L.field
    eqs = [sparse(f) for f in annihilator(S).basis]
    table = L.brackets
    for b in S.basis:
        sb = sparse(b)
        for i in range(L.dim):
            # [e_i, b] as a sparse dict
            v: dict = {}
            for m, a in sb:
                if i < m:
                    col, w = table.get((i, m)), a
                elif i > m:
                    col, w = table.get((m, i)), -a
                else:
                    continue
                if col:
                    for k, c in col.items():
                        v[k] = v.get(k, 0) + w * c
            if not v:
                continue
            for e in eqs:
                if F.norm(sum((c * v[j] for j, c in e if j in v), F.zero)):
                    return False
    return True


@dataclass(frozen=True)
class IdealHandle:
    parent: LieAlgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


def ideal_closure(L: LieAlgebra, generators) -> IdealHandle:
    """Smallest ideal containing the generators."""
    sb = SpanBuilder(L.dim, L.field)
    queue = []
    for g in generators:
        L._check(g)
        if sb.add(g):
            queue.append(tuple(g))
    while queue:
        v = queue.pop()
        for i in range(L.dim):
            w = L.bracket(L.unit(i), v)
            if sb.add(w):
                queue.append(w)
    return IdealHandle(L, sb.subspace())


def quotient(L: LieAlgebra, I: IdealHandle):
    """``(L/I, projection, section)`` on the non-pivot coordinates of I.

    Labels of surviving basis elements become ``q(<label>)``.
    """
    S = I.space
    if S.ambient_dim != L.dim:
        raise DimensionError("ideal lives in a different space")
    if not is_ideal(L, S):
        raise NotAnIdealError("subspace is not closed under brackets with L")
    proj, sec = quotient_coordinates(S)
    pivset = set(S.pivots)
    comp = [j for j in range(L.dim) if j not in pivset]
    F = L.field
    brackets = {}
    for a in range(len(comp)):
        for b in range(a + 1, len(comp)):
            col = L.brackets.get((comp[a], comp[b]))
            if not col:
                continue
            v = [F.zero] * L.dim
            for k, c in col.items():
                v[k] = c
            img = mat_vec(proj, v, F)
            brackets[(a, b)] = {k: c for k, c in enumerate(img) if c}
    labels = [f"q({L.labels[j]})" for j in comp]
    return LieAlgebra(len(comp), F, brackets, labels), proj, sec


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    if L1.field != L2.field:
        raise LieAlgebraError("direct sum of algebras over different fields")
    s = L1.dim
    brackets = dict(L1.brackets)
    for (i, j), col in L2.brackets.items():
        brackets[(i + s, j + s)] = {k + s: c for k, c in col.items()}
    return LieAlgebra(s + L2.dim, L1.field, brackets, L1.labels + L2.labels)


def change_field(L: LieAlgebra, F: Field) -> LieAlgebra:
    """Reinterpret the structure constants over F (e.g. reduce Q mod p)."""
    out = {}
    for key, col in L.brackets.items():
        out[key] = {k: F(c) for k, c in col.items()}
    return LieAlgebra(L.dim, F, out, L.labels)


def abelian_algebra(n: int, F: Field) -> LieAlgebra:
    return LieAlgebra(n, F)


def zero_ideal(L: LieAlgebra) -> IdealHandle:
    return IdealHandle(L, zero_space(L.dim, L.field))
