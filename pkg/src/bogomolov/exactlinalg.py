"""Exact scalars and dense linear algebra over Q and GF(p).

Vectors are tuples of field elements: ``Fraction`` over Q, ``int`` in
``[0, p)`` over GF(p).  Matrices are sequences of row vectors.  Every
subspace is carried in reduced row echelon form, so two subspaces are equal
exactly when their bases compare equal.

Rational elimination is fraction-free Gauss-Jordan on primitive integer rows;
prime-field elimination is delegated to the kernel backend (compiled when
available, numpy otherwise).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _backend

ZERO = Fraction(0)
ONE = Fraction(1)


class FieldError(ValueError):
    pass


class DimensionError(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, trial division below 1000."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Ground field descriptor; ``p == 0`` means the rationals."""

    p: int = 0

    def __post_init__(self):
        if self.p and not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> Field:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> Field:
        if p < 2:
            raise FieldError(f"{p} is not prime")
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> Field:
        """Parse ``"Q"`` or ``"GF:p"``."""
        t = text.strip()
        if t.upper() == "Q":
            return cls.rationals()
        head, _, tail = t.partition(":")
        if head.upper() == "GF" and tail.strip().isdigit():
            return cls.prime(int(tail))
        raise FieldError(f"unknown field {text!r}; expected Q or GF:p")

    @property
    def kind(self) -> str:
        return "PRIME_FIELD" if self.p else "RATIONALS"

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def zero(self):
        return 0 if self.p else ZERO

    @property
    def one(self):
        return 1 if self.p else ONE

    def __str__(self):
        return f"GF({self.p})" if self.p else "Q"

    def to_json(self) -> dict:
        return {"type": "GF", "p": self.p} if self.p else {"type": "Q"}

    def __call__(self, x):
        """Coerce an int, Fraction or ``"num/den"`` string into this field."""
        if isinstance(x, str):
            x = _parse_scalar(x)
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise FieldError(f"not an exact scalar: {x!r}")
        if not self.p:
            return Fraction(x)
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise FieldError(f"{x} has denominator divisible by {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        return x % self.p

    def norm(self, x):
        """Reduce the result of plain Python arithmetic into canonical form."""
        return x % self.p if self.p else x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p) if self.p else 1 / x

    def fmt(self, x) -> str:
        return str(x)

    def random(self, rng, bound: int):
        return self(rng.randint(-bound, bound))


def _parse_scalar(s: str) -> Fraction | int:
    s = s.strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return int(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FieldError(f"bad scalar {s!r}") from exc


# ---------------------------------------------------------------- vectors

def zeros(n: int, F: Field) -> tuple:
    return (F.zero,) * n


def unit(n: int, i: int, F: Field) -> tuple:
    v = [F.zero] * n
    v[i] = F.one
    return tuple(v)


def is_zero(v: Iterable) -> bool:
    return not any(v)


def add(u, v, F: Field) -> tuple:
    return tuple(F.norm(a + b) for a, b in zip(u, v))


def sub(u, v, F: Field) -> tuple:
    return tuple(F.norm(a - b) for a, b in zip(u, v))


def scale(c, v, F: Field) -> tuple:
    return tuple(F.norm(c * a) for a in v)


def dot(u, v, F: Field):
    return F.norm(sum((a * b for a, b in zip(u, v) if a), F.zero))


def combination(coeffs, vectors, n: int, F: Field) -> tuple:
    out = [F.zero] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] += c * x
    return tuple(F.norm(x) for x in out)


def sparse(v) -> list[tuple[int, object]]:
    return [(j, x) for j, x in enumerate(v) if x]


# ---------------------------------------------------------------- matrices

def identity(n: int, F: Field) -> tuple:
    return tuple(unit(n, i, F) for i in range(n))


def transpose(rows: Sequence[Sequence], ncols: int | None = None) -> tuple:
    if not rows:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*rows))


def mat_vec(rows: Sequence[Sequence], v, F: Field) -> tuple:
    return tuple(dot(r, v, F) for r in rows)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], F: Field,
            inner: int | None = None) -> tuple:
    ncols = len(b[0]) if b else 0
    out = []
    for r in a:
        acc = [F.zero] * ncols
        for k, x in enumerate(r):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(tuple(F.norm(t) for t in acc))
    return tuple(out)


def _check_width(rows, ncols):
    for r in rows:
        if len(r) != ncols:
            raise DimensionError(f"row of length {len(r)} in a {ncols}-column matrix")


def rref(rows: Sequence[Sequence], F: Field, ncols: int | None = None):
    """Reduced row echelon form and pivot columns (zero rows dropped).

    Pivots are chosen as the first nonzero entry in column order, scanning
    rows top-down.
    """
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    _check_width(rows, ncols)
    if not rows or ncols == 0:
        return (), ()
    if F.p:
        return _rref_modp(rows, F.p, ncols)
    return _rref_rational(rows, ncols)


def _rref_modp(rows, p, ncols):
    dtype = np.int64 if p < _backend.MAX_MODULUS else object
    a = np.array([[x % p for x in r] for r in rows], dtype=dtype).reshape(len(rows), ncols)
    if dtype is object:
        pivots = _backend.fallback.rref_modp(a, p)
    else:
        pivots = _backend.rref_modp(a, p)
    basis = tuple(tuple(int(x) for x in r) for r in a[: len(pivots)].tolist())
    return basis, tuple(int(c) for c in pivots)


def _primitive(ints: list[int]) -> list[int] | None:
    g = math.gcd(*ints)
    if g == 0:
        return None
    if g != 1:
        ints = [x // g for x in ints]
    return ints


def _rref_rational(rows, ncols):
    work = []
    for r in rows:
        den = math.lcm(*(x.denominator for x in r))
        ints = _primitive([x.numerator * (den // x.denominator) for x in r])
        if ints is not None:
            work.append(ints)
    pivots = []
    prow = 0
    nrows = len(work)
    for c in range(ncols):
        if prow == nrows:
            break
        for s in range(prow, nrows):
            if work[s][c]:
                break
        else:
            continue
        if s != prow:
            work[s], work[prow] = work[prow], work[s]
        piv = work[prow]
        if piv[c] < 0:
            piv = [-x for x in piv]
            work[prow] = piv
        a = piv[c]
        support = [j for j in range(c, ncols) if piv[j]]
        for s in range(nrows):
            if s == prow:
                continue
            row = work[s]
            b = row[c]
            if not b:
                continue
            if a == 1:
                for j in support:
                    row[j] -= b * piv[j]
                # rows stay primitive only up to a common factor; normalise lazily
            else:
                row = [a * x - b * y for x, y in zip(row, piv)]
                work[s] = _primitive(row) or [0] * ncols
        pivots.append(c)
        prow += 1
    basis = []
    for i, c in enumerate(pivots):
        row = work[i]
        a = row[c]
        basis.append(tuple(Fraction(x, a) if x else ZERO for x in row))
    return tuple(basis), tuple(pivots)


def rank(rows: Sequence[Sequence], F: Field, ncols: int | None = None) -> int:
    return len(rref(rows, F, ncols)[1])


def inverse(rows: Sequence[Sequence], F: Field) -> tuple:
    n = len(rows)
    aug = [tuple(r) + unit(n, i, F) for i, r in enumerate(rows)]
    red, piv = rref(aug, F, 2 * n)
    if piv != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(r[n:] for r in red)


# ---------------------------------------------------------------- subspaces

@dataclass(frozen=True)
class Subspace:
    """Subspace of F^n held by its canonical RREF basis."""

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def _check(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionError(
                f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")

    def residual(self, v) -> tuple:
        """Reduce v against the basis; zero iff v lies in the subspace."""
        self._check(v)
        F = self.field
        out = list(v)
        for row, c in zip(self.basis, self.pivots):
            t = out[c]
            if t:
                for j, x in enumerate(row):
                    if x:
                        out[j] = F.norm(out[j] - t * x)
        return tuple(out)

    def contains(self, v) -> bool:
        return is_zero(self.residual(v))

    __contains__ = contains

    def is_subspace_of(self, other: Subspace) -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError("ambient dimensions differ")
        return self.dim <= other.dim and all(other.contains(b) for b in self.basis)

    def coordinates(self, v) -> tuple:
        """Coefficients of v in the RREF basis (v must lie in the subspace)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def vector(self, coords) -> tuple:
        return combination(coords, self.basis, self.ambient_dim, self.field)


def span(vectors: Iterable[Sequence], ambient_dim: int, F: Field) -> Subspace:
    vectors = list(vectors)
    basis, piv = rref(vectors, F, ambient_dim)
    return Subspace(F, ambient_dim, basis, piv)


def zero_space(n: int, F: Field) -> Subspace:
    return Subspace(F, n, (), ())


def full_space(n: int, F: Field) -> Subspace:
    return Subspace(F, n, identity(n, F), tuple(range(n)))


def _kernel_vectors(basis, piv, ncols, F):
    pivset = set(piv)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [F.zero] * ncols
        v[f] = F.one
        for row, c in zip(basis, piv):
            if row[f]:
                v[c] = F.norm(-row[f])
        out.append(tuple(v))
    return out


def kernel_vectors(rows: Sequence[Sequence], F: Field, ncols: int) -> list:
    """A (non-canonical) basis of the right null space, one vector per free column."""
    basis, piv = rref(rows, F, ncols)
    return _kernel_vectors(basis, piv, ncols, F)


def kernel(rows: Sequence[Sequence], F: Field, ncols: int) -> Subspace:
    """Right null space {v : rows . v = 0}."""
    basis, piv = rref(rows, F, ncols)
    return span(_kernel_vectors(basis, piv, ncols, F), ncols, F)


def annihilator(s: Subspace) -> Subspace:
    """Functionals (in dual-basis coordinates) vanishing on s."""
    return span(_kernel_vectors(s.basis, s.pivots, s.ambient_dim, s.field),
                s.ambient_dim, s.field)


def _same_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise DimensionError("subspaces live in different ambient spaces")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _same_ambient(a, b)
    if b.is_subspace_of(a):
        return a
    return span(a.basis + b.basis, a.ambient_dim, a.field)


def restricted_kernel(s: Subspace, equations: Iterable[Sequence]) -> Subspace:
    """{v in s : e . v = 0 for every equation row e}."""
    F = s.field
    eqs = [sparse(e) for e in equations]
    eqs = [e for e in eqs if e]
    if not eqs or not s.dim:
        return s
    coeff_rows = []
    for e in eqs:
        coeff_rows.append(tuple(
            F.norm(sum((x * b[j] for j, x in e), F.zero)) for b in s.basis))
    lam = kernel(coeff_rows, F, s.dim)
    return span((s.vector(c) for c in lam.basis), s.ambient_dim, F)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _same_ambient(a, b)
    n = a.ambient_dim
    # impose the smaller equation set on the smaller basis
    if (n - b.dim) * a.dim > (n - a.dim) * b.dim:
        a, b = b, a
    if a.is_subspace_of(b):
        return a
    return restricted_kernel(a, annihilator(b).basis)


def quotient_coordinates(s: Subspace):
    """Projection F^n -> F^n / s and a section, on non-pivot coordinates.

    Returns ``(projection, section)``: projection is k x n, section is n x k,
    with projection . section = I_k and ker(projection) = s.
    """
    F, n = s.field, s.ambient_dim
    pivset = set(s.pivots)
    comp = [j for j in range(n) if j not in pivset]
    projection = []
    for q in comp:
        row = [F.zero] * n
        row[q] = F.one
        for brow, c in zip(s.basis, s.pivots):
            if brow[q]:
                row[c] = F.norm(-brow[q])
        projection.append(tuple(row))
    section = tuple(
        tuple(F.one if j == q else F.zero for q in comp) for j in range(n))
    return tuple(projection), section


class SpanBuilder:
    """Incrementally grown subspace kept in RREF; ``add`` reports growth."""

    def __init__(self, ambient_dim: int, F: Field):
        self.ambient_dim = ambient_dim
        self.field = F
        self._rows: dict[int, list] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v) -> list:
        F = self.field
        out = list(v)
        for c, row in self._rows.items():
            t = out[c]
            if t:
                for j, x in enumerate(row):
                    if x:
                        out[j] = F.norm(out[j] - t * x)
        return out

    def add(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match the builder")
        F = self.field
        r = self.reduce(v)
        for c, x in enumerate(r):
            if x:
                break
        else:
            return False
        inv = F.inv(r[c])
        r = [F.norm(inv * x) for x in r]
        for row in self._rows.values():
            t = row[c]
            if t:
                for j, x in enumerate(r):
                    if x:
                        row[j] = F.norm(row[j] - t * x)
        self._rows[c] = r
        return True

    def subspace(self) -> Subspace:
        piv = tuple(sorted(self._rows))
        return Subspace(self.field, self.ambient_dim,
                        tuple(tuple(self._rows[c]) for c in piv), piv)
