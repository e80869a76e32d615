"""Generators for the algebra families used throughout the package.

All constructors return algebras with integer structure constants, so any
of them can be built over Q or GF(p) by passing ``field``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exactlinalg import Field
from .liealg import IdealHandle, LieAlgebra, ideal_closure, quotient

Q = Field.rationals()


class ParameterError(ValueError):
    pass


def abelian(n: int, field: Field = Q) -> LieAlgebra:
    if n < 0:
        raise ParameterError("n must be >= 0")
    return LieAlgebra(n, field)


def heisenberg(n: int, field: Field = Q) -> LieAlgebra:
    """H_{2n+1}: [x_{2i-1}, x_{2i}] = v, all other brackets zero."""
    if n < 1:
        raise ParameterError("heisenberg(n) needs n >= 1")
    v = 2 * n
    brackets = {(2 * i, 2 * i + 1): {v: 1} for i in range(n)}
    labels = [f"x{i + 1}" for i in range(2 * n)] + ["v"]
    return LieAlgebra(2 * n + 1, field, brackets, labels)


def y_index(d: int, i: int, j: int) -> int:
    """Position of y_ij (0-based generators i < j) in the L_d basis."""
    # generators first, then y_ij in lexicographic order
    return d + i * d - i * (i + 1) // 2 + (j - i - 1)


def freest_gen_heisenberg(d: int, field: Field = Q) -> LieAlgebra:
    """L_d: free nilpotent of class 2 on x_1..x_d, with [x_i, x_j] = y_ij."""
    if d < 2:
        raise ParameterError("freest_gen_heisenberg(d) needs d >= 2")
    brackets = {}
    labels = [f"x{i + 1}" for i in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            brackets[(i, j)] = {y_index(d, i, j): 1}
            labels.append(f"y{i + 1}_{j + 1}")
    return LieAlgebra(d * (d + 1) // 2, field, brackets, labels)


def _y_vector(d: int, terms, field: Field) -> tuple:
    v = [field.zero] * (d * (d + 1) // 2)
    for (i, j), c in terms:
        v[y_index(d, i - 1, j - 1)] = field(c)
    return tuple(v)


def theorem1_ideal(n: int, d: int, field: Field = Q) -> IdealHandle:
    """Ideal of L_d generated by [x_{4k+1}, x_{4k+2}] + [x_{4k+3}, x_{4k+4}]."""
    if n < 1 or d <= 4 * n:
        raise ParameterError(f"need n >= 1 and d > 4n (got n={n}, d={d})")
    L = freest_gen_heisenberg(d, field)
    gens = [_y_vector(d, [((4 * k + 1, 4 * k + 2), 1), ((4 * k + 3, 4 * k + 4), 1)], field)
            for k in range(n)]
    return ideal_closure(L, gens)


def theorem1_quotient(n: int, d: int | None = None, field: Field = Q):
    """``(L_d / M, M)`` whose Bogomolov multiplier has dimension n.

    ``d`` defaults to the smallest admissible value 4n + 1.
    """
    if d is None:
        d = 4 * n + 1
    M = theorem1_ideal(n, d, field)
    Lq, _, _ = quotient(M.parent, M)
    return Lq, M


def heisenberg_ideal(n: int, field: Field = Q) -> IdealHandle:
    """Ideal M of L_{2n} with L_{2n} / M isomorphic to H_{2n+1}."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    d = 2 * n
    L = freest_gen_heisenberg(d, field)
    gens = []
    for r in range(1, n + 1):
        for s in range(r + 1, n + 1):
            gens.append(_y_vector(d, [((2 * r - 1, 2 * r), 1), ((2 * s - 1, 2 * s), -1)], field))
    symplectic = {(2 * i - 1, 2 * i) for i in range(1, n + 1)}
    for t in range(1, d + 1):
        for u in range(t + 1, d + 1):
            if (t, u) not in symplectic:
                gens.append(_y_vector(d, [((t, u), 1)], field))
    return ideal_closure(L, gens)


def heisenberg_as_quotient(n: int, field: Field = Q):
    M = heisenberg_ideal(n, field)
    Lq, _, _ = quotient(M.parent, M)
    return Lq, M


def random_class2(g: int, z: int, seed: int, field: Field = Q) -> LieAlgebra:
    """g generators whose brackets land in a z-dimensional central block.

    Coefficients are drawn from -3..3 with ``random.Random(seed)``.
    """
    if g < 2 or z < 1 or z > g * (g - 1) // 2:
        raise ParameterError(f"need g >= 2 and 1 <= z <= g(g-1)/2 (got g={g}, z={z})")
    rng = random.Random(seed)
    brackets = {}
    for i in range(g):
        for j in range(i + 1, g):
            brackets[(i, j)] = {g + k: rng.randint(-3, 3) for k in range(z)}
    labels = [f"x{i + 1}" for i in range(g)] + [f"z{k + 1}" for k in range(z)]
    return LieAlgebra(g + z, field, brackets, labels)


FAMILY_NAMES = ("abelian", "heisenberg", "gen-heisenberg", "theorem1",
                "heisenberg-quotient", "random-class2")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]
    field: Field = Q
    seed: int = 0

    def build(self) -> LieAlgebra:
        return build_family(self)

    def build_with_ideal(self) -> tuple[LieAlgebra, IdealHandle | None]:
        """Parent algebra and ideal for the quotient families, else (L, None)."""
        if self.name == "theorem1":
            M = theorem1_ideal(*_theorem1_params(self.params), self.field)
            return M.parent, M
        if self.name == "heisenberg-quotient":
            (n,) = _arity(self, 1)
            M = heisenberg_ideal(n, self.field)
            return M.parent, M
        return self.build(), None


def _arity(spec: FamilySpec, k: int):
    if len(spec.params) != k:
        raise ParameterError(f"family {spec.name} takes {k} integer parameter(s)")
    return spec.params


def _theorem1_params(params):
    if len(params) == 1:
        return params[0], 4 * params[0] + 1
    if len(params) == 2:
        return params
    raise ParameterError("family theorem1 takes n [d]")


def build_family(spec: FamilySpec) -> LieAlgebra:
    name, F = spec.name, spec.field
    if name == "abelian":
        return abelian(*_arity(spec, 1), F)
    if name == "heisenberg":
        return heisenberg(*_arity(spec, 1), F)
    if name == "gen-heisenberg":
        return freest_gen_heisenberg(*_arity(spec, 1), F)
    if name == "theorem1":
        return theorem1_quotient(*_theorem1_params(spec.params), F)[0]
    if name == "heisenberg-quotient":
        return heisenberg_as_quotient(*_arity(spec, 1), F)[0]
    if name == "random-class2":
        g, z = _arity(spec, 2)
        return random_class2(g, z, spec.seed, F)
    raise ParameterError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")


def class2_corpus(count: int, seed: int, max_dim: int = 8, field: Field = Q):
    """``count`` seeded random class-2 algebras of dimension <= max_dim.

    Returns a list of ``(name, algebra)``; names encode g, z and the seed.
    """
    if max_dim < 3:
        raise ParameterError("max_dim must be >= 3")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        g = rng.randint(2, max_dim - 1)
        z = rng.randint(1, min(max_dim - g, g * (g - 1) // 2))
        s = rng.randrange(2**31)
        out.append((f"random-class2-{g}-{z}-{s}", random_class2(g, z, s, field)))
    return out
