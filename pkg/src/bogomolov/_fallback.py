"""Pure-Python (numpy) versions of the GF(p) kernels in ``_kernels.pyx``.

Both modules expose the same two functions with identical semantics,
including the enumeration order, so their outputs are interchangeable.
"""

from __future__ import annotations

import itertools

import numpy as np


def rref_modp(a: np.ndarray, p: int) -> list[int]:
    """In-place Gauss-Jordan reduction of ``a`` modulo p.

    ``a`` holds residues in [0, p).  On return the first ``len(pivots)`` rows
    are the RREF basis and the remaining rows are zero.
    """
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        s = r + int(nz[0])
        if s != r:
            a[[r, s]] = a[[s, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return pivots


def projective_points(c: int, p: int):
    """Representatives of the nonzero vectors of GF(p)^c up to scalars.

    The first nonzero coordinate is 1; the trailing coordinates run in
    odometer order with the last one fastest.
    """
    for lead in range(c):
        head = [0] * lead + [1]
        for tail in itertools.product(range(p), repeat=c - lead - 1):
            yield head + list(tail)


def saturate_modp(A: np.ndarray, B: np.ndarray, p: int, bound: int):
    """Span of all collected vectors over every projective point t.

    For each t, the fiber is ker(sum_a t_a A[a]) and each fiber basis vector
    y contributes v = y . (sum_a t_a B[a]).  Stops once the span reaches
    ``bound`` dimensions.  Returns ``(basis, pivots, points_visited)``.
    """
    c, q, n = A.shape
    m = B.shape[2]
    rows: dict[int, np.ndarray] = {}
    count = 0
    if bound <= 0 or c == 0 or m == 0:
        return np.zeros((0, m), dtype=np.int64), [], 0
    for t in projective_points(c, p):
        count += 1
        Mx = np.zeros((q, n), dtype=np.int64)
        Wx = np.zeros((n, m), dtype=np.int64)
        for a, ta in enumerate(t):
            if ta:
                Mx = (Mx + ta * A[a]) % p
                Wx = (Wx + ta * B[a]) % p
        R = Mx.copy()
        piv = rref_modp(R, p) if q else []
        pivset = set(piv)
        for f in range(n):
            if f in pivset:
                continue
            y = np.zeros(n, dtype=np.int64)
            y[f] = 1
            for i, pc in enumerate(piv):
                y[pc] = (-R[i, f]) % p
            if q and ((Mx @ y) % p).any():
                raise AssertionError("fiber vector fails its defining equations")
            v = (y @ Wx) % p
            for pc, row in rows.items():
                if v[pc]:
                    v = (v - v[pc] * row) % p
            nz = np.flatnonzero(v)
            if nz.size == 0:
                continue
            k0 = int(nz[0])
            v = (v * pow(int(v[k0]), -1, p)) % p
            for row in rows.values():
                if row[k0]:
                    row[:] = (row - row[k0] * v) % p
            rows[k0] = v
            if len(rows) >= bound:
                return _collect(rows, m), sorted(rows), count
    return _collect(rows, m), sorted(rows), count


def _collect(rows, m):
    if not rows:
        return np.zeros((0, m), dtype=np.int64)
    return np.array([rows[k] for k in sorted(rows)], dtype=np.int64)
