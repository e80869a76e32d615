# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled GF(p) kernels; see ``_fallback.py`` for the reference semantics."""

import numpy as np
from libc.stdint cimport int64_t


cdef inline int64_t _mod(int64_t x, int64_t p) nogil:
    x = x % p
    if x < 0:
        x += p
    return x


cdef int64_t _inv(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, nt = 1, r = p, nr = a, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    return _mod(t, p)


cdef Py_ssize_t _rref(int64_t[:, ::1] a, int64_t p, Py_ssize_t[::1] piv) nogil:
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, s
    cdef int64_t inv, f, tmp
    for c in range(cols):
        if r == rows:
            break
        s = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                s = i
                break
        if s < 0:
            continue
        if s != r:
            for j in range(c, cols):
                tmp = a[r, j]
                a[r, j] = a[s, j]
                a[s, j] = tmp
        inv = _inv(a[r, c], p)
        for j in range(c, cols):
            a[r, j] = a[r, j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                if a[r, j] != 0:
                    a[i, j] = _mod(a[i, j] - f * a[r, j], p)
        piv[r] = c
        r += 1
    return r


def rref_modp(int64_t[:, ::1] a, int64_t p):
    piv = np.zeros(max(a.shape[0], 1), dtype=np.intp)
    cdef Py_ssize_t[::1] pv = piv
    cdef Py_ssize_t r = _rref(a, p, pv)
    return [int(pv[i]) for i in range(r)]


def saturate_modp(const int64_t[:, :, ::1] A, const int64_t[:, :, ::1] B, int64_t p,
                  Py_ssize_t bound):
    cdef Py_ssize_t c = A.shape[0], q = A.shape[1], n = A.shape[2], m = B.shape[2]
    if bound <= 0 or c == 0 or m == 0:
        return np.zeros((0, m), dtype=np.int64), [], 0

    S_arr = np.zeros((m, m), dtype=np.int64)
    spiv_arr = np.zeros(m, dtype=np.intp)
    Mx_arr = np.zeros((max(q, 1), n), dtype=np.int64)
    R_arr = np.zeros((max(q, 1), n), dtype=np.int64)
    Wx_arr = np.zeros((n, m), dtype=np.int64)
    piv_arr = np.zeros(max(q, 1), dtype=np.intp)
    isp_arr = np.zeros(n, dtype=np.int8)
    y_arr = np.zeros(n, dtype=np.int64)
    v_arr = np.zeros(m, dtype=np.int64)
    t_arr = np.zeros(c, dtype=np.int64)

    cdef int64_t[:, ::1] S = S_arr
    cdef Py_ssize_t[::1] spiv = spiv_arr
    cdef int64_t[:, ::1] Mx = Mx_arr
    cdef int64_t[:, ::1] R = R_arr
    cdef int64_t[:, ::1] Wx = Wx_arr
    cdef Py_ssize_t[::1] piv = piv_arr
    cdef signed char[::1] isp = isp_arr
    cdef int64_t[::1] y = y_arr
    cdef int64_t[::1] v = v_arr
    cdef int64_t[::1] t = t_arr

    cdef Py_ssize_t dim = 0, count = 0, lead, k, a, i, j, f, s, rk, k0
    cdef int64_t ta, acc, g, inv
    cdef bint unsound = False, done = False

    with nogil:
        for lead in range(c):
            if done:
                break
            for k in range(c):
                t[k] = 0
            t[lead] = 1
            while True:
                count += 1
                # fiber matrix and collector for this point
                for i in range(q):
                    for j in range(n):
                        acc = 0
                        for a in range(lead, c):
                            ta = t[a]
                            if ta != 0:
                                acc = (acc + ta * A[a, i, j]) % p
                        Mx[i, j] = acc
                        R[i, j] = acc
                for j in range(n):
                    for k in range(m):
                        acc = 0
                        for a in range(lead, c):
                            ta = t[a]
                            if ta != 0:
                                acc = (acc + ta * B[a, j, k]) % p
                        Wx[j, k] = acc
                rk = 0
                if q > 0:
                    rk = _rref(R, p, piv)
                for j in range(n):
                    isp[j] = 0
                for i in range(rk):
                    isp[piv[i]] = 1
                for f in range(n):
                    if isp[f]:
                        continue
                    for j in range(n):
                        y[j] = 0
                    y[f] = 1
                    for i in range(rk):
                        y[piv[i]] = _mod(-R[i, f], p)
                    for i in range(q):
                        acc = Mx[i, f]
                        for s in range(rk):
                            acc = (acc + Mx[i, piv[s]] * y[piv[s]]) % p
                        if acc != 0:
                            unsound = True
                    for k in range(m):
                        acc = Wx[f, k]
                        for i in range(rk):
                            acc = (acc + y[piv[i]] * Wx[piv[i], k]) % p
                        v[k] = acc
                    for s in range(dim):
                        g = v[spiv[s]]
                        if g != 0:
                            for k in range(m):
                                if S[s, k] != 0:
                                    v[k] = _mod(v[k] - g * S[s, k], p)
                    k0 = -1
                    for k in range(m):
                        if v[k] != 0:
                            k0 = k
                            break
                    if k0 < 0:
                        continue
                    inv = _inv(v[k0], p)
                    for k in range(m):
                        v[k] = v[k] * inv % p
                    for s in range(dim):
                        g = S[s, k0]
                        if g != 0:
                            for k in range(m):
                                if v[k] != 0:
                                    S[s, k] = _mod(S[s, k] - g * v[k], p)
                    for k in range(m):
                        S[dim, k] = v[k]
                    spiv[dim] = k0
                    dim += 1
                    if dim >= bound:
                        done = True
                        break
                if done or unsound:
                    break
                k = c - 1
                while k > lead:
                    t[k] += 1
                    if t[k] < p:
                        break
                    t[k] = 0
                    k -= 1
                if k == lead:
                    break
            if unsound:
                break

    if unsound:
        raise AssertionError("fiber vector fails its defining equations")
    order = np.argsort(spiv_arr[:dim], kind="stable")
    basis = S_arr[:dim][order].copy()
    pivots = [int(x) for x in spiv_arr[:dim][order]]
    return basis, pivots, int(count)
