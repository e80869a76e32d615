"""Compiled vs numpy-fallback GF(p) kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

saturate_modp is timed on the W-enumeration tensors of real algebras, once
with the production early-stop bound and once with the bound lifted so that
every projective point is visited. rref_modp is timed on seeded random
matrices. Both backends must return identical results; a mismatch aborts.
"""

import argparse
import sys
import time

import numpy as np

from bogomolov import _backend, _fallback
from bogomolov.exactlinalg import Field
from bogomolov.families import freest_gen_heisenberg, heisenberg, theorem1_quotient
from bogomolov.varietyspan import CentralFrame, WedgeIndex, _wedge_bound, _wedge_tensors

try:
    from bogomolov import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return out, best


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def rref_copy(impl, m, p):
    a = m.copy()
    return a, impl.rref_modp(a, p)


def saturation_cases():
    for p in (2, 3):
        F = Field.prime(p)
        yield f"theorem1 n=1 GF({p})", theorem1_quotient(1, field=F)[0]
        yield f"theorem1 n=2 GF({p})", theorem1_quotient(2, field=F)[0]
        yield f"L5 GF({p})", freest_gen_heisenberg(5, F)
    yield "H7 GF(3)", heisenberg(3, Field.prime(3))


def rref_cases(rng):
    for p in (2, 3, 101):
        for shape in ((40, 60), (120, 120), (200, 300)):
            yield f"random {shape[0]}x{shape[1]} mod {p}", rng.integers(0, p, size=shape, dtype=np.int64), p


def row(label, t_fast, t_slow):
    ratio = t_slow / t_fast if t_fast else float("inf")
    print(f"{label:<54} {t_fast * 1e3:>10.2f} {t_slow * 1e3:>12.2f} {ratio:>8.1f}x")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1
    print(f"active backend: {_backend.NAME}")
    print(f"{'case':<54} {'compiled ms':>10} {'fallback ms':>12} {'speedup':>9}")

    for label, L in saturation_cases():
        frame = CentralFrame(L)
        A, B = _wedge_tensors(frame)
        p = L.field.p
        for tag, bound in (("early stop", _wedge_bound(frame)), ("full", len(WedgeIndex(frame.c)))):
            fast, tf = best_of(lambda: _kernels.saturate_modp(A, B, p, bound), args.repeat)
            slow, ts = best_of(lambda: _fallback.saturate_modp(A, B, p, bound), args.repeat)
            if not same(fast, slow):
                sys.exit(f"saturate_modp mismatch on {label} ({tag})")
            row(f"saturate {label} [{tag}, {fast[2]} pts]", tf, ts)

    rng = np.random.default_rng(20240601)
    for label, m, p in rref_cases(rng):
        (a1, piv_fast), tf = best_of(lambda: rref_copy(_kernels, m, p), args.repeat)
        (a2, piv_slow), ts = best_of(lambda: rref_copy(_fallback, m, p), args.repeat)
        if piv_fast != piv_slow or not np.array_equal(a1, a2):
            sys.exit(f"rref_modp mismatch on {label}")
        row(f"rref {label}", tf, ts)
    return 0


if __name__ == "__main__":
    sys.exit(main())
