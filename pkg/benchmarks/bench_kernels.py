"""Timing comparison of the compiled kernels against the NumPy fallback.

Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from bellforge.bell.functionals import mermin
from bellforge.bell.generate import (
    _compose_three_party,
    symmetry_tables,
)
from bellforge.kernels import _pure

try:
    from bellforge.kernels import _fast
except ImportError:
    _fast = None


def timeit(fn, *args, repeat=3):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_canonical(n_candidates=300):
    perms, signs = symmetry_tables(3)
    cands = _compose_three_party()[:n_candidates]
    flats = [np.asarray(g, dtype=np.int8).ravel() for g in cands]

    def run(impl):
        return [impl.canonical_form(g, perms, signs).tobytes() for g in flats]

    t_pure, out_pure = timeit(run, _pure, repeat=1)
    print(f"canonical_form x{len(flats)} (group {perms.shape[0]}):")
    print(f"  pure     {t_pure:8.3f} s   ({t_pure/len(flats)*1e3:6.2f} ms each)")
    if _fast is not None:
        t_fast, out_fast = timeit(run, _fast, repeat=1)
        assert out_fast == out_pure
        print(
            f"  compiled {t_fast:8.3f} s   ({t_fast/len(flats)*1e3:6.2f} ms each)"
            f"   speedup x{t_pure/t_fast:.1f}"
        )


def bench_lhv():
    cases = {
        "mermin6 (2^12 strategies)": mermin(6).coeffs.astype(np.int64),
        "dense 12x12 two-party (2^24 strategies)": np.arange(144).reshape(12, 12)
        % 7
        - 3,
    }
    for label, coeffs in cases.items():
        coeffs = coeffs.astype(np.int64)
        t_pure, vics = timeit(_pure.lhv_max_int, coeffs, repeat=1)
        line = f"lhv_max_int {label}:\n  pure     {t_pure:8.3f} s"
        print(line)
        if _fast is not None:
            t_fast, vf = timeit(_fast.lhv_max_int, coeffs, repeat=1)
            assert vf == vics
            print(
                f"  compiled {t_fast:8.3f} s   speedup x{t_pure/t_fast:.1f}"
            )


if __name__ == "__main__":
    bench_canonical()
    bench_lhv()
