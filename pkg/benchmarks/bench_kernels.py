"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same workloads through both backends and reports wall time and
speedup.  Usage:

    python3 benchmarks/bench_kernels.py

The pure backend is always importable; the compiled one is skipped (with a
note) if the extension is not built.
"""

import random
import time
from fractions import Fraction

from egy._kernels import _core_py

try:
    from egy._kernels import _core_cy
except ImportError:
    _core_cy = None


def _time(fn, *args, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_two_term_scan(mod):
    """Long two-term scans: tiny targets force ~10^6-iteration windows."""

    def run():
        total = 0
        for q in (10**6 + 3, 2 * 10**6 + 1, 3 * 10**6 + 7):
            res = mod.two_term_max_below(1, q, 2, 1, q + 1, False, None)
            total += res[5]
        return total

    return _time(run)


def bench_two_term_batch(mod):
    """Many short scans with pseudorandom rational targets."""
    rng = random.Random(99)
    cases = []
    for _ in range(3000):
        d = rng.randrange(10**3, 10**7)
        n = rng.randrange(1, d)
        x = Fraction(n, d)
        thr = x - Fraction(1, rng.randrange(10**4, 10**8))
        cases.append((x.numerator, x.denominator, 1, thr.numerator, thr.denominator))

    def run():
        total = 0
        for args in cases:
            total += mod.two_term_max_below(*args)[5]
        return total

    return _time(run)


def bench_min_competitors(mod):
    def run():
        out = 0
        for i in (500, 800, 1000):
            out += len(mod.two_term_min_competitors(i))
        return out

    return _time(run)


def bench_direct_terms(mod):
    def run():
        return len(mod.direct_mode_terms(2000))

    return _time(run)


BENCHES = [
    ("two_term_max_below / long scans", bench_two_term_scan),
    ("two_term_max_below / 3000 short scans", bench_two_term_batch),
    ("two_term_min_competitors i<=1000", bench_min_competitors),
    ("direct_mode_terms i=2000", bench_direct_terms),
]


def main():
    print(f"{'benchmark':<42}{'python':>10}{'cython':>10}{'speedup':>9}")
    for name, bench in BENCHES:
        t_py, out_py = bench(_core_py)
        if _core_cy is None:
            print(f"{name:<42}{t_py:>9.3f}s{'n/a':>10}{'':>9}")
            continue
        t_cy, out_cy = bench(_core_cy)
        assert out_py == out_cy, f"backend mismatch in {name}"
        print(f"{name:<42}{t_py:>9.3f}s{t_cy:>9.3f}s{t_py / t_cy:>8.1f}x")
    if _core_cy is None:
        print("\ncompiled backend not built; showing pure-Python times only")


if __name__ == "__main__":
    main()
