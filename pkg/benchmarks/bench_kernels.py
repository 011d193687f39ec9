"""Benchmark the pure-Python kernels against the compiled extension.

Run as a script: python benchmarks/bench_kernels.py
"""

import time

from nonbond._kernels import available_backends, get_backend
from nonbond.counting import _dp_arrays


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_dp(cols, rows):
    in_ptr, in_src, weights, terminal, start = _dp_arrays(cols)
    bits = (3 ** cols).bit_length() + 24
    shifts = [w * bits for w in weights]
    results = {}
    for name in available_backends():
        impl = get_backend(name)
        results[name] = _time(lambda: impl.dp_rows(
            len(weights), in_ptr, in_src, shifts, start, terminal, rows))
    return results


def bench_enumerate(rows, cols, want_d):
    results = {}
    for name in available_backends():
        impl = get_backend(name)
        results[name] = _time(
            lambda: impl.enumerate_boards(rows, cols, want_d, False))
    return results


def main():
    print("backends:", ", ".join(available_backends()))
    print()
    print("%-34s %10s %10s %8s" % ("case", "pure", "compiled", "speedup"))
    cases = []
    for cols, rows in [(6, 60), (7, 40), (8, 30)]:
        cases.append(("dp_rows cols=%d rows=%d" % (cols, rows),
                      bench_dp(cols, rows)))
    for rows, cols, want_d in [(6, 6, -1), (7, 6, -1), (8, 6, 12), (10, 5, 13)]:
        cases.append(("enumerate %dx%d d=%d" % (rows, cols, want_d),
                      bench_enumerate(rows, cols, want_d)))
    for label, res in cases:
        pure_t, pure_out = res["pure"]
        if "compiled" in res:
            comp_t, comp_out = res["compiled"]
            assert pure_out == comp_out, label
            print("%-34s %9.4fs %9.4fs %7.1fx"
                  % (label, pure_t, comp_t, pure_t / comp_t))
        else:
            print("%-34s %9.4fs %10s" % (label, pure_t, "n/a"))


if __name__ == "__main__":
    main()
