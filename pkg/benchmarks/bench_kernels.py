"""Compare the compiled kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from fllmetric import _pykernels

try:
    from fllmetric import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    # label, n, q, t, mode (0 formula, 1 enumeration)
    ("radius-1 formula, Z_2^16", 16, 2, 1, 0),
    ("radius-1 formula, Z_3^10", 10, 3, 1, 0),
    ("radius-1 enumeration, Z_2^12", 12, 2, 1, 1),
    ("radius-2 enumeration, Z_3^7", 7, 3, 2, 1),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the pure backend is available")
    print(f"{'case':34} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, n, q, t, mode in CASES:
        job = (n, q, t, 0, q**n, mode, 0)
        py_t, py_out = best_of(lambda: _pykernels.sweep_range(*job), args.repeat)
        if _ckernels is None:
            print(f"{label:34} {py_t:10.3f} {'-':>11} {'-':>8}")
            continue
        c_t, c_out = best_of(lambda: _ckernels.sweep_range(*job), args.repeat)
        if tuple(c_out) != tuple(py_out):
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:34} {py_t:10.3f} {c_t:11.4f} {py_t / c_t:7.0f}x")


if __name__ == "__main__":
    main()
