"""Compare the compiled and pure-Python sweep kernels on one rank window.

    python3 benchmarks/bench_sweep.py --window 20000 --start 1500000
"""

import argparse
import time

from linecomplex import _pykernels
from linecomplex.geometry import N_COMPLEXES, unrank_complex


def bench(kern, mask, count, check_det, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kern.sweep_counts(mask, count, check_det)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--start", type=int, default=1_500_000, help="first colex rank")
    ap.add_argument("--window", type=int, default=20_000, help="complexes per run")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--fast", action="store_true", help="skip the determinant oracle")
    args = ap.parse_args()

    kernels = [_pykernels]
    try:
        from linecomplex import _kernels
        kernels.insert(0, _kernels)
    except ImportError:
        print("compiled kernel not built; timing the Python fallback only")

    mask = unrank_complex(args.start).mask
    results, timings = [], []
    print(f"window [{args.start}, {args.start + args.window}), determinant check: {not args.fast}")
    print(f"{'backend':<8} {'seconds':>10} {'us/complex':>11} {'full sweep s':>13}")
    for kern in kernels:
        secs, result = bench(kern, mask, args.window, not args.fast, args.repeat)
        results.append(result)
        timings.append(secs)
        per = secs / args.window
        print(f"{kern.BACKEND:<8} {secs:>10.4f} {per * 1e6:>11.3f} {per * N_COMPLEXES:>13.1f}")
    if len(results) == 2:
        print("results identical:", results[0] == results[1])
        print(f"speed-up: {timings[1] / timings[0]:.0f}x")


if __name__ == "__main__":
    main()
