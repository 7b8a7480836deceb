"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py --n-max 12 --repeat 3

Each row is the best of ``--repeat`` runs after one warm-up call, and the
two backends' outputs are checked for equality before timing is reported.
"""
import argparse
import time

import numpy as np

from pathforge import _kernels as K


def best_of(fn, repeat):
    fn()
    best = float("inf")
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = K.backends()
    if "numba" not in backends:
        print("numba unavailable (or disabled); timing the numpy backend only")
    print(f"{'kernel':<18}{'n':>4}{'paths':>12}" + "".join(f"{b:>12}" for b in backends)
          + ("     speedup" if len(backends) == 2 else ""))
    for n in range(args.n_min, args.n_max + 1, 2):
        masks = K.enumerate_masks(n, False)
        jobs = {
            "weight_counts/B": lambda b: K.weight_counts(n, False, b),
            "weight_counts/D": lambda b: K.weight_counts(n, True, b),
            "phi": lambda b: K.phi_masks(masks, n, b),
            "phi_inverse": lambda b: K.phi_inverse_masks(masks, n, b),
        }
        for name, job in jobs.items():
            times, outs = [], []
            for b in backends:
                elapsed, out = best_of(lambda: job(b), args.repeat)
                times.append(elapsed)
                outs.append(out)
            if len(outs) == 2 and not same(outs[0], outs[1]):
                raise SystemExit(f"backends disagree on {name} at n={n}")
            row = f"{name:<18}{n:>4}{len(masks):>12}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) == 2:
                row += f"{times[1] / times[0]:>11.1f}x"
            print(row)


if __name__ == "__main__":
    main()
