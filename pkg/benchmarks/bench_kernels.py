"""Compare numba and numpy kernel bodies.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from ncbell import NCParams, _kernels, generator
from ncbell.verify import DEFAULT_PAIRS


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    gens = np.stack([generator(NCParams(*te)).g for te in DEFAULT_PAIRS] * 20)
    spans = np.linspace(0.05, 1.0, len(gens))
    rng = np.random.default_rng(0)
    mat = rng.normal(size=(4, 4))
    pts = rng.normal(size=(24**4, 4))
    grid = np.linspace(0.0, 2.0, 1_000_000)
    return [
        ("rk4_transfer (120 x 20000 steps)", "rk4_transfer", (gens, spans, 20_000)),
        ("quadratic_forms (331776 points)", "quadratic_forms", (mat, pts)),
        ("bell_profile (1e6 intensities)", "bell_profile", (grid, 3.76, -3.63)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba not installed")

    print(f"{'kernel':<36} {'numpy [s]':>10} {'numba [s]':>10} {'speedup':>8}  max|diff|")
    for label, name, call_args in cases():
        f_np = getattr(_kernels, name + "_np")
        f_nb = getattr(_kernels, name + "_nb")
        f_nb(*call_args)  # compile
        t_np = best_of(lambda: f_np(*call_args), args.repeat)
        t_nb = best_of(lambda: f_nb(*call_args), args.repeat)
        diff = float(np.max(np.abs(f_np(*call_args) - f_nb(*call_args))))
        print(f"{label:<36} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x  {diff:.1e}")


if __name__ == "__main__":
    main()
