"""Sweep dataset size and chunk count; print median times and speedups as a table."""

import argparse
import os

from matfit import run_benchmark


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--max-points", type=int, default=10**7)
    args = ap.parse_args()

    cpus = os.cpu_count() or 1
    chunk_counts = sorted({1, 2, 4, 8, cpus})
    sizes = [n for n in (10**3, 10**4, 10**5, 10**6, 10**7) if n <= args.max_points]
    print(f"{'n':>10} {'chunks':>6} {'seq ms':>9} {'par ms':>9} {'speedup':>8} {'max dev':>9}")
    for n in sizes:
        for chunks in chunk_counts:
            rep = run_benchmark(n, args.degree, chunks, args.repeat, seed=0)
            print(f"{n:>10} {chunks:>6} {1e3 * rep.sequential_median:>9.2f} "
                  f"{1e3 * rep.parallel_median:>9.2f} {rep.speedup:>8.2f} "
                  f"{rep.max_relative_deviation:>9.1e}")


if __name__ == "__main__":
    main()
