#!/usr/bin/env python3
"""Benchmark the compiled correlation kernel against the FFT fallback.

Runs the full exhaustive family scan under each available backend, checks
that the results agree to 1e-6, and prints a timing table. Example:

    python benchmarks/bench_correlation.py --p 41 --n 1 --d 3 --M 2
"""

import argparse
import time

import numpy as np

from seqfam.correlation import max_correlation
from seqfam.family import build_family
from seqfam.fields import build_extension, build_field
from seqfam.kernels import COMPILED_AVAILABLE, PairScanner


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=41)
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--M", type=int, default=2)
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--block-pairs", type=int, default=20000,
                    help="pairs per call in the raw-kernel throughput measurement")
    args = ap.parse_args()

    ctx = build_field(args.p, args.n)
    ext = build_extension(ctx, args.d)
    family = build_family(ext, args.M)
    symbols = family.symbols_matrix()
    n, period = symbols.shape
    print(f"family: q={ctx.q} d={args.d} M={args.M}, {n} sequences of period {period}")
    print(f"pairs to scan: {n * (n + 1) // 2}, shifts per pair: {period}")

    backends = ["fft"] + (["compiled"] if COMPILED_AVAILABLE else [])
    if not COMPILED_AVAILABLE:
        print("compiled kernel not built; benchmarking the fallback only")

    rng = np.random.default_rng(0)
    left = rng.integers(0, n, args.block_pairs).astype(np.int64)
    right = rng.integers(0, n, args.block_pairs).astype(np.int64)
    raw = {}
    blocks = {}
    for backend in backends:
        scanner = PairScanner(symbols, args.M, backend=backend, jobs=args.jobs)
        scanner.correlations_abs(left[:16], right[:16])  # warm up
        t0 = time.perf_counter()
        blocks[backend] = scanner.correlations_abs(left, right)
        raw[backend] = time.perf_counter() - t0

    reports = {}
    totals = {}
    for backend in backends:
        t0 = time.perf_counter()
        reports[backend] = max_correlation(family, backend=backend, jobs=args.jobs)
        totals[backend] = time.perf_counter() - t0

    print(f"\n{'backend':<10} {'raw kernel':>12} {'full scan':>12} {'delta_max':>14}")
    for backend in backends:
        print(f"{backend:<10} {raw[backend]:>11.3f}s {totals[backend]:>11.3f}s "
              f"{reports[backend].delta_max:>14.6f}")

    if len(backends) == 2:
        block_diff = float(np.abs(blocks["fft"] - blocks["compiled"]).max())
        delta_diff = abs(reports["fft"].delta_max - reports["compiled"].delta_max)
        agree = block_diff < 1e-6 and delta_diff < 1e-6
        print(f"\nagreement: max |block difference| = {block_diff:.2e}, "
              f"|delta_max difference| = {delta_diff:.2e} -> {'OK' if agree else 'MISMATCH'}")
        print(f"speedup (full scan): {totals['fft'] / totals['compiled']:.2f}x")


if __name__ == "__main__":
    main()
