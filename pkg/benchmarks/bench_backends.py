#!/usr/bin/env python3
"""Compare the numba and numpy kernel backends on the workloads that dominate
the verification suites: circular/linear ordering scans and the subset scan
of the uniqueness criterion.

Usage: python benchmarks/bench_backends.py [--instances N] [--seed S]
"""

import argparse
import time

from ca_rigidity import kernels
from ca_rigidity.corpus import ca_hypergraph_corpus
from ca_rigidity.enumeration import tight_pairs


def bench(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--instances", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    small = list(ca_hypergraph_corpus(args.seed, args.instances, n_lo=5, n_hi=7))
    big = list(ca_hypergraph_corpus(args.seed + 1, 20, n_lo=9, n_hi=9))
    pairs_small = [tight_pairs(h, circular=True) for h in small]
    pairs_big = [tight_pairs(h, circular=True) for h in big]

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default: {kernels.backend()})")
    print(f"{args.instances} hypergraphs on 5..7 vertices, 20 on 9 vertices\n")

    workloads = {
        "circular scan (all)": lambda be: [
            kernels.scan_circular(h.n, h.edges, (), False, backend=be) for h in small
        ],
        "circular scan (tight)": lambda be: [
            kernels.scan_circular(h.n, h.edges, p, True, backend=be)
            for h, p in zip(small, pairs_small)
        ],
        "linear scan (all)": lambda be: [
            kernels.scan_linear(h.n, h.edges, (), False, backend=be) for h in small
        ],
        "subset-criterion scan": lambda be: [
            kernels.quilliot_witness(h.n, h.edges, backend=be) for h in small
        ],
        "circular scan n=9": lambda be: [
            kernels.scan_circular(h.n, h.edges, p, True, backend=be)
            for h, p in zip(big, pairs_big)
        ],
    }

    header = f"{'workload':<26}" + "".join(f"{be:>12}" for be in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, load in workloads.items():
        times = {}
        for be in backends:
            load(be)  # warm up (JIT compile / allocation)
            times[be] = bench(lambda be=be: load(be))
        row = f"{name:<26}" + "".join(f"{times[be]*1e3:>10.1f}ms" for be in backends)
        if "numba" in times and "numpy" in times:
            row += f"{times['numpy'] / times['numba']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
