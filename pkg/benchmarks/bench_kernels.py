"""Compare the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

import crsparse.kernels as kernels
from crsparse import boundary, cr_multiply, cr_sparsify, gen_barbell, gen_random
from crsparse._random import make_rng


def cases():
    g = np.random.default_rng(0)
    cdf = np.cumsum(g.random(10_000))
    u = g.random(1_000_000)
    big = gen_random(1000, 0.2, 100, seed=1)
    At = g.standard_normal((400, 60))
    B = g.standard_normal((400, 50))
    idx = g.integers(0, 400, 2000).astype(np.int64)
    scale = g.random(2000)
    barbell = gen_barbell(30, 41, 100, seed=0)
    small = gen_random(12, 0.5, 100, seed=2)
    A2, B2 = g.standard_normal((4, 6)), g.standard_normal((6, 3))
    Bb = np.ascontiguousarray(boundary(barbell))
    hit = np.unique(g.integers(0, barbell.m, 900)).astype(np.int64)
    hscale = g.random(hit.size)

    def mc_small():
        rng = make_rng(1)
        for _ in range(2000):
            cr_sparsify(small, 5, rng)

    def mc_multiply():
        rng = make_rng(2)
        for _ in range(2000):
            cr_multiply(A2, B2, 3, rng)

    return [
        ("sample_inverse_cdf  N=1e4 r=1e6", lambda: kernels.sample_inverse_cdf(cdf, u)),
        ("accumulate_laplacian n=1000 m~1e5",
         lambda: kernels.accumulate_laplacian(big.n, big.u, big.v, big.w)),
        ("outer_accumulate dense 60x400x50",
         lambda: kernels.outer_accumulate(At, B, idx, scale)),
        ("outer_accumulate boundary B^T B (barbell)",
         lambda: kernels.outer_accumulate(Bb, Bb, hit, hscale)),
        ("cr_sparsify barbell r=4800", lambda: cr_sparsify(barbell, 4800, 0)),
        ("2000 x cr_sparsify n=12 r=5", mc_small),
        ("2000 x cr_multiply 4x6x3 r=3", mc_multiply),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is available")
    rows = []
    for name, fn in cases():
        times = {}
        for b in backends:
            kernels.use_backend(b)
            fn()  # warm up
            times[b] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        rows.append((name, times))
    header = f"{'case':42s}" + "".join(f"{b:>12s}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for name, times in rows:
        line = f"{name:42s}" + "".join(f"{times[b] * 1e3:10.2f}ms" for b in backends)
        if len(backends) == 2:
            line += f"{times['python'] / times['compiled']:9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
