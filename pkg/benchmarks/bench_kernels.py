"""Compare the numba and pure-numpy kernels.

    python benchmarks/bench_kernels.py [--max-n 20] [--repeat 3]

The first numba call per signature (JIT compile or cache load) is excluded.
"""
import argparse
import time

import numpy as np

from unnlab import USING_NUMBA, cycle_graph
from unnlab.constructions import complete_graph
from unnlab.kernels import bernoulli_stream, cut_profile


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if USING_NUMBA else [])
    if not USING_NUMBA:
        print("numba unavailable or disabled; timing numpy only")

    print(f"{'kernel':<28} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for n in range(12, args.max_n + 1, 2):
        for label, g in ((f"cut_profile C_{n}", cycle_graph(n)), (f"cut_profile K_{n}", complete_graph(n))):
            indptr, indices = g.csr()
            cut_profile(*cycle_graph(4).csr(), 4)  # warm
            res = [best_of(lambda b=b: cut_profile(indptr, indices, n, backend=b), args.repeat) for b in backends]
            ref = cut_profile(indptr, indices, n, backend="numpy")
            for b in backends[1:]:
                out = cut_profile(indptr, indices, n, backend=b)
                assert all(np.array_equal(x, y) for x, y in zip(ref, out))
            _print(label, res)

    for count in (10_000, 1_000_000, 10_000_000):
        bernoulli_stream(0, 4, 0.5)
        res = [best_of(lambda b=b: bernoulli_stream(7, count, 0.5, backend=b), args.repeat) for b in backends]
        _print(f"bernoulli {count:>10,}", res)


def _print(label, res):
    speed = f"{res[0] / res[1]:8.1f}x" if len(res) > 1 else ""
    print(f"{label:<28} " + " ".join(f"{t * 1e3:8.2f}ms" for t in res) + f"  {speed}")


if __name__ == "__main__":
    main()
