"""Compare the compiled and pure-Python skein kernels on the same diagrams.

    python3 benchmarks/bench_skein.py [--repeat 3] [--n 4]
"""

import argparse
import random
import time

from bmwskein import _skein_py
from bmwskein.tangle import canonical_pd, close_pd, compose_pd, enumerate_basis, parse_word, word_pd

try:
    from bmwskein import _skein
except ImportError:
    _skein = None


def workload(n, seed=0):
    rng = random.Random(seed)
    basis = enumerate_basis(n)
    pds = []
    for _ in range(200):
        m1, m2 = rng.choice(basis), rng.choice(basis)
        pds.append(compose_pd(canonical_pd(n, n, m1), canonical_pd(n, n, m2)))
    for _ in range(100):
        toks = [f"{rng.choice('eE')}{rng.randint(1, n - 1)}" for _ in range(8)]
        pds.append(close_pd(word_pd(parse_word(" ".join(toks), n))))
    return pds


def timed(resolve, pds, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for pd in pds:
            resolve(pd.crossings, pd.boundary, pd.loops)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    pds = workload(args.n)
    slow = timed(_skein_py.resolve, pds, args.repeat)
    print(f"{len(pds)} diagrams on {args.n} strands")
    print(f"python : {slow * 1e3:8.1f} ms")
    if _skein is None:
        print("cython : not built")
        return
    for pd in pds[:50]:
        assert _skein.resolve(pd.crossings, pd.boundary, pd.loops) == _skein_py.resolve(
            pd.crossings, pd.boundary, pd.loops
        )
    fast = timed(_skein.resolve, pds, args.repeat)
    print(f"cython : {fast * 1e3:8.1f} ms")
    print(f"speedup: {slow / fast:8.1f}x")


if __name__ == "__main__":
    main()
