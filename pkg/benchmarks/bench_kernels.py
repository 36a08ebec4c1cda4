"""Compare the compiled and pure-Python matching kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Times ``compose_matchings`` on random Brauer diagrams of several sizes, then
an end-to-end Gram-matrix computation with each backend selected through the
``BRAUERCAT_PURE_PYTHON`` switch in a fresh interpreter.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from brauercat import _pykernels
from brauercat.brauer import partner_from_pairs

try:
    from brauercat import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_matching(n: int, rng: random.Random) -> tuple[int, ...]:
    pts = list(range(n))
    rng.shuffle(pts)
    return partner_from_pairs(n, [(pts[i], pts[i + 1]) for i in range(0, n, 2)])


def bench_compose(size: int, repeat: int, rng: random.Random) -> dict:
    fs = [random_matching(2 * size, rng) for _ in range(64)]
    gs = [random_matching(2 * size, rng) for _ in range(64)]
    out = {}
    for name, mod in (("python", _pykernels), ("cython", _ckernels)):
        if mod is None:
            continue
        fn = mod.compose_matchings

        def run():
            for f, g in zip(fs, gs):
                fn(f, size, size, g, size)

        out[name] = min(timeit.repeat(run, number=repeat, repeat=3)) / (repeat * len(fs))
    return out


def bench_sign(n: int, repeat: int, rng: random.Random) -> dict:
    perms = [tuple(rng.sample(range(n), n)) for _ in range(64)]
    out = {}
    for name, mod in (("python", _pykernels), ("cython", _ckernels)):
        if mod is None:
            continue
        fn = mod.permutation_sign
        out[name] = min(timeit.repeat(lambda: [fn(p) for p in perms], number=repeat, repeat=3)) / (repeat * 64)
    return out


END_TO_END = (
    "import time, brauercat.homspace as H, brauercat.kernels as K;"
    "t=time.perf_counter();"
    "[H.dim_hom(m, s, 6 - s, 'gram') for m in (2, 3) for s in range(7)];"
    "print(K.BACKEND, time.perf_counter()-t)"
)


def end_to_end() -> dict:
    out = {}
    for pure in ("1", "0"):
        env = dict(os.environ, BRAUERCAT_PURE_PYTHON=pure)
        res = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
        backend, seconds = res.stdout.split()
        out[backend] = float(seconds)
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=50)
    args = parser.parse_args()
    rng = random.Random(0)
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is timed")
    print(f"{'kernel':<28}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    rows = [(f"compose_matchings n={n}", bench_compose(n, args.repeat, rng)) for n in (2, 4, 8, 16, 32)]
    rows += [(f"permutation_sign n={n}", bench_sign(n, args.repeat, rng)) for n in (4, 8)]
    for label, res in rows:
        py = res["python"] * 1e6
        cy = res.get("cython")
        if cy is None:
            print(f"{label:<28}{py:>14.2f}{'-':>14}{'-':>10}")
        else:
            print(f"{label:<28}{py:>14.2f}{cy * 1e6:>14.2f}{py / (cy * 1e6):>9.1f}x")
    e2e = end_to_end()
    print("\nend-to-end Gram ranks for m in {2,3}, s+t = 6:")
    for backend, seconds in sorted(e2e.items()):
        print(f"  {backend:<8}{seconds:8.3f} s")


if __name__ == "__main__":
    main()
