"""Compare the compiled and pure-Python canonical-form kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Part one times the kernel on random and highly symmetric colorings.  Part
two times whole searches in subprocesses, once per backend.
"""

import argparse
import os
import random
import subprocess
import sys
import time
from math import comb

from ramseykit import _pykernels
from ramseykit.coloring import Coloring
from ramseykit.construct import blow_up, pentagon_coloring

try:
    from ramseykit import _ckernels
except ImportError:
    _ckernels = None

SEARCHES = ["K3,K3", "C5,K3", "C4,K4", "K3,K4", "C5,K3,K3"]
SEARCH_MAX = {"C5,K3,K3": 6}


def workloads():
    rng = random.Random(1)
    rand = [(bytes(rng.randrange(2) for _ in range(comb(p, 2))), p)
            for p in (8, 10, 12) for _ in range(200)]
    sym = [
        (Coloring.monochrome(12, 2).assignment, 12),
        (blow_up(Coloring.monochrome(3), Coloring.monochrome(4)).assignment, 12),
        (blow_up(pentagon_coloring(), Coloring.monochrome(2)).assignment, 10),
        (Coloring.from_function(12, 2, lambda u, v: (v - u) % 12 in (1, 3, 9, 11)).assignment, 12),
    ] * 25
    return {"random p=8..12": rand, "symmetric p=10..12": sym}


def time_kernel(fn, items, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for tri, p in items:
            fn(tri, p)
        best = min(best, time.perf_counter() - t0)
    return best


def time_search(spec, pure):
    env = dict(os.environ)
    env.pop("RAMSEYKIT_PURE", None)
    if pure:
        env["RAMSEYKIT_PURE"] = "1"
    cmd = [sys.executable, "-m", "ramseykit", "search", "--targets", spec,
           "--max", str(SEARCH_MAX.get(spec, 12))]
    t0 = time.perf_counter()
    res = subprocess.run(cmd, env=env, capture_output=True, text=True)
    return time.perf_counter() - t0, res.stdout.splitlines()[0]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the pure-Python path is available")
    print(f"{'kernel workload':24} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, items in workloads().items():
        tp = time_kernel(_pykernels.canonical_form, items, args.repeat)
        if _ckernels is None:
            print(f"{name:24} {tp:10.3f}")
            continue
        tc = time_kernel(_ckernels.canonical_form, items, args.repeat)
        print(f"{name:24} {tp:10.3f} {tc:10.3f} {tp / tc:8.1f}x")
    print()
    print(f"{'search':12} {'python':>10} {'cython':>10}  result")
    for spec in SEARCHES:
        tp, head = time_search(spec, pure=True)
        tc, head_c = time_search(spec, pure=False)
        assert head == head_c, (head, head_c)
        print(f"{spec:12} {tp:10.2f} {tc:10.2f}  {head}")


if __name__ == "__main__":
    main()
