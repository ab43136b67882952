"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sizes 2000 20000 100000] [--k 4] [--repeat 3]

Both backends are imported directly, so one process times both.  The
end-to-end row runs ``triangulate_strong`` twice in subprocesses, once
with ``OKPLANAR_PURE_PYTHON=1``.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

from okplanar import _fallback, random_outer_k_planar

try:
    from okplanar import _speedups
except ImportError:  # extension not built
    _speedups = None

E2E = """
import sys, time
from okplanar import random_outer_k_planar, triangulate_strong
from okplanar.kernels import BACKEND
n, k = int(sys.argv[1]), int(sys.argv[2])
d = random_outer_k_planar(n, k, seed=1, max_span=8)
t0 = time.perf_counter(); triangulate_strong(d, k); print(BACKEND, time.perf_counter() - t0)
"""


def best_of(fn, repeat: int) -> float:
    out = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        out = min(out, time.perf_counter() - t0)
    return out


def filter_workload(mod, n, us, vs, links):
    flt = mod.PiercingFilter(n, us, vs)
    ids = list(range(len(us)))
    window = 64

    def run():
        for i, (x, y) in enumerate(links):
            flt(x, y, ids[i % len(ids) : i % len(ids) + window])

    return run


def e2e(n: int, k: int, pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["OKPLANAR_PURE_PYTHON"] = "1"
    else:
        env.pop("OKPLANAR_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", E2E, str(n), str(k)], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.split()[1])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[2000, 20000, 100000])
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _speedups is None:
        sys.exit("compiled extension not built; run `pip install -e . --no-build-isolation` first")

    print(f"{'kernel':<16}{'n':>8}{'m':>9}{'cython s':>11}{'python s':>11}{'speedup':>9}")
    for n in args.sizes:
        d = random_outer_k_planar(n, args.k, seed=1, max_span=8)
        us = [e[0] for e in d.edges]
        vs = [e[1] for e in d.edges]
        rows = [
            (
                "crossing_csr",
                best_of(lambda: _speedups.crossing_csr(n, us, vs), args.repeat),
                best_of(lambda: _fallback.crossing_csr(n, us, vs), args.repeat),
            )
        ]
        links = [(i, (i + 5) % n) for i in range(0, n, 3)]
        rows.append(
            (
                "piercing_filter",
                best_of(filter_workload(_speedups, n, us, vs, links), args.repeat),
                best_of(filter_workload(_fallback, n, us, vs, links), args.repeat),
            )
        )
        rows.append(("triangulate", e2e(n, args.k, False), e2e(n, args.k, True)))
        for name, fast, slow in rows:
            print(f"{name:<16}{n:>8}{len(us):>9}{fast:>11.4f}{slow:>11.4f}{slow / fast:>8.1f}x")


if __name__ == "__main__":
    main()
