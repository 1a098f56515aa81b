"""Compare the numba and pure-numpy kernel backends.

Each backend runs in its own interpreter (the backend is fixed at import
time by ``GAMMASG_BACKEND``).  Reported times are the best of ``--repeat``
runs after one warm-up call, so numba compilation is excluded; the warm-up
time is shown separately.

    python3 benchmarks/bench_kernels.py --repeat 5
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import json, sys, time
import numpy as np
from gammasg import _kernels
from gammasg.enumeration import (associative_tables, canonical_form, cyclic_group, from_semigroup,
                                 zero_multiplication)
from gammasg.ideals import IdealKind, ideal_masks

repeat = int(sys.argv[1])


def timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0

rng = np.random.default_rng(12345)

big = from_semigroup(cyclic_group(12), list(range(6)))
rand_tables = rng.integers(0, 4, size=(4096, 4, 2, 4))
per_elem = rng.integers(0, 1 << 16, size=16)
zm = zero_multiplication(11)
masks = np.array(ideal_masks(zm, IdealKind.TWO_SIDED), dtype=np.int64)
canon = from_semigroup(cyclic_group(4), [1, 3])

cases = {
    "assoc_witness n=12 m=6": lambda: _kernels.assoc_witness(big.table),
    "assoc_filter 4096 x (4,2)": lambda: _kernels.assoc_filter(rand_tables),
    "exhaustive (2,3)": lambda: associative_tables(2, 3),
    "product_masks n=12 m=6": lambda: _kernels.product_masks(big.table),
    "subset_unions n=16": lambda: _kernels.subset_unions(per_elem),
    "pairwise_products k=%d" % len(masks): lambda: _kernels.pairwise_products(zm.pm, masks),
    "canonical_form n=4 m=2": lambda: canonical_form(canon),
}
out = {"backend": _kernels.BACKEND, "cases": {}}
for name, fn in cases.items():
    warm = timed(fn)
    out["cases"][name] = {"warmup": warm, "best": min(timed(fn) for _ in range(repeat))}
print(json.dumps(out))
"""


def run_backend(backend: str, repeat: int) -> dict:
    env = dict(os.environ, GAMMASG_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--json", action="store_true", help="print raw results as JSON")
    args = parser.parse_args(argv)

    t0 = time.perf_counter()
    results = {b: run_backend(b, args.repeat) for b in ("numba", "numpy")}
    if args.json:
        print(json.dumps(results, indent=2))
        return 0
    nb, npy = results["numba"]["cases"], results["numpy"]["cases"]
    print(f"{'kernel':<30} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8} {'jit warm-up ms':>15}")
    for name in nb:
        a, b = nb[name]["best"] * 1e3, npy[name]["best"] * 1e3
        print(f"{name:<30} {a:>10.3f} {b:>10.3f} {b / a:>7.1f}x {nb[name]['warmup'] * 1e3:>15.1f}")
    print(f"total wall time {time.perf_counter() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
