"""Compare the compiled and pure-numpy kernels on desk-scale inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Each kernel is timed directly through ``twocross.kernels.numba_impl`` and
``twocross.kernels.numpy_impl``; the compiled side is called once before
timing so JIT compilation is excluded. End-to-end solver times are then
measured in fresh interpreters with and without TWOCROSS_DISABLE_NUMBA=1.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from twocross import kernels
from twocross.core import borda_misrep
from twocross.recognition import random_horseshoe, recognize_two_crossing
from twocross.young import build_difference_system

END_TO_END = """
import json, sys, time
import numpy as np
from twocross import kernels
from twocross.cc import cc_solve
from twocross.core import borda_misrep
from twocross.recognition import random_horseshoe, recognize_two_crossing
from twocross.young import young_score
rng = np.random.default_rng(int(sys.argv[1]))
warm, _, _ = random_horseshoe(5, 3, rng)
young_score(warm, 1); cc_solve(warm, borda_misrep(warm), 2)
out = {"backend": kernels.BACKEND}
p, _, _ = random_horseshoe(5000, 20, rng)
t = time.perf_counter(); recognize_two_crossing(p); out["recognize n=5000 m=20"] = time.perf_counter() - t
p, _, _ = random_horseshoe(300, 8, rng)
t = time.perf_counter(); [young_score(p, c) for c in p.candidates]; out["young n=300 m=8 all"] = time.perf_counter() - t
p, _, _ = random_horseshoe(100, 10, rng)
t = time.perf_counter(); cc_solve(p, borda_misrep(p), 5); out["cc n=100 m=10 k=5"] = time.perf_counter() - t
print(json.dumps(out))
"""


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def kernel_cases(rng):
    p, _, _ = random_horseshoe(5000, 20, rng)
    bits = np.ascontiguousarray(p.pair_bits)
    order = recognize_two_crossing(p).index_array()
    yield "switch_counts 5000x190", lambda impl: impl.switch_counts(bits, order)

    q, _, _ = random_horseshoe(300, 8, rng)
    d = build_difference_system(q, recognize_two_crossing(q), 1, 150)
    arr = np.asarray(d.constraints, dtype=np.int64)
    nv = d.num_vars
    src = np.concatenate([np.full(nv, nv), arr[:, 1]]).astype(np.int64)
    dst = np.concatenate([np.arange(nv), arr[:, 0]]).astype(np.int64)
    w = np.concatenate([np.zeros(nv), arr[:, 2]]).astype(np.int64)
    yield "bellman_ford 301 vars", lambda impl: impl.bellman_ford(nv + 1, src, dst, w, nv)

    r, _, _ = random_horseshoe(60, 8, rng)
    rho = np.ascontiguousarray(borda_misrep(r).values[recognize_two_crossing(r).index_array()].astype(np.float64))
    yield "cc_tables n=60 m=8 k=4", lambda impl: impl.cc_tables(rho, 4, False)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if kernels.numba_impl is None:
        print("numba is not available; only the numpy kernels can be timed", file=sys.stderr)
    print(f"{'kernel':<26}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for name, call in kernel_cases(np.random.default_rng(args.seed)):
        t_np = best_of(lambda: call(kernels.numpy_impl), args.repeat)
        if kernels.numba_impl is not None:
            call(kernels.numba_impl)
            t_nb = best_of(lambda: call(kernels.numba_impl), args.repeat)
            print(f"{name:<26}{t_np:>10.4f}{t_nb:>10.4f}{t_np / t_nb:>8.1f}x")
        else:
            print(f"{name:<26}{t_np:>10.4f}{'-':>10}{'-':>9}")

    print("\nend to end (fresh interpreter, JIT warmed up):")
    for disable in ("0", "1"):
        env = dict(os.environ, TWOCROSS_DISABLE_NUMBA=disable)
        res = json.loads(subprocess.run([sys.executable, "-c", END_TO_END, str(args.seed)], env=env,
                                        capture_output=True, text=True, check=True).stdout)
        backend = res.pop("backend")
        print(f"  {backend:<6} " + "  ".join(f"{k}: {v:.3f}s" for k, v in res.items()))


if __name__ == "__main__":
    main()
