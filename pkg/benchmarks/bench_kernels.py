"""Compare the compiled and pure-Python kernels on the engine's real workloads.

Bignum-heavy numeric cases gain little: their time is spent multiplying
large coefficients, not in the monomial bookkeeping the extension speeds up.

    python benchmarks/bench_kernels.py [--repeat 3]

Each backend runs in its own interpreter (the backend is chosen at import).
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
from horadam_gf import KERNEL_IMPL, horadam_gf, preset, series_coeffs
from horadam_gf.horadam import symbolic_params

repeat = int(sys.argv[1])
cases = [
    ("numeric k=16 (fibonacci)", lambda: horadam_gf(16, preset("fibonacci"))),
    ("chebyshev-u k=9", lambda: horadam_gf(9, preset("chebyshev-u"))),
    ("symbolic k=7", lambda: horadam_gf(7, symbolic_params())),
    ("series N=2000 (pell k=6)", lambda: series_coeffs(horadam_gf(6, preset("pell")), 2000)),
]
out = {"impl": KERNEL_IMPL, "times": {}}
for name, fn in cases:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    out["times"][name] = best
print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    env = {**os.environ, "HORADAM_GF_PURE": "1" if pure else "0"}
    res = subprocess.run([sys.executable, "-c", WORKLOAD, str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if fast["impl"] != "cython":
        print("compiled kernels not built; both columns use the Python backend")
    print(f"{'workload':<28}{fast['impl']:>10}{slow['impl']:>10}{'speedup':>9}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:<28}{t_fast:>9.3f}s{t_slow:>9.3f}s{t_slow / t_fast:>8.2f}x")


if __name__ == "__main__":
    main()
