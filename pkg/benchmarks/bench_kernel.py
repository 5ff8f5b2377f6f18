"""Compare the compiled kernel against the pure-Python fallback.

Runs each benchmark in a subprocess with QCONGR_KERNEL forced, so both
implementations are measured on identical inputs in fresh interpreters.

Usage: python3 benchmarks/bench_kernel.py
"""

import json
import os
import random
import subprocess
import sys
import time


def _bench_once():
    from qcongr.backend import kernel
    from qcongr.scalars import Rat
    from qcongr.sums import qc2_check, qhh_check

    rng = random.Random(20260823)
    a = [Rat(rng.randint(-999, 999), rng.randint(1, 99)) for _ in range(201)]
    b = [Rat(rng.randint(-999, 999), rng.randint(1, 99)) for _ in range(201)]
    results = {"kernel": kernel.IMPLEMENTATION}

    t0 = time.perf_counter()
    for _ in range(40):
        prod = kernel.mul(a, b)
    results["mul_deg200_x40"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for _ in range(40):
        kernel.divrem(prod, b)
    results["divrem_deg400_x40"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    qc2_check(13)
    results["qc2_p13"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    qhh_check(13, 1, 0, 1, 2, 1, 3)
    results["qhh_p13"] = time.perf_counter() - t0

    print(json.dumps(results))


def main():
    rows = {}
    for impl in ("python", "compiled"):
        env = dict(os.environ, QCONGR_KERNEL=impl)
        proc = subprocess.run(
            [sys.executable, __file__, "--worker"],
            env=env,
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            print("%s kernel unavailable:\n%s" % (impl, proc.stderr.strip()))
            continue
        rows[impl] = json.loads(proc.stdout)

    names = [k for k in rows.get("python", {}) if k != "kernel"]
    print("%-20s %12s %12s %8s" % ("benchmark", "python (s)", "compiled (s)", "speedup"))
    for name in names:
        py = rows.get("python", {}).get(name)
        cy = rows.get("compiled", {}).get(name)
        if py is None or cy is None:
            continue
        print("%-20s %12.4f %12.4f %7.2fx" % (name, py, cy, py / cy if cy else float("inf")))


if __name__ == "__main__":
    if "--worker" in sys.argv:
        _bench_once()
    else:
        main()
