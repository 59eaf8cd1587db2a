"""Compare the compiled kernel against the pure-Python fallback.

Runs the same Groebner-basis workloads twice in subprocesses, once with
the default (compiled) kernel and once with TIL_PURE_PYTHON=1, and
prints a timing table.  Usage: python3 benchmarks/bench_groebner.py
"""

import os
import subprocess
import sys

WORKLOAD = r"""
import time
from transferideals import QQ
from transferideals.kernel import KERNEL_NAME
from transferideals.transfer import TransferFamily, build_A, maximal_minors
from transferideals.groebner import ideal_equal

cases = [(3, 2), (3, 3), (4, 2), (5, 2)]
print(f"kernel: {KERNEL_NAME}")
for p, q in cases:
    t0 = time.monotonic()
    fam = TransferFamily(p, q, 0, QQ)
    I = fam.elimination_ideal()
    J = maximal_minors(build_A(p, q, QQ))
    assert ideal_equal(I, J)
    dt = time.monotonic() - t0
    print(f"conjecture p={p} q={q}: {dt * 1000:8.1f} ms")
"""


def run(env_extra):
    env = dict(os.environ, **env_extra)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return out.stdout


def main():
    print("=== compiled kernel (if built) ===")
    print(run({"TIL_PURE_PYTHON": ""}))
    print("=== pure-Python kernel ===")
    print(run({"TIL_PURE_PYTHON": "1"}))


if __name__ == "__main__":
    main()
