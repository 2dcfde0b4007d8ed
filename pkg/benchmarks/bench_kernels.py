"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--skip-sweep]

Part one times each kernel on fixed exact inputs under both modules.  Part two
runs a slice of the identity sweep in a fresh interpreter per backend
(``DEGENEULER_PURE_PYTHON=1`` forces the fallback) so the caches start cold.
"""

import argparse
import os
import subprocess
import sys
import timeit
from fractions import Fraction

from degeneuler import _kernels_py
from degeneuler.exactnum import cyclotomic_polynomial
from degeneuler.fps import binomial_rows

try:
    from degeneuler import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

SWEEP_SNIPPET = """
import time
from fractions import Fraction
from degeneuler._backend import BACKEND
from degeneuler.identities import SweepConfig, sweep
cfg = SweepConfig(identities=("thm1", "thm2", "i_series_consistency"), d=(3, 5),
                  lam=(Fraction(1, 2), Fraction(-2, 3)), w1=(1, 3, 5), w2=(3, 5), x=(Fraction(1, 2),), L=8)
t = time.perf_counter()
reports = sweep(cfg)
assert all(r.holds for r in reports)
print(BACKEND, len(reports), time.perf_counter() - t)
"""


def cases(T=24):
    binom = binomial_rows(T)
    a = [Fraction((-1) ** k * (k + 1), k + 2) for k in range(T + 1)]
    b = [Fraction(2 * k - 3, 3 ** (k % 4)) for k in range(T + 1)]
    phi = list(cyclotomic_polynomial(12).coefficients)
    width = len(phi) - 1
    A = [[Fraction(k + p, p + 2) for p in range(width)] for k in range(T + 1)]
    B = [[Fraction(k - p, 2 * k + 1) for p in range(width)] for k in range(T + 1)]
    A0 = [Fraction(1)] + [Fraction(0)] * (width - 1)
    A_inv = [A0] + A[1:]
    return {
        "falling_row": lambda m: m.falling_row(Fraction(7, 3), Fraction(-2, 5), T),
        "egf_mul": lambda m: m.egf_mul(a, b, binom),
        "egf_mul_vec_scalar": lambda m: m.egf_mul_vec_scalar(A, b, binom),
        "egf_mul_mod": lambda m: m.egf_mul_mod(A, B, binom, phi),
        "egf_inverse": lambda m: m.egf_inverse([Fraction(1)] + a[1:], Fraction(1), binom),
        "egf_inverse_mod": lambda m: m.egf_inverse_mod(A_inv, A0, binom, phi),
        "mulmod": lambda m: m.mulmod(A[5], B[7], phi),
    }


def kernel_table(repeat):
    modules = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    print(f"{'kernel':<22}" + "".join(f"{name:>12}" for name, _ in modules) + ("   speedup" if _kernels_c else ""))
    for name, fn in cases().items():
        results = [fn(m) for _, m in modules]
        assert all(r == results[0] for r in results), name
        times = []
        for _, m in modules:
            number = 20
            best = min(timeit.repeat(lambda: fn(m), number=number, repeat=repeat)) / number
            times.append(best)
        line = f"{name:<22}" + "".join(f"{t * 1e3:>10.3f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>9.2f}x"
        print(line)


def sweep_table():
    print("\nsweep slice (fresh interpreter per backend, workers=1)")
    envs = [("python", {"DEGENEULER_PURE_PYTHON": "1"})]
    if _kernels_c:
        envs.append(("cython", {}))
    for label, extra in envs:
        env = dict(os.environ)
        env.pop("DEGENEULER_PURE_PYTHON", None)
        env.update(extra)
        out = subprocess.run([sys.executable, "-c", SWEEP_SNIPPET], env=env, check=True,
                             capture_output=True, text=True).stdout.split()
        print(f"  {out[0]:<8} {out[1]} tuples  {float(out[2]):.2f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--skip-sweep", action="store_true")
    args = parser.parse_args()
    if _kernels_c is None:
        print("compiled extension not built; timing the fallback only")
    kernel_table(args.repeat)
    if not args.skip_sweep:
        sweep_table()


if __name__ == "__main__":
    main()
