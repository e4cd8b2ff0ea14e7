"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--no-e2e]

Part one times each kernel on the same random inputs.  Part two runs a
catalog verification end to end in two subprocesses, once with
``QRSID_PURE_PYTHON=1``.
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from qrsid import _pykernels as py

try:
    from qrsid import _ckernels as cy
except ImportError:
    cy = None


def inputs(n, seed=0):
    rng = random.Random(seed)
    a = [rng.randint(-50, 50) for _ in range(n)]
    b = [rng.randint(-50, 50) for _ in range(n)]
    u = [1] + [rng.randint(-3, 3) for _ in range(n - 1)]
    return a, b, u


def cases(n):
    a, b, u = inputs(n)
    return {
        "mul_trunc": lambda k: k.mul_trunc(a, b, n),
        "inv_unit": lambda k: k.inv_unit(u, n),
        "div_binomial": lambda k: k.div_binomial(a, 1, 3, n),
        "mul_binomial": lambda k: k.mul_binomial(a, -2, 5, n),
    }


def bench_kernels(sizes, repeat):
    print("%-14s %6s %12s %12s %8s" % ("kernel", "n", "python ms", "cython ms", "speedup"))
    for n in sizes:
        for name, fn in cases(n).items():
            tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=repeat)) * 1000
            if cy is None:
                print("%-14s %6d %12.3f %12s %8s" % (name, n, tp, "-", "-"))
                continue
            if fn(py) != fn(cy):
                raise SystemExit("backends disagree on %s n=%d" % (name, n))
            tc = min(timeit.repeat(lambda: fn(cy), number=1, repeat=repeat)) * 1000
            print("%-14s %6d %12.3f %12.3f %7.1fx" % (name, n, tp, tc, tp / tc))


def bench_e2e(cap):
    argv = [sys.executable, "-m", "qrsid", "verify", "--all", "--status", "proved-in-paper",
            "--cap", str(cap), "--no-timing"]
    outs = {}
    for label, pure in (("cython", "0"), ("python", "1")):
        env = dict(os.environ, QRSID_PURE_PYTHON=pure)
        t0 = time.perf_counter()
        res = subprocess.run(argv, env=env, capture_output=True, text=True)
        dt = time.perf_counter() - t0
        outs[label] = res.stdout
        print("verify --all proved-in-paper cap=%d  %-7s %6.2f s  exit %d" % (cap, label, dt, res.returncode))
    print("outputs identical: %s" % (outs["cython"] == outs["python"]))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--sizes", type=int, nargs="+", default=[100, 400, 1600])
    p.add_argument("--cap", type=int, default=40)
    p.add_argument("--no-e2e", action="store_true")
    args = p.parse_args()
    if cy is None:
        print("compiled kernels not built; timing the fallback only")
    bench_kernels(args.sizes, args.repeat)
    if not args.no_e2e:
        print()
        bench_e2e(args.cap)


if __name__ == "__main__":
    main()
