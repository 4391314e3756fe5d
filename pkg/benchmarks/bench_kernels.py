"""Compare the compiled and pure-Python polynomial kernels.

Micro benchmarks time ``mul`` and ``divexact`` on random integer
polynomials; the end-to-end run times the full identity suite in a fresh
interpreter under each backend.

    python benchmarks/bench_kernels.py [--repeat 5] [--n-max 12]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from qhermite import _kernels_py

try:
    from qhermite import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _poly(rng, n, bound):
    p = [rng.randint(-bound, bound) for _ in range(n)]
    p[-1] = p[-1] or 1
    return p


def micro(repeat: int):
    rng = random.Random(1234)
    rows = []
    for n, bound in [(4, 10), (16, 10), (64, 100), (256, 1000), (64, 10**30)]:
        a, b = _poly(rng, n, bound), _poly(rng, n, bound)
        prod = _kernels_py.mul(a, b)
        for name, mod in (("python", _kernels_py), ("cython", _kernels_c)):
            if mod is None:
                continue
            assert mod.mul(a, b) == prod and mod.divexact(prod, b) == a
            number = max(1, 20000 // (n * n // 4 + 1))
            t_mul = min(timeit.repeat(lambda: mod.mul(a, b), number=number, repeat=repeat)) / number
            t_div = min(timeit.repeat(lambda: mod.divexact(prod, b), number=number, repeat=repeat)) / number
            rows.append((n, bound, name, t_mul, t_div))
    return rows


def end_to_end(n_max: int):
    out = {}
    for name, env in (("python", {"QHERMITE_PURE_PYTHON": "1"}), ("cython", {})):
        if name == "cython" and _kernels_c is None:
            continue
        code = (
            "import time; t=time.perf_counter();"
            "from qhermite import verify, BACKEND;"
            f"r=verify.run_suite('all', {n_max});"
            "assert verify.all_passed(r);"
            "print(BACKEND, time.perf_counter()-t)"
        )
        env = {k: v for k, v in os.environ.items() if k != "QHERMITE_PURE_PYTHON"} | env
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        assert backend == name, (backend, name)
        out[name] = float(secs)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=12)
    args = ap.parse_args()

    print(f"{'len':>5} {'|coeff|':>8} {'backend':>8} {'mul (us)':>10} {'divexact (us)':>14}")
    for n, bound, name, t_mul, t_div in micro(args.repeat):
        size = f"1e{len(str(bound)) - 1}" if bound >= 1000 else str(bound)
        print(f"{n:>5} {size:>8} {name:>8} {t_mul * 1e6:>10.2f} {t_div * 1e6:>14.2f}")

    print(f"\nverify --suite all --n-max {args.n_max}")
    timings = end_to_end(args.n_max)
    for name, secs in timings.items():
        print(f"  {name:>8}: {secs:.2f} s")
    if len(timings) == 2:
        print(f"  speedup: {timings['python'] / timings['cython']:.2f}x")


if __name__ == "__main__":
    main()
