"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Micro benchmarks call both modules directly; the end-to-end case runs a
degree-4 identity search in a subprocess once per backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from hopftwist import _kernels_py as pyk

try:
    from hopftwist import _kernels as cyk
except ImportError:
    cyk = None


def random_poly(rng, nterms, nvars=6, maxexp=5):
    out = {}
    for _ in range(nterms):
        m = []
        for v in sorted(rng.sample(range(nvars), rng.randint(1, nvars))):
            m += [v, rng.randint(1, maxexp)]
        out[tuple(m)] = rng.randint(-50, 50) or 1
    return out


def random_matrix(rng, nrows, ncols, density=0.3):
    return [[rng.randint(-9, 9) if rng.random() < density else 0 for _ in range(ncols)] for _ in range(nrows)]


def micro(repeat):
    rng = random.Random(7)
    p, q = random_poly(rng, 60), random_poly(rng, 60)
    mat = random_matrix(rng, 60, 80)
    monos = [(tuple(random_poly(rng, 1)), tuple(random_poly(rng, 1))) for _ in range(200)]
    monos = [(a[0], b[0]) for a, b in monos]
    cases = {
        "mono_mul x200": lambda k: [k.mono_mul(a, b) for a, b in monos],
        "poly_mul 60x60": lambda k: k.poly_mul(p, q),
        "echelon 60x80": lambda k: k.echelon(mat, 80),
    }
    rows = []
    for name, fn in cases.items():
        tp = min(timeit.repeat(lambda: fn(pyk), number=5, repeat=repeat)) / 5
        tc = min(timeit.repeat(lambda: fn(cyk), number=5, repeat=repeat)) / 5 if cyk else None
        rows.append((name, tp, tc))
    return rows


SEARCH = """
import time
from hopftwist import BACKEND, identity_search, presets, twist
h, a = presets.sweedler(1, 0, 1)
t = time.perf_counter()
r = identity_search(4, twist(h, a))
print(BACKEND, r.kernel_dim, time.perf_counter() - t)
"""


def end_to_end():
    out = []
    for pure in (True, False):
        env = dict(os.environ)
        if pure:
            env["HOPFTWIST_PURE_PYTHON"] = "1"
        else:
            env.pop("HOPFTWIST_PURE_PYTHON", None)
        res = subprocess.run([sys.executable, "-c", SEARCH], env=env, capture_output=True, text=True, check=True)
        backend, dim, secs = res.stdout.split()
        out.append((backend, int(dim), float(secs)))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cyk is None:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'kernel':<16}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, tp, tc in micro(args.repeat):
        if tc is None:
            print(f"{name:<16}{tp * 1e3:>12.3f}{'-':>12}{'-':>10}")
        else:
            print(f"{name:<16}{tp * 1e3:>12.3f}{tc * 1e3:>12.3f}{tp / tc:>9.2f}x")
    print()
    print("identity search, H4 at (1,0,1), degree 4")
    for backend, dim, secs in end_to_end():
        print(f"  {backend:<8} kernel dim {dim}  {secs:.3f} s")


if __name__ == "__main__":
    main()
