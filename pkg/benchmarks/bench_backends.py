"""Compare the compiled and pure-Python tridiagonal eigenvalue kernels.

Usage: python benchmarks/bench_backends.py [--n 4000] [--count 4] [--repeat 3]

Builds the finite-difference matrix for a representative confining problem
(the sextic image of a CLH ground state) and times Sturm-sequence bisection
on both backends, checking that they agree to near machine precision.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from qesolver import _core_py
from qesolver.oracle import default_grid
from qesolver.potentials import PotentialSpec, QuantumNumbers, evaluate_potential

try:
    from qesolver import _core
except ImportError:
    _core = None


def build_problem(n_points: int):
    spec = PotentialSpec.sextic(mu=1.0, lam=4.0 / 15**1.5, eta=1.0 / (32.0 * 15**2))
    q = QuantumNumbers(D=2, ell=1)
    grid = default_grid(spec, q)
    r = np.linspace(grid.r_min, grid.r_max, n_points)[1:-1]
    h = (grid.r_max - grid.r_min) / (n_points - 1)
    k = q.k
    w = (k - 1) * (k - 3) / (8.0 * r * r) + evaluate_potential(spec, r)
    d = 1.0 / (h * h) + w
    e = np.full(len(r) - 1, -0.5 / (h * h))
    return d, e


def bench(impl, d, e, count: int, repeat: int):
    best = float("inf")
    eigs = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        eigs = np.asarray(impl.tridiag_lowest(d, e, count))
        best = min(best, time.perf_counter() - t0)
    return best, eigs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4000, help="grid points")
    ap.add_argument("--count", type=int, default=4, help="eigenvalues to extract")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    d, e = build_problem(args.n)
    t_py, eig_py = bench(_core_py, d, e, args.count, args.repeat)
    print(f"python backend:  {t_py * 1e3:8.2f} ms  lowest = {eig_py[0]:.12f}")
    if _core is None:
        print("cython backend:  not built (pip install -e . compiles it)")
        return
    t_cy, eig_cy = bench(_core, d, e, args.count, args.repeat)
    agreement = float(np.max(np.abs(eig_cy - eig_py)))
    print(f"cython backend:  {t_cy * 1e3:8.2f} ms  lowest = {eig_cy[0]:.12f}")
    print(f"speedup: {t_py / t_cy:.1f}x   max |delta|: {agreement:.3e}")


if __name__ == "__main__":
    main()
