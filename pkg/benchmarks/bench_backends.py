"""Times the compiled quadrature core against the pure-NumPy fallback.

Run from the repository root after installing the package:

    python benchmarks/bench_backends.py [--repeats N]

Workloads mirror the two hot paths: a derivative-bearing profile sweep and
the distinct-energy batch behind the default phase-space grid.
"""

import argparse
import math
import time

import numpy as np

from wigbarrier import _core_py
from wigbarrier.profile import QuadratureConfig

try:
    from wigbarrier import _core
except ImportError:
    _core = None


def _grid_etas(n=201, half_width=3.5):
    xs = np.linspace(-half_width, half_width, n)
    X, P = np.meshgrid(xs, xs)
    return np.unique(0.5 * (P * P - X * X))


WORKLOADS = [
    ("profile sweep (2001 eta, W+dW+d2W)", np.linspace(-5.0, 5.0, 2001), 2),
    ("grid batch (distinct eta of 201x201)", _grid_etas(), 0),
]


def run(impl, etas, nderiv, repeats):
    eps = -0.4
    cfg = QuadratureConfig.for_point(eps=eps, eta=float(np.abs(etas).max()))
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        impl.profile_sums(eps, etas, cfg.xi_max, cfg.step, nderiv)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    print(f"{'workload':<40} {'python':>10} {'cython':>10} {'speedup':>9}")
    for label, etas, nderiv in WORKLOADS:
        t_py = run(_core_py, etas, nderiv, args.repeats)
        if _core is None:
            print(f"{label:<40} {t_py:>9.3f}s {'absent':>10} {'-':>9}")
            continue
        t_cy = run(_core, etas, nderiv, args.repeats)
        print(f"{label:<40} {t_py:>9.3f}s {t_cy:>9.3f}s {t_py / t_cy:>8.2f}x")


if __name__ == "__main__":
    main()
