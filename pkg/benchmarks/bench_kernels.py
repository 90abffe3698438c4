"""
Compare the compiled and numpy lattice-sum kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends are timed on the same inputs: a 64 x 64 grid on a fixed
random lattice (the inner loop of the minimum search) and single-point
evaluations (the pattern-search refinement).
"""

import argparse
import timeit

import numpy as np

from torusheat import kernels, lattice


def _cases():
    lat = lattice.random_lattice(np.random.default_rng(42))
    g = np.arange(64) / 64
    gx, gy = np.meshgrid(g, g, indexing="ij")
    gx, gy = gx.ravel(), gy.ravel()
    pt = (np.array([0.37]), np.array([0.61]))
    out = []
    for t in (0.25, 0.5, 2.0, 4.0):
        route = "spectral_sum" if t >= lattice.ROUTE_SWITCH_T else "periodized_sum"
        radius = (lattice.spectral_radius if route == "spectral_sum" else lattice.periodized_radius)(lat, t)
        gm = lat.gram
        head = (gm[0, 0], gm[0, 1], gm[1, 1], t)
        out.append((f"grid 64x64 t={t}", route, head + (gx, gy, radius, lattice.LOG_CUT)))
        out.append((f"point t={t}", route, head + (*pt, radius, lattice.LOG_CUT)))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = kernels.available_backends()
    names = sorted(backends)
    print(f"default backend: {kernels.BACKEND}")
    print(f"{'case':<22}{'route':<16}" + "".join(f"{n + ' [ms]':>16}" for n in names) + f"{'speedup':>10}")
    for label, route, call_args in _cases():
        times = {}
        for n in names:
            fn = getattr(backends[n], route)
            number = 20 if label.startswith("grid") else 2000
            best = min(timeit.repeat(lambda: fn(*call_args), number=number, repeat=args.repeat))
            times[n] = 1e3 * best / number
        cells = "".join(f"{times[n]:>16.4f}" for n in names)
        speed = f"{times['python'] / times['cython']:>9.1f}x" if "cython" in times else ""
        print(f"{label:<22}{route:<16}{cells}{speed}")


if __name__ == "__main__":
    main()
