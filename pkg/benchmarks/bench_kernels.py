"""Compare the compiled kernels with the NumPy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from knotforge import kernels
from knotforge.cjones import BraidWord, colored_jones

P = 2 ** 31 - 1


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def use_backend(module):
    for name in ("echelon_mod_p", "statesum_mod_p", "statesum_bounds"):
        setattr(kernels, name, getattr(module, name))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--size", type=int, default=300, help="rows and columns of the echelon test matrix")
    parser.add_argument("--color", type=int, default=7, help="color of the figure-8 state sum")
    args = parser.parse_args()

    if kernels.compiled_backend is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")

    rng = np.random.default_rng(0)
    A = rng.integers(0, P, size=(args.size, args.size), dtype=np.int64)
    braid = BraidWord(3, (1, -2, 1, -2))
    backends = (("cython", kernels.compiled_backend), ("python", kernels.python_backend))

    results = {}
    for name, module in backends:
        use_backend(module)
        results[name] = (
            best_of(lambda: module.echelon_mod_p(A, P, True), args.repeat),
            best_of(lambda: colored_jones(braid, args.color), args.repeat),
        )
    use_backend(kernels.compiled_backend)

    print(f"{'kernel':<34}{'cython (s)':>12}{'python (s)':>12}{'speedup':>10}")
    labels = (f"echelon {args.size}x{args.size} mod p", f"figure-8 state sum, n = {args.color}")
    for i, label in enumerate(labels):
        c, p = results["cython"][i], results["python"][i]
        print(f"{label:<34}{c:>12.4f}{p:>12.4f}{p / c:>9.1f}x")


if __name__ == "__main__":
    main()
