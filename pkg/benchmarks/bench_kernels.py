"""Compare the compiled and numpy point-evaluation kernels.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are imported directly, so the script does not depend on
``PHARMONIC_PURE_PYTHON``. Without the compiled extension only the numpy
timings are printed.
"""
import argparse
import time

import numpy as np

from pharmonic import _pykernels
from pharmonic.geometry import SamplingGrid
from pharmonic.harmonic import HarmonicSeries, PHarmonicMap

try:
    from pharmonic import _ckernels
except ImportError:
    _ckernels = None


def random_map(rng, p, deg):
    layers = []
    for _ in range(p):
        c = rng.normal(size=deg) + 1j * rng.normal(size=deg)
        d = rng.normal(size=deg) + 1j * rng.normal(size=deg)
        layers.append(HarmonicSeries(complex(rng.normal()), c, d))
    return PHarmonicMap(tuple(layers))


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    z = SamplingGrid.uniform(64, 256).points()
    backends = {"numpy": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels

    print(f"{z.size} grid points, best of {args.repeat}")
    print(f"{'case':<24}{'kernel':<8}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for p, deg in ((1, 8), (3, 8), (5, 8), (1, 300)):
        i, j, coef = random_map(rng, p, deg).bipoly._arrays
        for kernel in ("bipoly", "jet"):
            row = {}
            ref = None
            for name, mod in backends.items():
                fn = getattr(mod, "eval_" + kernel)
                out = fn(i, j, coef, z)
                first = out if kernel == "bipoly" else out[0]
                if ref is None:
                    ref = first
                else:
                    # the backends must agree before their timings mean anything
                    assert np.allclose(first, ref, rtol=1e-10, atol=1e-10)
                row[name] = best_time(lambda: fn(i, j, coef, z), args.repeat)
            speed = row["numpy"] / row["cython"] if "cython" in row else float("nan")
            case = f"p={p} deg={deg} ({len(coef)} terms)"
            print(f"{case:<24}{kernel:<8}" + "".join(f"{row[b] * 1e3:>10.2f}ms" for b in backends)
                  + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
