"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 5 --json

Each workload is run through both backends on identical inputs; results are
checked for equality before timing.
"""

import argparse
import json
import sys
import timeit

import numpy as np

from shiftsg import _pykernels, kernels

try:
    from shiftsg import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    """(name, callable taking an impl) pairs."""
    out = []
    for n in (1_000, 20_000, 100_000):
        gens = (n + 2, n + 7, n + 11)
        out.append((f"apery_weights m={n}",
                    lambda impl, g=gens, m=n: kernels.apery_weights(g, m, impl=impl)))
    for upto in (10_000, 200_000):
        out.append((f"min_lengths upto={upto}",
                    lambda impl, u=upto: kernels.min_lengths((2, 7, 11), u, impl=impl)))
    for n in (1_000, 20_000):
        gens = (n + 2, n + 7, n + 11)
        w = kernels.apery_weights(gens, n)
        w.setflags(write=False)
        out.append((f"maximal_classes m={n}",
                    lambda impl, w=w, g=gens: kernels.maximal_classes(w, g, impl=impl)))
    for n in (200, 1_000):
        gens = (n + 2, n + 7, n + 11)
        w = kernels.apery_weights(gens, n)
        w.setflags(write=False)
        pf = sorted(int(w[c]) - n for c in kernels.maximal_classes(w, gens))
        out.append((f"trace_holes m={n}",
                    lambda impl, w=w, pf=pf: kernels.trace_holes(w, pf, pf[-1], impl=impl)))
    return out


def same(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return list(a) == list(b)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--repeat", type=int, default=3, help="best of this many runs")
    p.add_argument("--json", action="store_true")
    args = p.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; run `python3 setup.py build_ext --inplace`",
              file=sys.stderr)
        return 1

    rows = []
    for name, fn in workloads():
        if not same(fn(_pykernels), fn(_ckernels)):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        rows.append({"kernel": name, "python_s": t_py, "cython_s": t_c,
                     "speedup": t_py / t_c if t_c else float("inf")})

    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'kernel':<28}{'python':>12}{'cython':>12}{'speedup':>10}")
        for r in rows:
            print(f"{r['kernel']:<28}{r['python_s']:>11.4f}s{r['cython_s']:>11.4f}s"
                  f"{r['speedup']:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
