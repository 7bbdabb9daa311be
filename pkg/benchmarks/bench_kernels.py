"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both implementations in-process on the same tables.
The end-to-end row builds a subgroup lattice in a child process, once with
the default backend and once with GROUPLEX_PURE=1.
"""
import argparse
import os
import subprocess
import sys
import timeit

from grouplex import _kernels_py
from grouplex.group import symmetric, wreath_cyclic

try:
    from grouplex import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

LATTICE_SNIPPET = (
    "import time; from grouplex.group import {fn}; from grouplex.subgroups import Lattice;"
    "g = {fn}({args}); t = time.perf_counter(); Lattice(g); print(time.perf_counter() - t)"
)


def kernel_cases():
    s5, w = symmetric(5), wreath_cyclic(2, 4)
    pairs = [(a, b) for a in range(0, 120, 7) for b in range(1, 120, 11)]
    return [
        ("closure S5 (pairs)", s5, lambda k, rows: [k.closure(rows, p) for p in pairs]),
        ("element_orders S5", s5, lambda k, rows: k.element_orders(rows)),
        ("associativity S5", s5, lambda k, rows: k.first_nonassociative(rows)),
        ("associativity C2wrC4", w, lambda k, rows: k.first_nonassociative(rows)),
    ]


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def lattice_time(fn, args, pure):
    env = dict(os.environ)
    env.pop("GROUPLEX_PURE", None)
    if pure:
        env["GROUPLEX_PURE"] = "1"
    code = LATTICE_SNIPPET.format(fn=fn, args=args)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _kernels_c is None:
        print("compiled kernels not built; only the fallback is available")
        return 1
    print(f"{'case':28} {'cython':>10} {'python':>10} {'speedup':>8}")
    for name, g, run in kernel_cases():
        rows_c, rows_p = _kernels_c.prepare(g.table), _kernels_py.prepare(g.table)
        tc = best_of(lambda: run(_kernels_c, rows_c), args.repeat)
        tp = best_of(lambda: run(_kernels_py, rows_p), args.repeat)
        print(f"{name:28} {tc * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tc:7.1f}x")
    for label, fn, fargs in (("lattice S5", "symmetric", "5"), ("lattice C2wrC4", "wreath_cyclic", "2, 4")):
        tc = min(lattice_time(fn, fargs, False) for _ in range(2))
        tp = min(lattice_time(fn, fargs, True) for _ in range(2))
        print(f"{label:28} {tc * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
