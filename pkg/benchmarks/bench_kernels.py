"""Compare the compiled kernels with the pure-Python fallback.

Kernel timings call both implementations directly.  The end-to-end
enumeration is run in a fresh interpreter per backend, since the backend is
fixed at import time (``BECURV_BACKEND=python`` forces the fallback).

    python benchmarks/bench_kernels.py [--n 7] [--repeat 3]
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from becurv import _pykernels
from becurv.classify import enumerate_graph6
from becurv.formats import decode_graph6

try:
    from becurv import _kernels
except ImportError:
    _kernels = None


def _best(stmt, repeat):
    return min(timeit.repeat(stmt, number=1, repeat=repeat))


def bench_jacobi(mod, mats, repeat):
    return _best(lambda: [mod.jacobi_eigh(a) for a in mats], repeat)


def bench_canon(mod, graphs, repeat):
    def run():
        for adj in graphs:
            n = len(adj)
            colors = mod.refine_colors(n, adj)
            mod.canon_order(n, adj, colors)
    return _best(run, repeat)


def bench_enumeration(n, backend, repeat):
    env = dict(os.environ, BECURV_BACKEND=backend)
    code = (
        "import time\n"
        "from becurv.classify import enumerate_graph6\n"
        f"t=time.perf_counter(); c=sum(1 for _ in enumerate_graph6({n})); "
        "print(time.perf_counter()-t, c)\n"
    )
    times = []
    for _ in range(repeat):
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        t, count = out.stdout.split()
        times.append(float(t))
    return min(times), int(count)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7, help="vertex bound for enumeration (default 7)")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if _kernels is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1

    rng = np.random.default_rng(args.seed)
    mats = []
    for order in (4, 8, 16, 32, 64):
        for _ in range(5):
            a = rng.normal(size=(order, order))
            mats.append(a + a.T)
    graphs = [decode_graph6(k) for k in enumerate_graph6(min(args.n, 7))]

    rows = [
        ("jacobi_eigh (25 matrices, order 4-64)",
         bench_jacobi(_pykernels, mats, args.repeat), bench_jacobi(_kernels, mats, args.repeat)),
        (f"canonical labelling ({len(graphs)} graphs)",
         bench_canon(_pykernels, graphs, args.repeat), bench_canon(_kernels, graphs, args.repeat)),
    ]
    t_py, count = bench_enumeration(args.n, "python", args.repeat)
    t_cy, _ = bench_enumeration(args.n, "cython", args.repeat)
    rows.append((f"enumerate connected n<={args.n} ({count} graphs)", t_py, t_cy))

    print(f"{'benchmark':48s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for name, tp, tc in rows:
        print(f"{name:48s} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
