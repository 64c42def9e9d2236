"""Time the compiled and pure-Python alpha-array kernels on the same graphs.

    python benchmarks/bench_apsp.py [--repeat 3]
"""

import argparse
import time

from swlab import _fallback
from swlab import generators as gen

try:
    from swlab import _kernels
except ImportError:
    _kernels = None

CASES = [
    ("chain(2000)", lambda: gen.chain(2000)),
    ("chain_star(45, 1955)", lambda: gen.chain_star(45, 1955)),
    ("erdos_renyi(2000, z=6)", lambda: gen.erdos_renyi(2000, 6, 0).graph),
    ("barabasi_albert(3, 2, 1997)", lambda: gen.barabasi_albert(3, 2, 1997, 0)),
    ("layered geometric:2, 10 steps", lambda: gen.layered(gen.LayeredSpec("geometric", 10, 2))),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'graph':32} {'nodes':>6} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for name, build in CASES:
        g = build()
        indptr, indices = g.csr()
        t_py, (h_py, _) = best_of(lambda: _fallback.alpha_histogram(indptr, indices, 0, g.n), args.repeat)
        if _kernels is None:
            print(f"{name:32} {g.n:6d} {t_py:9.3f} {'n/a':>9} {'n/a':>8}")
            continue
        t_c, (h_c, _) = best_of(lambda: _kernels.alpha_histogram(indptr, indices, 0, g.n), args.repeat)
        assert h_py.tolist() == h_c.tolist(), name
        print(f"{name:32} {g.n:6d} {t_py:9.3f} {t_c:9.3f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
