"""Compare the pure-Python and compiled kernel backends on the hot paths.

Two workloads:

  canon   canonical forms of every simple graph up to --canon-order
          positions, repeated --repeat times
  sweep   splice_pair_check over all ordered pairs of simple graphs up
          to --sweep-order positions at --max-power

Run from the repository root:

    python3 benchmarks/kernel_benchmark.py
    python3 benchmarks/kernel_benchmark.py --sweep-order 5   # the full sweep
"""

import argparse
import sys
from time import perf_counter

from graphsplice._kernels import pure
from graphsplice.analysis import graphs_up_to

try:
    from graphsplice._kernels import _speed
except ImportError:
    _speed = None


def time_canon(kernel, graphs, repeat):
    t0 = perf_counter()
    for _ in range(repeat):
        for g in graphs:
            kernel.canonical_form(g.order, g.edges)
    return perf_counter() - t0


def time_sweep(kernel, graphs, max_power):
    tables = [kernel.prepare_graph(g.order, g.edges) for g in graphs]
    t0 = perf_counter()
    products = 0
    for ta in tables:
        for tb in tables:
            stats = kernel.splice_pair_check(ta, tb, max_power)
            products += stats[1]
    return perf_counter() - t0, products


def report(name, pure_s, speed_s, extra=""):
    if speed_s is None:
        print(f"{name:<8} pure {pure_s:8.2f}s   compiled      n/a {extra}")
    else:
        ratio = pure_s / speed_s if speed_s > 0 else float("inf")
        print(f"{name:<8} pure {pure_s:8.2f}s   compiled {speed_s:8.2f}s"
              f"   speedup {ratio:5.1f}x {extra}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--canon-order", type=int, default=5,
                    help="canonicalize all simple graphs up to this order")
    ap.add_argument("--sweep-order", type=int, default=4,
                    help="sweep all ordered pairs of graphs up to this order")
    ap.add_argument("--max-power", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3,
                    help="repetitions of the canon workload")
    args = ap.parse_args(argv)

    if _speed is None:
        print("compiled backend not built; timing the pure backend only",
              file=sys.stderr)

    canon_graphs = list(graphs_up_to(args.canon_order))
    print(f"canon workload: {len(canon_graphs)} graphs x {args.repeat}")
    pure_canon = time_canon(pure, canon_graphs, args.repeat)
    speed_canon = (time_canon(_speed, canon_graphs, args.repeat)
                   if _speed else None)
    report("canon", pure_canon, speed_canon)

    sweep_graphs = list(graphs_up_to(args.sweep_order))
    print(f"sweep workload: {len(sweep_graphs)}^2 ordered pairs, "
          f"max power {args.max_power}")
    pure_sweep, pure_products = time_sweep(pure, sweep_graphs, args.max_power)
    if _speed:
        speed_sweep, speed_products = time_sweep(
            _speed, sweep_graphs, args.max_power)
        if pure_products != speed_products:
            print(f"backend disagreement: {pure_products} vs "
                  f"{speed_products} products", file=sys.stderr)
            return 1
    else:
        speed_sweep = None
    report("sweep", pure_sweep, speed_sweep,
           f"({pure_products} products)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
