"""Wall-clock timings of the reduced Groebner basis of the fiber ideal for growing n."""

import argparse
import time

from fibercas.algebra import parse_order
from fibercas.models import fiber_equations
from fibercas.resolution import betti_table, free_resolution


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--order", default="wgrevlex")
    ap.add_argument("--betti", action="store_true", help="also time the minimal resolution")
    args = ap.parse_args()
    order = parse_order(args.order)
    print(f"{'n':>3} {'vars':>5} {'gens':>5} {'gb':>5} {'seconds':>9}")
    for n in range(2, args.nmax + 1):
        F = fiber_equations(n)
        t = time.perf_counter()
        G = F.gb(order)
        el = time.perf_counter() - t
        line = f"{n:>3} {F.ring.nvars:>5} {len(F.generators):>5} {len(G):>5} {el:>9.3f}"
        if args.betti:
            t = time.perf_counter()
            B = betti_table(free_resolution(F))
            line += f"  betti {B.totals()} {time.perf_counter() - t:.3f}s"
        print(line)


if __name__ == "__main__":
    main()
