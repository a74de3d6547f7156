"""Sweep random DAGs and report how tight the greedy schedule sits between
max(T1/p, Tinf) and T1/p + Tinf.

Writes plot-ready CSV to stdout: one row per (graph, p).
"""

import argparse
import csv
import random
import sys

from workspan import critical_path, greedy_schedule, optimal_makespan, total_work
from workspan.randgraph import random_dag
from workspan.render import to_decimal


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=200)
    ap.add_argument("--max-nodes", type=int, default=30)
    ap.add_argument("--procs", default="1,2,3,5,8")
    ap.add_argument("--weights", choices=["unit", "rational"], default="rational")
    ap.add_argument("--with-optimal", action="store_true",
                    help="also solve graphs of <= 8 nodes exactly")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    ps = [int(x) for x in args.procs.split(",")]
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["graph", "nodes", "edges", "p", "lower", "t_p", "upper", "optimal", "gap_to_lower"])
    violations = 0
    for k in range(args.graphs):
        g = random_dag(rng, rng.randint(1, args.max_nodes), rng.uniform(0.05, 0.5), args.weights)
        t1, span = total_work(g), critical_path(g).span
        for p in ps:
            lo, hi = max(t1 / p, span), t1 / p + span
            tp = greedy_schedule(g, p).makespan
            violations += not (lo <= tp <= hi)
            opt = optimal_makespan(g, p) if args.with_optimal and len(g) <= 8 else None
            w.writerow([k, len(g), len(g.edges), p, to_decimal(lo), to_decimal(tp), to_decimal(hi),
                        "" if opt is None else to_decimal(opt), to_decimal(tp / lo)])
    print(f"bound violations: {violations}", file=sys.stderr)
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
