"""Show how a slow serial baseline manufactures superlinear speedup.

The fixture is simulated for p = 1..18, then the p=1 time is inflated by a
factor (cache misses, a poor serial code path) and the series is diagnosed.
"""

import argparse
from fractions import Fraction

from workspan import detect_superlinear, fixture_leiserson, speedup_series
from workspan.render import render
from workspan.scheduler import make_series


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--inflate", type=Fraction, default=Fraction(3))
    args = ap.parse_args(argv)

    sim = speedup_series(fixture_leiserson(), list(range(1, 19)))
    pts = [(r.p, r.t_p * args.inflate if r.p == 1 else r.t_p) for r in sim.rows]
    measured = make_series(pts, pts[0][1])
    print(render(measured))
    print(render(detect_superlinear(measured)))


if __name__ == "__main__":
    main()
