"""Print the worked-example numbers for the 18-node fixture and its flattened twin."""

from workspan import (
    amdahl_asymptote,
    analyze,
    fixture_leiserson,
    greedy_schedule,
    reconcile,
    serial_fraction,
    speedup_series,
    strip_edges,
)
from workspan.render import render


def main():
    g = fixture_leiserson()
    print(render(analyze(g)))
    m = serial_fraction(g)
    print(f"sigma = {m.sigma}, Amdahl asymptote = {amdahl_asymptote(m)}")
    print()
    print(render(speedup_series(g, [1, 2, 3, 4, 6, 9, 18])))
    print(render(reconcile(g, 8)))

    flat = strip_edges(g)
    t18 = greedy_schedule(flat, 18).makespan
    print(f"edgeless twin: span 1, T_18 = {t18}, S_18 = {18 / t18}, E_18 = {18 / t18 / 18}")


if __name__ == "__main__":
    main()
