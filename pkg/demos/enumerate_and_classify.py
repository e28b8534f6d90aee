#!/usr/bin/env python3
"""Enumerate every painted diagram of osp(5|4) and name its real form.

Each admissible painting (even nodes only, constant on involution orbits)
is reduced by flips to its canonical representative and classified.  The
printout groups paintings by the real form they land on, which makes the
flip equivalence classes visible.
"""

from collections import defaultdict

from supervogan import (
    FamilyId,
    build_diagram,
    classify,
    enumerate_vogan,
    reduce_with_trail,
)


def main():
    diagram = build_diagram(FamilyId("B", 2, 2))
    print(f"family: {diagram.family.display()}")

    by_form = defaultdict(list)
    for vd in enumerate_vogan(diagram):
        reduced, trail = reduce_with_trail(vd)
        name = classify(vd).super_name
        by_form[name].append((vd, reduced, trail))

    for name in sorted(by_form):
        print(f"\n{name}")
        for vd, reduced, trail in by_form[name]:
            painted = sorted(i + 1 for i in vd.painted)
            canonical = sorted(i + 1 for i in reduced.painted)
            flips = ", ".join(str(move.at + 1) for move in trail) or "-"
            print(
                f"  painted {painted or '[]'}"
                f"  ->  canonical {canonical or '[]'}  (flips: {flips})"
            )

    forms = sorted(by_form)
    print(f"\n{len(forms)} distinct real forms from "
          f"{sum(len(v) for v in by_form.values())} paintings")


if __name__ == "__main__":
    main()
