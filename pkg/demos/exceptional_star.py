#!/usr/bin/env python3
"""How the one-parameter star family D(2,1;a) classifies as ``a`` varies.

The diagram shape never changes (a painted-center star with three even
tips), but the available diagram symmetries do: special values of ``a``
make two tip weights coincide and unlock a swap involution, which changes
the list of real forms.
"""

from fractions import Fraction

from supervogan import (
    FamilyId,
    automorphisms,
    build_diagram,
    enumerate_real_forms,
)

ALPHAS = [Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(3, 5)]


def main():
    for alpha in ALPHAS:
        diagram = build_diagram(FamilyId("D21alpha", alpha=alpha))
        autos = automorphisms(diagram)
        names = [a.name for a in autos]
        forms = enumerate_real_forms(diagram)

        print(f"== {diagram.family.display()} ==")
        print(f"symmetries: {', '.join(names)}")
        for desc in forms:
            evens = " + ".join(desc.even_parts)
            tag = "" if desc.involution == "identity" else f"  [{desc.involution}]"
            print(f"  {desc.super_name}   even part {evens}{tag}")
        print()


if __name__ == "__main__":
    main()
