#!/usr/bin/env python3
"""Tour of distinguished simple-root diagrams and their exact Cartan data.

Builds one diagram per family shape, prints the ASCII picture of the
unpainted diagram, the Cartan matrix, and the symmetrizing weights eps,
and checks that diag(eps) * A really is symmetric.
"""

from fractions import Fraction

from supervogan import (
    FamilyId,
    build_diagram,
    cartan_matrix,
    enumerate_vogan,
    render_ascii,
)

FAMILIES = [
    FamilyId("A", 2, 1),
    FamilyId("B", 2, 2),
    FamilyId("B0", 0, 3),
    FamilyId("C", 0, 3),
    FamilyId("D", 3, 1),
    FamilyId("D21alpha", alpha=Fraction(1)),
    FamilyId("F4"),
    FamilyId("G3"),
]


def show(fam):
    diagram = build_diagram(fam)
    data = cartan_matrix(diagram)
    # the unpainted diagram with the identity involution comes first
    unpainted = enumerate_vogan(diagram)[0]

    print(f"== {fam.display()} ==")
    print(render_ascii(unpainted))
    print("Cartan matrix:")
    for row in data.matrix:
        print("   ", "  ".join(f"{x!s:>4}" for x in row))
    print("eps:", ", ".join(str(e) for e in data.eps))

    sym = data.symmetrized
    assert all(
        sym[i][j] == sym[j][i] for i in range(len(sym)) for j in range(len(sym))
    )
    print()


if __name__ == "__main__":
    for fam in FAMILIES:
        show(fam)
