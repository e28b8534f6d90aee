#!/usr/bin/env python3
"""Count positive roots by parity and reconcile with superalgebra dimensions.

For each family the positive roots split into the two even summands and the
odd part.  Doubling the positive counts and adding the Cartan rank must
reproduce the dimension of the superalgebra, which is a strong whole-system
check on the root generation.
"""

from fractions import Fraction

from supervogan import FamilyId, build_diagram, generate_roots

CASES = [
    (FamilyId("A", 2, 1), 24),       # sl(3|2): 5^2 - 1
    (FamilyId("B", 2, 2), 40),       # osp(5|4): 10 + 10 + 20
    (FamilyId("B0", 0, 2), 14),      # osp(1|4): 10 + 4
    (FamilyId("C", 0, 3), 34),       # osp(2|6): 1 + 21 + 12
    (FamilyId("D", 3, 1), 30),       # osp(6|2): 15 + 3 + 12
    (FamilyId("D21alpha", alpha=Fraction(3, 5)), 17),
    (FamilyId("F4"), 40),
    (FamilyId("G3"), 31),
]


def cartan_rank(diagram):
    fam = diagram.family
    if fam.kind == "A" and fam.m == fam.n:
        return len(diagram) - 1  # quotient family: one Cartan direction dies
    if fam.kind == "D21alpha":
        return 3  # the fourth node lies in the span of the other three
    return len(diagram)


def main():
    header = f"{'family':<12} {'even_1':>7} {'even_2':>7} {'odd':>5} {'dim':>5}"
    print(header)
    print("-" * len(header))

    for fam, dim in CASES:
        diagram = build_diagram(fam)
        roots = generate_roots(diagram)
        rank = cartan_rank(diagram)

        total = rank + 2 * len(roots.all_positive())
        print(
            f"{fam.display():<12} {len(roots.even_1):>7} {len(roots.even_2):>7}"
            f" {len(roots.odd):>5} {total:>5}"
        )
        assert total == dim, (fam.display(), total, dim)

    print("\nall dimension checks passed")


if __name__ == "__main__":
    main()
