#!/usr/bin/env python3
"""Replay a reduction flip by flip on a painted sl(4|1) diagram.

Starting from the painting {1, 3} (1-based) of A(3,0), ``reduce_with_trail``
returns both the canonical painting and the sequence of flips that reaches
it.  The script re-applies that trail one move at a time so each
intermediate diagram is visible, then checks the replay lands exactly on
the reduced diagram.
"""

from supervogan import (
    FamilyId,
    VoganDiagram,
    build_diagram,
    classify,
    flip,
    identity_involution,
    reduce_with_trail,
    render_ascii,
)


def main():
    diagram = build_diagram(FamilyId("A", 3, 0))
    start = VoganDiagram(
        diagram, identity_involution(len(diagram)), frozenset({0, 2})
    )

    reduced, trail = reduce_with_trail(start)

    print("start:")
    print(render_ascii(start))

    state = start
    for move in trail:
        state = flip(state, move.at)
        print(f"\nafter flip at node {move.at + 1}:")
        print(render_ascii(state))

    assert state == reduced
    assert classify(start).super_name == classify(reduced).super_name

    print(f"\ncanonical painting: {sorted(i + 1 for i in reduced.painted)}")
    print(f"real form: {classify(reduced).super_name}")


if __name__ == "__main__":
    main()
