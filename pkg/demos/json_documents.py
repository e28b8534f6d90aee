#!/usr/bin/env python3
"""Serialize a classified diagram to JSON, read it back, and render DOT.

The JSON document is the interchange format between CLI runs: it pins the
family, involution arrows, painted set, and optionally the classification
and the flip trail that produced the canonical painting.  ``parse_document``
accepts anything ``emit_document`` produced, so pipelines can round-trip
states through files.
"""

import json

from supervogan import (
    FamilyId,
    build_diagram,
    classify,
    document_json,
    enumerate_vogan,
    parse_document,
    reduce_with_trail,
    render_dot,
)


def main():
    diagram = build_diagram(FamilyId("D", 3, 2))
    # last entry of the enumeration: swap involution, maximal painting
    vd = enumerate_vogan(diagram)[-1]
    reduced, trail = reduce_with_trail(vd)
    desc = classify(vd)

    realform = {
        "super_name": desc.super_name,
        "even_parts": list(desc.even_parts),
    }
    text = document_json(reduced, realform=realform, trail=trail)
    print("JSON document:")
    print(text)

    back = parse_document(json.loads(text))
    assert back == reduced
    print("\nround-trip ok:", back.painted == reduced.painted)

    print("\nDOT output:")
    print(render_dot(reduced, name="osp64"))


if __name__ == "__main__":
    main()
