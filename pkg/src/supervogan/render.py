"""ASCII and DOT renderings plus the JSON document format.

Node glyphs: ``o`` even, ``*`` even painted, ``(x)`` odd isotropic,
``(*)`` odd non-isotropic.  Multiple bonds carry an arrow pointing at the
node whose Cartan row holds the larger entry in absolute value.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Union

from .algebra import (
    EVEN,
    ODD_ISO,
    ODD_NONISO,
    Diagram,
    FamilyId,
    build_diagram,
    cartan_matrix,
)
from .errors import BadIndex, InvalidFamily, ParseError
from .vogan import (
    DiagramInvolution,
    FlipMove,
    VoganDiagram,
    automorphisms,
    identity_involution,
)

SCHEMA_VERSION = "1"


def _glyph(vd: VoganDiagram, i: int) -> str:
    kind = vd.diagram.nodes[i].kind
    if kind == ODD_ISO:
        return "(x)"
    if kind == ODD_NONISO:
        return "(*)"
    return "*" if i in vd.painted else "o"


def _bond(diagram: Diagram, i: int, j: int) -> str:
    a = cartan_matrix(diagram).matrix
    left, right = abs(a[i][j]), abs(a[j][i])
    strength = max(left, right)
    if strength < 2:
        return "---"
    # the larger entry sits in the row of the shorter root; point at it
    at_right = right > left
    if strength >= 3:
        return "=>>" if at_right else "<<="
    return "=>" if at_right else "<="


def _linear_ascii(vd: VoganDiagram, order: list[int]) -> str:
    parts = [_glyph(vd, order[0])]
    for prev, cur in zip(order, order[1:]):
        parts.append(_bond(vd.diagram, prev, cur))
        parts.append(_glyph(vd, cur))
    return "".join(parts)


def _pronged_ascii(vd: VoganDiagram, main: list[int], tips: tuple[int, int]) -> str:
    line = _linear_ascii(vd, main)
    w = len(line)
    return "\n".join(
        [
            " " * (w + 1) + _glyph(vd, tips[0]),
            " " * w + "/",
            line,
            " " * w + "\\",
            " " * (w + 1) + _glyph(vd, tips[1]),
        ]
    )


def render_ascii(vd: VoganDiagram) -> str:
    """Drawn diagram plus one ``i <--> j`` line per involution arrow (1-based)."""
    fam = vd.diagram.family
    size = len(vd.diagram)
    if fam is not None and fam.kind == "D":
        body = _pronged_ascii(vd, list(range(size - 2)), (size - 2, size - 1))
    elif fam is not None and fam.kind == "D21alpha":
        body = _pronged_ascii(vd, [0, 1], (2, 3))
    else:
        body = _linear_ascii(vd, list(range(size)))
    arrows = [
        f"{i + 1} <--> {j + 1}"
        for i, j in enumerate(vd.involution.perm)
        if i < j
    ]
    return "\n".join([body] + arrows)


def render_dot(vd: VoganDiagram, name: str = "diagram") -> str:
    """Strict undirected DOT graph with node kinds and bond multiplicities."""
    diagram = vd.diagram
    a = cartan_matrix(diagram).matrix
    lines = [f"strict graph {name} {{", '  node [shape="circle"];']
    for node in diagram.nodes:
        i = node.index
        attrs = [f'label="{i + 1}"', f'kind="{node.kind}"']
        if node.kind != EVEN:
            attrs.append('shape="doublecircle"')
        if i in vd.painted:
            attrs.append('painted="true"')
            attrs.append('style="filled"')
        else:
            attrs.append('painted="false"')
        lines.append(f"  n{i + 1} [{' '.join(attrs)}];")
    size = len(diagram)
    for i in range(size):
        for j in range(i + 1, size):
            if a[i][j] == 0:
                continue
            strength = int(max(abs(a[i][j]), abs(a[j][i])))
            attrs = [f'label="{max(strength, 1)}"']
            lines.append(f"  n{i + 1} -- n{j + 1} [{' '.join(attrs)}];")
    for i, j in enumerate(vd.involution.perm):
        if i < j:
            lines.append(
                f'  n{i + 1} -- n{j + 1} [style="dashed" role="involution"];'
            )
    lines.append("}")
    return "\n".join(lines)


# ----------------------------------------------------------------------------
# JSON documents.


def _family_dict(fam: FamilyId) -> dict:
    out: dict = {"kind": fam.kind, "m": fam.m, "n": fam.n}
    if fam.kind == "D21alpha":
        out["alpha"] = str(fam.alpha)
    return out


def _family_from_dict(data: dict) -> FamilyId:
    try:
        kind = data["kind"]
        m = int(data.get("m", 0))
        n = int(data.get("n", 0))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("malformed family object", json.dumps(data), 0) from exc
    alpha = None
    if "alpha" in data:
        try:
            alpha = Fraction(data["alpha"])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError("malformed alpha", str(data["alpha"]), 0) from exc
    return FamilyId(kind, m, n, alpha)


def emit_document(
    vd: VoganDiagram,
    realform: Optional[dict] = None,
    trail: Optional[tuple[FlipMove, ...]] = None,
) -> dict:
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "family": _family_dict(vd.diagram.family),
        "nodes": [
            {
                "index": node.index + 1,
                "kind": node.kind,
                "painted": node.index in vd.painted,
            }
            for node in vd.diagram.nodes
        ],
        "arrows": [
            [i + 1, j + 1] for i, j in enumerate(vd.involution.perm) if i < j
        ],
    }
    if realform is not None:
        doc["realform"] = realform
    if trail is not None:
        doc["trail"] = [move.at + 1 for move in trail]
    return doc


def document_json(
    vd: VoganDiagram,
    realform: Optional[dict] = None,
    trail: Optional[tuple[FlipMove, ...]] = None,
) -> str:
    return json.dumps(emit_document(vd, realform, trail), indent=2)


def parse_document(source: Union[str, dict]) -> VoganDiagram:
    """Rebuild a painted diagram from its JSON document."""
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON", source[:80], exc.pos) from exc
    else:
        data = source
    if not isinstance(data, dict):
        raise ParseError("document must be an object", str(type(data)), 0)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(
            "unsupported schema_version", str(data.get("schema_version")), 0
        )
    fam = _family_from_dict(data.get("family", {}))
    try:
        diagram = build_diagram(fam)
    except InvalidFamily as exc:
        raise ParseError(str(exc), json.dumps(data.get("family")), 0) from exc
    nodes = data.get("nodes")
    if not isinstance(nodes, list) or len(nodes) != len(diagram):
        raise ParseError(
            f"expected {len(diagram)} nodes", str(nodes)[:80], 0
        )
    painted = set()
    for pos, entry in enumerate(nodes):
        if not isinstance(entry, dict):
            raise ParseError("node entries must be objects", str(entry)[:80], pos)
        idx = entry.get("index")
        if idx != pos + 1:
            raise ParseError(f"node index must be {pos + 1}", str(idx), pos)
        if entry.get("kind") != diagram.nodes[pos].kind:
            raise ParseError(
                f"node {pos + 1} kind must be {diagram.nodes[pos].kind}",
                str(entry.get("kind")),
                pos,
            )
        if entry.get("painted"):
            painted.add(pos)
    arrows = data.get("arrows", [])
    perm = list(range(len(diagram)))
    for pair in arrows:
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(x, int) for x in pair)
        ):
            raise ParseError("arrows must be index pairs", str(pair), 0)
        i, j = pair[0] - 1, pair[1] - 1
        if not (0 <= i < len(diagram) and 0 <= j < len(diagram)):
            raise ParseError("arrow index out of range", str(pair), 0)
        perm[i], perm[j] = j, i
    involution = next(
        (g for g in automorphisms(diagram) if g.perm == tuple(perm)), None
    )
    if involution is None:
        raise ParseError(
            "arrows do not describe a diagram symmetry", str(arrows), 0
        )
    try:
        return VoganDiagram(diagram, involution, frozenset(painted))
    except BadIndex as exc:
        raise ParseError(str(exc), json.dumps(sorted(i + 1 for i in painted)), 0) from exc
