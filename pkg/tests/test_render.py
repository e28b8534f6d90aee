"""ASCII and DOT rendering, JSON documents, and the document parser."""

import json
from fractions import Fraction

import pytest

from supervogan import (
    FamilyId,
    ParseError,
    VoganDiagram,
    automorphisms,
    build_diagram,
    document_json,
    emit_document,
    identity_involution,
    parse_document,
    render_ascii,
    render_dot,
)

Q = Fraction


def vd_of(fam, painted=(), inv_name="identity"):
    diagram = build_diagram(fam)
    inv = next(g for g in automorphisms(diagram) if g.name == inv_name)
    return VoganDiagram(diagram, inv, frozenset(painted))


# ------------------------------------------------------------------- ascii


def test_ascii_linear_diagrams():
    assert render_ascii(vd_of(FamilyId("A", 1, 1))) == "o---(x)---o"
    assert render_ascii(vd_of(FamilyId("B", 1, 1))) == "(x)=>o"
    assert render_ascii(vd_of(FamilyId("B0", 0, 3))) == "o---o=>(*)"
    assert render_ascii(vd_of(FamilyId("B0", 0, 1))) == "(*)"
    assert render_ascii(vd_of(FamilyId("C", 0, 3))) == "(x)---o---o<=o"
    assert render_ascii(vd_of(FamilyId("F4"))) == "(x)---o<=o---o"
    assert render_ascii(vd_of(FamilyId("G3"))) == "(x)---o<<=o"


def test_ascii_painted_glyph():
    assert render_ascii(vd_of(FamilyId("A", 1, 1), painted={0})) == "*---(x)---o"
    assert render_ascii(vd_of(FamilyId("C", 0, 3), painted={1, 3})) == "(x)---*---o<=*"


def test_ascii_d_fork():
    text = render_ascii(vd_of(FamilyId("D", 3, 2), painted={2}))
    assert text == (
        "            o\n"
        "           /\n"
        "o---(x)---*\n"
        "           \\\n"
        "            o"
    )


def test_ascii_involution_annotation():
    text = render_ascii(vd_of(FamilyId("D", 3, 2), inv_name="swap"))
    assert text.endswith("4 <--> 5")
    text = render_ascii(vd_of(FamilyId("A", 2, 2), inv_name="reversal"))
    assert "1 <--> 5" in text and "2 <--> 4" in text


def test_ascii_d21_fork():
    text = render_ascii(vd_of(FamilyId("D21alpha", alpha=Q(-1, 2)), painted={0, 3}))
    assert text == (
        "        o\n"
        "       /\n"
        "*---(x)\n"
        "       \\\n"
        "        *"
    )


# --------------------------------------------------------------------- dot


def _parse_dot(text):
    """Tiny structural reader for the DOT we emit."""
    lines = text.strip().splitlines()
    assert lines[0].startswith("strict graph ") and lines[0].endswith(" {")
    assert lines[-1] == "}"
    nodes, edges = {}, []
    for line in lines[1:-1]:
        line = line.strip().rstrip(";")
        if line.startswith("node "):
            continue
        if " -- " in line:
            pair, _, attrs = line.partition(" [")
            a, b = pair.split(" -- ")
            edges.append((a, b, attrs.rstrip("]")))
        else:
            name, _, attrs = line.partition(" [")
            nodes[name] = attrs.rstrip("]")
    return nodes, edges


def test_dot_structure():
    text = render_dot(vd_of(FamilyId("B", 1, 1), painted={1}))
    nodes, edges = _parse_dot(text)
    assert set(nodes) == {"n1", "n2"}
    assert 'kind="odd_isotropic"' in nodes["n1"]
    assert 'painted="true"' in nodes["n2"] and 'style="filled"' in nodes["n2"]
    assert len(edges) == 1
    a, b, attrs = edges[0]
    assert {a, b} == {"n1", "n2"} and 'label="2"' in attrs


def test_dot_involution_edges():
    text = render_dot(vd_of(FamilyId("A", 2, 2), inv_name="reversal"))
    nodes, edges = _parse_dot(text)
    inv_edges = [(a, b) for a, b, attrs in edges if 'role="involution"' in attrs]
    assert sorted(inv_edges) == [("n1", "n5"), ("n2", "n4")]
    for a, b, attrs in edges:
        if 'role="involution"' in attrs:
            assert 'style="dashed"' in attrs


def test_dot_custom_graph_name():
    text = render_dot(vd_of(FamilyId("G3")), name="diagram7")
    assert text.startswith("strict graph diagram7 {")


# -------------------------------------------------------------------- json


def test_document_shape():
    doc = emit_document(vd_of(FamilyId("D", 3, 2), painted={2}, inv_name="swap"))
    assert doc["schema_version"] == "1"
    assert doc["family"] == {"kind": "D", "m": 3, "n": 2}
    assert [n["index"] for n in doc["nodes"]] == [1, 2, 3, 4, 5]
    assert doc["nodes"][2]["painted"] is True
    assert doc["arrows"] == [[4, 5]]


def test_document_alpha_serialized_as_string():
    doc = emit_document(vd_of(FamilyId("D21alpha", alpha=Q(-1, 2))))
    assert doc["family"]["alpha"] == "-1/2"


def test_roundtrip():
    cases = [
        vd_of(FamilyId("D", 3, 2), painted={2}, inv_name="swap"),
        vd_of(FamilyId("D21alpha", alpha=Q(-1, 2)), painted={0, 3}),
        vd_of(FamilyId("A", 2, 2), inv_name="reversal"),
        vd_of(FamilyId("B0", 0, 3)),
    ]
    for v in cases:
        assert parse_document(document_json(v)) == v
        assert parse_document(emit_document(v)) == v


def test_document_json_carries_realform_and_trail():
    from supervogan import classify, reduce_with_trail

    v = vd_of(FamilyId("A", 3, 0), painted={0, 2})
    reduced, trail = reduce_with_trail(v)
    desc = classify(v)
    payload = json.loads(
        document_json(
            reduced,
            realform={"name": desc.super_name},
            trail=trail,
        )
    )
    assert payload["realform"]["name"] == desc.super_name
    assert payload["trail"] == [1, 2]


@pytest.mark.parametrize(
    "mangle",
    [
        lambda d: d.__setitem__("schema_version", "9"),
        lambda d: d.__setitem__("family", {"kind": "Z", "m": 1, "n": 1}),
        lambda d: d["nodes"].pop(),
        lambda d: d["nodes"][0].__setitem__("kind", "spooky"),
        lambda d: d["nodes"][0].__setitem__("index", 7),
        lambda d: d.__setitem__("arrows", [[1, 2]]),
        lambda d: d["nodes"][2].__setitem__("painted", True),  # the odd node
        lambda d: d.__setitem__("arrows", [[1]]),
        lambda d: d.__setitem__("arrows", [[1, 99]]),
    ],
)
def test_parse_document_rejects_mangled_documents(mangle):
    doc = emit_document(vd_of(FamilyId("A", 2, 1), painted={0}))
    mangle(doc)
    with pytest.raises(ParseError):
        parse_document(doc)


def test_parse_document_rejects_bad_json_text():
    with pytest.raises(ParseError):
        parse_document("{not json")


def test_parse_document_maps_arrows_to_named_involution():
    v = vd_of(FamilyId("A", 2, 2), inv_name="reversal")
    parsed = parse_document(emit_document(v))
    assert parsed.involution.name == "reversal"
