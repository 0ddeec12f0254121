import json
from pathlib import Path

import pytest

from pmx import catalog as C
from pmx import io
from pmx import premaniplex as P
from pmx import voltage as V
from pmx.io import PmxFormatError, PmxValidationError

GOLDEN = Path(__file__).parent / "golden"


def test_one_vertex_document():
    X = io.parse_pmx('{"rank": 3, "vertex_count": 1, "adjacency": [[0], [0], [0]]}')
    assert X == C.one_vertex_premaniplex(3)


def test_medial_document_matches_catalog():
    doc = {
        "format_version": 1,
        "kind": "operator",
        "rank": 3,
        "in_rank": 3,
        "vertex_count": 2,
        "adjacency": [[0, 1], [0, 1], [1, 0]],
        "voltages": [[[1], [1]], [[0], [2]], [[], []]],
    }
    assert io.parse_pmx(json.dumps(doc)) == C.medial()
    assert io.write_pmx(C.medial()) == (GOLDEN / "medial_operator.pmx").read_text()


def test_errors_name_the_color():
    with pytest.raises(PmxValidationError, match="color 0"):
        io.parse_pmx('{"rank": 3, "vertex_count": 2, "adjacency": [[1, 1], [0, 1], [1, 0]]}')
    with pytest.raises(PmxValidationError, match="color 1: involution"):
        io.parse_pmx('{"rank": 2, "vertex_count": 3, "adjacency": [[0, 1, 2], [1, 2, 0]]}')
    with pytest.raises(PmxValidationError, match=r"colors \(0, 2\): commuting"):
        io.parse_pmx('{"rank": 3, "vertex_count": 4, "adjacency": [[1,0,3,2],[0,1,2,3],[2,1,0,3]]}')


def test_operator_errors():
    doc = io.to_document(C.medial())
    doc["voltages"][1][0] = [0, 1]
    with pytest.raises(PmxValidationError, match="inverse"):
        io.from_document(doc)
    doc = io.to_document(C.medial())
    doc["voltages"][0][0] = [7]
    with pytest.raises(PmxValidationError, match="r_7"):
        io.from_document(doc)
    doc = io.to_document(C.medial())
    del doc["in_rank"]
    with pytest.raises(PmxFormatError, match="in_rank"):
        io.from_document(doc)


def test_format_errors():
    with pytest.raises(PmxFormatError, match="line 2"):
        io.parse_pmx('{"rank": 3,\n "vertex_count": }')
    with pytest.raises(PmxFormatError, match="adjacency"):
        io.parse_pmx('{"rank": 2, "vertex_count": 2, "adjacency": [[1, 0]]}')
    with pytest.raises(PmxFormatError, match="adjacency"):
        io.parse_pmx('{"rank": 1, "vertex_count": 2, "adjacency": [[1, "0"]]}')
    with pytest.raises(PmxFormatError, match="kind"):
        io.parse_pmx('{"kind": "polytope", "rank": 1, "vertex_count": 1, "adjacency": [[0]]}')
    with pytest.raises(PmxFormatError, match="format_version"):
        io.parse_pmx('{"format_version": 9, "rank": 1, "vertex_count": 1, "adjacency": [[0]]}')
    with pytest.raises(PmxFormatError, match="rank"):
        io.parse_pmx('{"vertex_count": 1, "adjacency": [[0]]}')
    with pytest.raises(PmxFormatError):
        io.parse_pmx("[1, 2]")


def test_round_trips():
    objs = [
        C.polyhedron("cube"),
        C.snub(),
        C.pyramid(3),
        C.pyramid_stg_voltage(4),
        P.Premaniplex([[1, 0]], labels=["a", "b"]),
    ]
    for obj in objs:
        text = io.write_pmx(obj)
        back = io.parse_pmx(text)
        assert io.write_pmx(back) == text
    xp = io.parse_pmx(io.write_pmx(objs[3]))
    assert (xp.volt == objs[3].volt).all()
    assert io.parse_pmx(io.write_pmx(objs[4])).labels == ("a", "b")


def test_fin_voltage_validation_on_load():
    doc = io.to_document(C.pyramid_stg_voltage(3))
    doc["voltages"][0][0] = list(reversed(doc["voltages"][0][0]))
    with pytest.raises(PmxValidationError, match="voltage colors"):
        io.from_document(doc)


def test_save_is_atomic(tmp_path):
    path = tmp_path / "x.pmx"
    io.save(C.polygon(3), path)
    assert io.load(path) == C.polygon(3)
    assert [p.name for p in tmp_path.iterdir()] == ["x.pmx"]
    with pytest.raises(TypeError):
        io.save(object(), tmp_path / "y.pmx")
    assert [p.name for p in tmp_path.iterdir()] == ["x.pmx"]


def test_dot_one_vertex():
    text = io.export_dot(C.one_vertex_premaniplex(3))
    assert text.count("[label=") == 1
    assert text.count("shape=point") == 3
    for color in ("red", "green", "blue"):
        assert f"color={color}" in text


def test_dot_two_orbit():
    text = io.export_dot(C.two_orbit_premaniplex(3))
    assert text.count("v0 -- v1") == 3
    assert "shape=point" not in text


def test_dot_medial_golden():
    text = io.export_dot(C.medial())
    assert text == (GOLDEN / "medial.dot").read_text()
    for lab in ('label="r1"', 'label="r0"', 'label="r2"'):
        assert lab in text


def test_dot_palette_beyond_three_colors():
    text = io.export_dot(C.pyramid(3).Y)
    assert "color=orange" in text
    assert io.color_name(13) == io.PALETTE[3]


def test_dot_fin_voltage_labels():
    text = io.export_dot(C.pyramid_stg_voltage(3))
    assert 'label="(' in text
