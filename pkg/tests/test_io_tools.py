import io
import json

import pytest

from MultiAdjointFCA.concepts import enumerateConcepts
from MultiAdjointFCA.context import MultiAdjointContext
from MultiAdjointFCA.errors import ParseError, SchemaError, TooSmall
from MultiAdjointFCA.io_spec import CONJUNCTOR_ATTRIBS, CONTEXT_ATTRIBS
from MultiAdjointFCA.io_tools import (clearMessages, conceptsDot, getMessages, hasseDot, loadContext, loadDocument,
                                      loadJson, loadLattice, validateAttribValue, validateDocument, writeOutput)
from MultiAdjointFCA.lattice import BoundedLattice


@pytest.fixture
def sigmaDoc(sigmaPath):
    with open(sigmaPath, encoding="utf-8") as f:
        return json.load(f)


def test_parse_error_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "elements": [\n}', encoding="utf-8")
    with pytest.raises(ParseError) as e:
        loadJson(str(path))
    assert (e.value.line, e.value.column) == (3, 1)
    assert "line 3, column 1" in str(e.value)


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        loadJson(str(tmp_path / "missing.json"))


def test_load_from_path_handle_and_stdin(sigmaPath, ninePath, monkeypatch):
    assert isinstance(loadDocument(sigmaPath), MultiAdjointContext)
    with open(ninePath, encoding="utf-8") as f:
        assert isinstance(loadDocument(f), BoundedLattice)
    monkeypatch.setattr("sys.stdin", io.StringIO('{"elements": ["0", "x", "1"], "covers": [["0", "x"], ["x", "1"]]}'))
    assert len(loadDocument("-")) == 3


def test_schema_messages(sigmaDoc):
    sigmaDoc['frame']['conjunctors'][0]['kind'] = "hamacher"
    sigmaDoc['frame']['grades'] = True
    sigmaDoc['color'] = "red"
    del sigmaDoc['sigma']
    with pytest.raises(SchemaError) as e:
        loadContext(sigmaDoc)
    assert set(e.value.witness) == {
        "Wrong data type for attribute 'frame:grades'. Expected int but got bool",
        f"Value error for attribute 'frame:conjunctors[0]:kind'. Got 'hamacher' but expected one of {CONJUNCTOR_ATTRIBS['kind']['c']}",
        "Attribute 'color' is unknown.",
        "Missing required attribute 'sigma'.",
    }


def test_matrix_and_label_checks(sigmaDoc):
    sigmaDoc['relation'] = sigmaDoc['relation'][:2]
    sigmaDoc['sigma'][1] = ["G"]
    sigmaDoc['objects'] = ["b1", "b1", "b3", "b4"]
    assert not validateDocument(sigmaDoc, CONTEXT_ATTRIBS)
    assert getMessages() == [
        "'objects' labels must be distinct",
        "'relation' must have 3 rows, got 2",
        "'sigma[1]' must be a list of 4 values",
    ]


def test_table_conjunctor_needs_table(sigmaDoc):
    sigmaDoc['frame']['conjunctors'].append({'name': "T", 'kind': "table"})
    assert not validateDocument(sigmaDoc, CONTEXT_ATTRIBS)
    assert getMessages() == ["Missing required attribute 'frame:conjunctors[2]:table' for kind 'table'."]


def test_conjunctor_items_must_be_objects(sigmaDoc):
    sigmaDoc['frame']['conjunctors'] = ["godel"]
    assert not validateDocument(sigmaDoc, CONTEXT_ATTRIBS)
    assert getMessages() == ["Item 'frame:conjunctors[0]' must be an object, got str"]


def test_lattice_document_checks():
    with pytest.raises(SchemaError) as e:
        loadLattice({'elements': ["0", "0", "1"], 'covers': []})
    assert e.value.witness == ["'elements' labels must be distinct"]
    with pytest.raises(SchemaError) as e:
        loadLattice({'elements': ["0", "x", "1"], 'covers': [["0"]]})
    assert e.value.witness == ["'covers[0]' must be a [lower, upper] pair"]
    with pytest.raises(SchemaError):
        loadDocument({'elements': "0x1", 'covers': []})
    # well-formed but not a lattice
    with pytest.raises(TooSmall):
        loadLattice({'elements': ["0", "1"], 'covers': [["0", "1"]]})


def test_validate_attrib_value():
    clearMessages()
    assert validateAttribValue('grades', 5, {'r': True, 't': int})
    assert not validateAttribValue('grades', None, {'r': True, 't': int}, "frame")
    assert not validateAttribValue('grades', "5", {'r': True, 't': int}, "frame")
    assert getMessages() == [
        "Missing required attribute 'frame:grades'.",
        "Wrong data type for attribute 'frame:grades'. Expected int but got str",
    ]
    clearMessages()
    assert getMessages() == []


def test_hasse_dot(nine):
    dot = hasseDot(nine)
    assert dot.startswith("digraph G {\n  rankdir=BT;")
    assert dot.count(" -> ") == 12
    assert '  "bot" -> "a";' in dot
    assert dot.endswith("}\n")


def test_concepts_dot(sigma):
    lat = enumerateConcepts(sigma)
    dot = conceptsDot(lat)
    assert dot.count(" -> ") == 9
    assert '  "C0" [tooltip="<{}, {a1/1, a2/1, a3/1}>"];' in dot
    assert '  "C7" [tooltip="<{b1/1, b2/1, b3/1, b4/1}, {}>"];' in dot


def test_write_output(tmp_path, capsys):
    path = tmp_path / "out.json"
    writeOutput('{"a": 1}', str(path))
    assert path.read_text(encoding="utf-8") == '{"a": 1}\n'
    writeOutput("text\n", "-")
    assert capsys.readouterr().out == "text\n"


def test_cover_labels_must_be_strings(ninePath):
    with open(ninePath, encoding="utf-8") as f:
        doc = json.load(f)
    doc['covers'][0] = [["x"], doc['covers'][0][1]]
    doc['covers'][1] = [3, doc['covers'][1][1]]
    with pytest.raises(SchemaError) as e:
        loadLattice(doc)
    assert e.value.witness == [
        "'covers[0]' must name two element labels",
        "'covers[1]' must name two element labels",
    ]
