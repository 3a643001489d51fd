import json

import pytest
from hypothesis import given, settings, strategies as st

from hopfpi.errors import InputError
from hopfpi.gallery import load, names, text
from hopfpi.groups import catalog_gradings, trivial_grading, trivial_group
from hopfpi.hopf import group_algebra
from hopfpi.io import FORMAT_VERSION, dump, dumps, parse_document, same_canonical, to_document
from hopfpi.io import load as load_file
from hopfpi.linalg import GF

from conftest import algebra


def _doc(payload, kind="hopf_pi_algebra", field="QQ"):
    return json.dumps({"format_version": FORMAT_VERSION, "field": field, "kind": kind, "payload": payload})


def test_minimal_document():
    H = group_algebra(trivial_grading(trivial_group()))
    doc = parse_document(dump("hopf_pi_algebra", H))
    assert doc.kind == "hopf_pi_algebra"
    assert doc.payload.same_structure(H)


@pytest.mark.parametrize("name", names())
def test_gallery_roundtrip_is_byte_identical(name):
    doc = parse_document(text(name))
    assert dumps(doc) == text(name)


def test_gf_roundtrip():
    H = group_algebra(catalog_gradings("S3")["sign"], GF(5))
    body = dump("hopf_pi_algebra", H)
    assert '"GF(5)"' in body
    assert parse_document(body).payload.same_structure(H)


def _mutated(name, edit):
    raw = json.loads(text(name))
    edit(raw)
    return json.dumps(raw)


def test_zero_denominator_rejected():
    def edit(raw):
        raw["payload"]["counit"][0][0] = "1/0"
    with pytest.raises(InputError, match="counit"):
        parse_document(_mutated("hopf_z2_trivial.json", edit))


def test_float_rejected():
    body = _mutated("hopf_z2_trivial.json", lambda r: r["payload"]["counit"][0].__setitem__(0, "@"))
    body = body.replace('"@"', "1.0")
    with pytest.raises(InputError, match="non-exact"):
        parse_document(body)


def test_unknown_key_and_kind():
    with pytest.raises(InputError):
        parse_document(_mutated("hopf_z2_trivial.json", lambda r: r["payload"].update(extra=1)))
    with pytest.raises(InputError, match="kind"):
        parse_document(_mutated("hopf_z2_trivial.json", lambda r: r.update(kind="monoid")))
    with pytest.raises(InputError, match="version"):
        parse_document(_mutated("hopf_z2_trivial.json", lambda r: r.update(format_version="9")))


def test_duplicate_key_rejected():
    body = '{"kind": "group", "kind": "group", "field": "QQ", "format_version": "1", "payload": {}}'
    with pytest.raises(InputError, match="duplicate"):
        parse_document(body)


def test_syntax_error_position():
    with pytest.raises(InputError, match="line 2 column"):
        parse_document('{\n  "kind": }')


def test_shape_error_has_path():
    def edit(raw):
        raw["payload"]["dims"] = [3]
    with pytest.raises(InputError):
        parse_document(_mutated("hopf_z2_trivial.json", edit))


def test_missing_file(tmp_path):
    with pytest.raises(InputError, match="cannot read"):
        load_file(tmp_path / "nope.json")


def test_s3_fixture_parses():
    H = load("hopf_s3_sign.json")
    assert H.dims == (3, 3)
    assert same_canonical("hopf_pi_algebra", H, algebra("S3", "sign"))


@given(st.sampled_from(names()))
@settings(max_examples=20, deadline=None)
def test_reencode_is_stable(name):
    doc = parse_document(text(name))
    again = parse_document(dumps(to_document(doc.kind, doc.payload)))
    assert dumps(again) == text(name)
