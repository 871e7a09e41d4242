import io
import json
from fractions import Fraction

import pytest

from strainkit import fieldio
from strainkit.connection import random_w_field, random_w_one_form
from strainkit.errors import FieldFormatError
from strainkit.fields import SymField, VecField, random_field
from strainkit.poly import X1, X2, Poly3

ALL_KINDS = ("scalar", "vec", "sym", "mat")


def test_round_trip_bit_exact():
    for kind in ALL_KINDS:
        for seed in range(6):
            f = random_field(kind, 4, seed)
            text = fieldio.dumps(f)
            back = fieldio.loads(text, expect_kind=kind)
            assert back == f
            assert fieldio.dumps(back) == text


def test_round_trip_coupled_kinds():
    for seed in range(4):
        w = random_w_field(3, seed)
        assert fieldio.loads(fieldio.dumps(w), expect_kind="w") == w
        psi = random_w_one_form(3, seed)
        assert fieldio.loads(fieldio.dumps(psi), expect_kind="wform") == psi


def test_document_shape():
    doc = fieldio.field_to_doc(VecField.of(X2, Poly3(), Poly3()))
    assert doc["kind"] == "vec"
    assert set(doc["components"]) == {"1", "2", "3"}
    assert doc["components"]["1"] == [{"exp": [0, 1, 0], "coef": "1"}]
    assert doc["components"]["2"] == []


def test_terms_sorted_ascending():
    p = X1 * X1 + X2 + Fraction(1, 3)
    doc = fieldio.field_to_doc(p)
    exps = [tuple(t["exp"]) for t in doc["components"][""]]
    assert exps == [(0, 0, 0), (0, 1, 0), (2, 0, 0)]


def test_coefficients_are_exact_strings():
    p = Fraction(-7, 12) * X1
    doc = fieldio.field_to_doc(p)
    assert doc["components"][""][0]["coef"] == "-7/12"


def test_sym_stores_upper_triangle_only():
    s = SymField.unit(1, 3, X1)
    doc = fieldio.field_to_doc(s)
    assert set(doc["components"]) == {"11", "12", "13", "22", "23", "33"}
    assert doc["components"]["13"] == [{"exp": [1, 0, 0], "coef": "1"}]


def test_save_load_file_objects():
    f = random_field("mat", 3, 99)
    buf = io.StringIO()
    fieldio.save(f, buf)
    buf.seek(0)
    assert fieldio.load(buf, expect_kind="mat") == f


def test_kind_mismatch_raises():
    text = fieldio.dumps(random_field("vec", 2, 0))
    with pytest.raises(FieldFormatError):
        fieldio.loads(text, expect_kind="sym")


def test_unknown_kind_raises():
    with pytest.raises(FieldFormatError):
        fieldio.field_from_doc({"kind": "tensor", "components": {}})


def test_unknown_component_key_raises():
    with pytest.raises(FieldFormatError):
        fieldio.field_from_doc({"kind": "vec", "components": {"4": []}})


def test_bad_exponent_raises():
    doc = {"kind": "scalar", "components": {"": [{"exp": [1, 2], "coef": "1"}]}}
    with pytest.raises(FieldFormatError):
        fieldio.field_from_doc(doc)
    doc = {"kind": "scalar", "components": {"": [{"exp": [1, -2, 0], "coef": "1"}]}}
    with pytest.raises(FieldFormatError):
        fieldio.field_from_doc(doc)


def test_bad_coefficient_raises():
    for bad in ("0.5", "1e3", "", "1/0", 2):
        doc = {"kind": "scalar",
               "components": {"": [{"exp": [0, 0, 0], "coef": bad}]}}
        with pytest.raises(FieldFormatError):
            fieldio.field_from_doc(doc)


def test_duplicate_exponent_raises():
    doc = {"kind": "scalar", "components": {"": [
        {"exp": [1, 0, 0], "coef": "1"}, {"exp": [1, 0, 0], "coef": "2"}]}}
    with pytest.raises(FieldFormatError):
        fieldio.field_from_doc(doc)


def test_missing_components_mean_zero():
    f = fieldio.field_from_doc({"kind": "vec", "components": {
        "2": [{"exp": [0, 0, 1], "coef": "3/2"}]}})
    assert f.comp(1).is_zero()
    assert f.comp(2) == Fraction(3, 2) * Poly3.variable(3)
    assert f.comp(3).is_zero()


def test_not_json_raises_field_format_error():
    # JSON problems surface through the same exception as format problems
    with pytest.raises(FieldFormatError):
        fieldio.loads("{broken", expect_kind="vec")


def test_all_keys_always_emitted():
    doc = fieldio.field_to_doc(VecField.zero())
    assert sorted(doc["components"]) == ["1", "2", "3"]
    assert all(v == [] for v in doc["components"].values())
