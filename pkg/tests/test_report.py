import io
import json

import pytest
from hypothesis import given, strategies as st

from repvar.report import ReportDocument, dumps, format_float, write_csv

finite = st.floats(allow_nan=False, allow_infinity=False)


@given(finite)
def test_float_round_trip(x):
    s = format_float(x)
    y = json.loads(s)
    assert isinstance(y, float) and y == x


def test_float_formatting_fixed_precision():
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(1.0) == "1.0"
    with pytest.raises(ValueError):
        format_float(float("inf"))


json_values = st.recursive(
    st.none() | st.booleans() | st.integers(-10**6, 10**6) | finite | st.text(max_size=5),
    lambda kids: st.lists(kids, max_size=4) | st.dictionaries(st.text(max_size=5), kids, max_size=4),
    max_leaves=20,
)


@given(json_values)
def test_dumps_is_valid_json(obj):
    assert json.loads(dumps(obj)) == obj


@given(st.dictionaries(st.text(max_size=5), json_values, max_size=4), st.integers())
def test_document_round_trip(payload, seed):
    doc = ReportDocument("0.1.0", "count", {"p": 2, "t": 3}, payload, seed, {"residual": 1e-8})
    text = doc.to_text()
    back = ReportDocument.from_text(text)
    assert back == doc
    assert back.to_text() == text


def test_keys_sorted_and_generators_stream():
    doc = ReportDocument("0.1.0", "table", {}, {"z": 1, "rows": ({"b": i, "a": i} for i in range(3))})
    text = doc.to_text()
    assert text.index('"command"') < text.index('"payload"') < text.index('"tool_version"')
    assert json.loads(text)["payload"]["rows"] == [{"a": i, "b": i} for i in range(3)]


def test_csv_blank_and_bool_cells():
    buf = io.StringIO()
    write_csv(buf, ["a", "b", "c"], [{"a": 1, "b": None, "c": True}, {"a": 0.5, "b": 2, "c": False}])
    assert buf.getvalue() == "a,b,c\n1,,true\n0.5,2,false\n"
