import json

import pytest
from hypothesis import given, settings, strategies as st

from paleyclique.errors import ParseError
from paleyclique.gf_ext import make_extension
from paleyclique.records import OutputRecord, decode_display, decode_set, encode_set
from paleyclique.textio import format_element, parse_element, parse_set


def test_format_examples():
    E = make_extension(29)
    assert format_element(E.element(E.base(-3), 2)) == "-3+2*a"
    assert format_element(E.element(0, 14)) == "14*a"
    assert format_element(E.element(0, 28)) == "-a"
    assert format_element(E.zero) == "0"
    assert format_element(E.element(26, 2), symmetric=False) == "26+2*a"


def test_parse_forms():
    E = make_extension(29)
    g = E.element(26, 2)
    for text in ("-3+2*a", "26+2*a", " -3 + 2*α ", "2*a-3", "-32+2a"):
        assert parse_element(E, text) == g
    assert parse_element(E, "-a") == E.element(0, 28)
    assert parse_set(E, "{1, a, 0}") == [E.one, E.alpha, E.zero]


@pytest.mark.parametrize("bad", ["", "x", "1+*a", "3**a", "1++2", "*a"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_element(make_extension(29), bad)


def test_parse_code_range_for_prime_power():
    E = make_extension(9)
    assert parse_element(E, "8+5*a") == E.element(8, 5)
    with pytest.raises(ParseError):
        parse_element(E, "9")


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([3, 9, 25, 27, 29, 31, 81]), st.data(), st.booleans())
def test_text_roundtrip(q, data, symmetric):
    E = make_extension(q)
    g = E.from_index(data.draw(st.integers(0, E.size - 1)))
    assert parse_element(E, format_element(g, symmetric)) == g


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([9, 29, 31]), st.data())
def test_record_roundtrip(q, data):
    E = make_extension(q)
    S = {E.from_index(i) for i in data.draw(st.sets(st.integers(0, E.size - 1), max_size=10))}
    rec = OutputRecord.for_field(E, "construct", {"set": encode_set(S)})
    back = OutputRecord.from_json(rec.to_json())
    assert back == rec
    assert set(decode_set(E, back.payload["set"])) == S
    assert set(decode_display(E, back.payload["set"])) == S


def test_record_fields_and_version():
    E = make_extension(29)
    doc = json.loads(OutputRecord.for_field(E, "field").to_json())
    assert doc["q"] == 29 and doc["d"] == 2 and doc["irreducible"] == [0, 1]
    assert doc["beta"] == [E.beta.x, E.beta.y]
    doc["schema_version"] = 99
    with pytest.raises(ValueError):
        OutputRecord.from_json(json.dumps(doc))
