"""Input format: parsing, canonical printing, round trips, and errors."""

import pytest

from cmwb import parse_field, parse_input, format_input
from cmwb.inputfmt import InputFormatError

SAMPLE = """
# comment line
field q
vars x y
ideal x*y

module M gens 2
rel x, -y
end

sequence s: x + y, x^2

pair p
field q
vars x
gens 1
rel x
end
"""


def test_parse_sample():
    wi = parse_input(SAMPLE)
    assert wi.ring is not None
    assert [str(g) for g in wi.ring.ideal_gens] == ["x*y"]
    assert set(wi.modules) == {"M"}
    assert wi.modules["M"].gens == 2
    assert [str(t) for t in wi.sequences["s"]] == ["x + y", "x^2"]
    ring, mod = wi.pairs["p"]
    assert ring.poly_ring.variables == ("x",)
    assert mod.gens == 1


def test_roundtrip():
    wi = parse_input(SAMPLE)
    text = format_input(wi)
    wi2 = parse_input(text)
    assert format_input(wi2) == text
    assert wi2.ring == wi.ring
    assert wi2.modules["M"].same_presentation(wi.modules["M"])
    assert wi2.sequences["s"] == wi.sequences["s"]


def test_field_override():
    wi = parse_input(SAMPLE, field_override=parse_field("p:7"))
    assert wi.ring.poly_ring.field.p == 7
    ring, _ = wi.pairs["p"]
    assert ring.poly_ring.field.p == 7


def test_order_directive():
    wi = parse_input("field q\nvars x y\norder lex\n")
    assert wi.ring.poly_ring.order.kind == "lex"


def test_errors():
    with pytest.raises(InputFormatError):
        parse_input("vars x\nsequence s: x\n")          # no field
    with pytest.raises(InputFormatError):
        parse_input("field q\nvars x\nmodule M gens 1\nrel x\n")  # no end
    with pytest.raises(InputFormatError):
        parse_input("field q\nvars x\nmodule M gens 2\nrel x\nend\n")  # arity
    with pytest.raises(InputFormatError):
        parse_input("bogus directive\n")
    with pytest.raises(ValueError):
        parse_input("field q\nvars x\nsequence s: x + w\n")  # unknown variable


def test_sequences_reduced_on_parse():
    wi = parse_input("field q\nvars x y\nideal x*y\nsequence s: x*y + x\n")
    assert [str(t) for t in wi.sequences["s"]] == ["x"]
