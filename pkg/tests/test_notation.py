import pytest
from hypothesis import given

import oracles
from strategies import coeff_lists, ordinals
from wellordered import (OMEGA, Ordinal, OrdinalDepthError, OrdinalSyntaxError, parse, render)


@pytest.mark.parametrize("text,expected", [
    ("w^2*3+w+5", "w^2*3+w+5"),
    ("1+w", "w"),
    ("w*2+w", "w*3"),
    ("  w ^ 2 ", "w^2"),
    ("w^w^2", "w^w^2"),
    ("w^(w^2)", "w^w^2"),
    ("(w+1)*w", "w^2"),
    ("w^(w+1)*2+w^5", "w^(w+1)*2+w^5"),
    ("0", "0"),
    ("007", "7"),
])
def test_parse_examples(text, expected):
    assert render(parse(text)) == expected


def test_render_examples():
    assert render(Ordinal(0)) == "0"
    assert render(OMEGA) == "w"
    assert render(parse("w^2*3+w+5"), unicode=True) == "ω²·3+ω+5"
    assert str(parse("w^w")) == "w^w"


@pytest.mark.parametrize("text,pos", [
    ("", 0),
    ("w+", 2),
    ("w^", 2),
    ("2x", 1),
    ("(w+1", 4),
    ("w**2", 2),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(OrdinalSyntaxError) as info:
        parse(text)
    assert info.value.position == pos
    assert info.value.expected


def test_depth_limit():
    deep = "w^(" * 70 + "1" + ")" * 70
    with pytest.raises(OrdinalDepthError):
        parse(deep)
    assert parse("w^(" * 10 + "1" + ")" * 10).depth == 11


@given(ordinals(max_depth=4))
def test_round_trip(a):
    assert parse(render(a)) == a
    assert render(parse(render(a))) == render(a)


@given(coeff_lists)
def test_render_matches_oracle(c):
    assert render(Ordinal.from_terms(oracles.to_terms(c))) == oracles.render(c)
