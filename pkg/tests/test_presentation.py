import pytest
from hypothesis import given, strategies as st

from braidfss.catalog import builtin
from braidfss.errors import ParseError, ValidationError
from braidfss.presentation import (
    DUPLICATE_LEFT, LEFT_NOT_SINGLE, RIGHT_TOO_SHORT, Presentation, format_presentation,
    parse_presentation, validate_tree_like,
)


def test_parse_thompson():
    p = parse_presentation("gen: x\nrel: x -> x x")
    assert p.generators == ("x",)
    assert p.relations == ((("x",), ("x", "x")),)


def test_parse_qaut_keeps_orders():
    p = parse_presentation("# quasi-automorphisms\ngen: a x\nrel: x -> x a x  # break at root\n")
    assert p.generators == ("a", "x")
    assert p.relations == ((("x",), ("x", "a", "x")),)
    assert p == builtin("qaut")[0]


@pytest.mark.parametrize("text, message", [
    ("gen: x\nrel: x ->", "empty right side"),
    ("gen: x\nrel: -> x", "empty left side"),
    ("gen: x\nrel: x -> y", "undeclared generator"),
    ("rel: x -> x x", "before 'gen:'"),
    ("gen: x eps", "bad generator token"),
    ("gen: x\nfoo: bar", "expected 'gen:' or 'rel:'"),
    ("gen: x\nrel: x x x", "exactly one '->'"),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_presentation(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_presentation("gen: a b\n\nrel: a -> a  c")
    assert err.value.line == 3
    assert err.value.column == 14


def test_constructor_rejects_undeclared():
    with pytest.raises(ValidationError):
        Presentation(("x",), [(("x",), ("y",))])


def test_serialization_is_canonical():
    p = parse_presentation("gen:   a    r x1\n rel:  r ->  x1   a\n")
    assert format_presentation(p) == "gen: a r x1\nrel: r -> x1 a\n"


def test_tree_like_examples():
    assert validate_tree_like(builtin("thompson", d=2)[0]).is_tree_like
    assert validate_tree_like(parse_presentation(
        "gen: a r x1 x2\nrel: r -> x1 x2\nrel: x1 -> a x1\nrel: x2 -> a x2")).is_tree_like
    r = validate_tree_like(parse_presentation("gen: x\nrel: x x -> x"))
    assert not r.is_tree_like and (0, LEFT_NOT_SINGLE) in r.violations
    r = validate_tree_like(parse_presentation("gen: x y\nrel: x -> x y\nrel: x -> y x"))
    assert r.violations == ((1, DUPLICATE_LEFT),)
    r = validate_tree_like(parse_presentation("gen: x y\nrel: x -> y"))
    assert r.violations == ((0, RIGHT_TOO_SHORT),)


names = st.sampled_from(["a", "b", "c", "x1", "y_2"])
words = st.lists(names, min_size=1, max_size=4).map(tuple)
presentations = st.lists(st.tuples(words, words), max_size=5).map(
    lambda rels: Presentation(("a", "b", "c", "x1", "y_2"), rels))


@given(presentations)
def test_round_trip(p):
    text = format_presentation(p)
    assert parse_presentation(text) == p
    assert format_presentation(parse_presentation(text)) == text


@given(presentations, st.randoms(use_true_random=False))
def test_verdict_is_order_independent(p, rnd):
    rels = list(p.relations)
    rnd.shuffle(rels)
    q = Presentation(p.generators, rels)
    assert validate_tree_like(p).is_tree_like == validate_tree_like(q).is_tree_like
    assert report_codes(p) == report_codes(q)


def report_codes(p):
    return sorted(code for _, code in validate_tree_like(p).violations if code != DUPLICATE_LEFT)
