from itertools import product

import pytest
from hypothesis import given, strategies as st

from qlie.basis import (UNIT, Element, Gen, ParseError, deglex_key, eta_default, extend_bilinear,
                        gen_compare, generators, is_sorted_word, make_gen, parse_element, render,
                        sorted_words, word_eta)
from qlie.scalars import LScalar, Q, Q_MINUS_QINV, QScalar


def test_generator_count_and_order():
    for n in range(1, 6):
        gs = generators(n)
        assert len(gs) == n * (n + 1) // 2
        assert gs == sorted(gs)


def test_order_is_total_and_matches_key_exhaustively():
    gs = generators(4)
    for a, b in product(gs, repeat=2):
        expected = (a.i + a.j, a.j) > (b.i + b.j, b.j)
        assert (a > b) == expected
        assert gen_compare(a, b) == (1 if a > b else -1 if a < b else 0)
        assert gen_compare(a, b) == -gen_compare(b, a)
        assert (gen_compare(a, b) == 0) == (a == b)


def test_order_examples_and_unit():
    assert make_gen(1, 2, 2) < make_gen(1, 3, 2) < make_gen(2, 3, 2)
    assert make_gen(1, 4, 3) > make_gen(2, 3, 3)
    assert all(UNIT < g for g in generators(3))
    assert UNIT.is_unit and not make_gen(1, 2, 1).is_unit
    assert str(UNIT) == "1" and str(make_gen(2, 4, 3)) == "e(2,4)"


def test_make_gen_bounds():
    with pytest.raises(IndexError):
        make_gen(1, 4, 2)
    with pytest.raises(IndexError):
        make_gen(2, 2, 3)
    with pytest.raises(IndexError):
        make_gen(0, 1, 3)


def test_eta_default_against_width():
    for g in generators(5):
        assert eta_default(g) == g.j - g.i + 1
    w = (make_gen(1, 2, 3), make_gen(1, 4, 3))
    assert word_eta(w, eta_default) == 2 + 4
    assert word_eta((), eta_default) == 0


def test_sorted_words_and_deglex():
    gs = generators(2)
    assert len(list(sorted_words(gs, 3))) == 10
    assert all(is_sorted_word(w) for w in sorted_words(gs, 3))
    a, b = gs[0], gs[1]
    assert not is_sorted_word((b, a))
    assert deglex_key((b,)) < deglex_key((a, a))


def test_element_arithmetic():
    e12, e23 = make_gen(1, 2, 2), make_gen(2, 3, 2)
    x = Element.word((e12,)) + Element.word((e23,), Q)
    assert x - x == Element()
    assert (x * Element.word((e12,))).coeff((e23, e12)) == Q
    assert x.scale(QScalar.const(2)).coeff((e12,)) == 2
    assert Element({(e12,): 0}) == Element()


def test_render_examples():
    n = 3
    e = lambda i, j: make_gen(i, j, n)
    x = Element({(e(1, 2), e(2, 3)): Q, (e(1, 3),): -Q})
    assert render(x) == "q*e(1,2)*e(2,3) - q*e(1,3)"
    y = Element({(e(1, 3), e(2, 4)): QScalar.const(1), (e(2, 3), e(1, 4)): -Q_MINUS_QINV})
    assert render(y) == "e(1,3)*e(2,4) - (q - q^-1)*e(2,3)*e(1,4)"
    assert render(Element()) == "0"
    assert render(Element.scalar(QScalar.const(3))) == "3"


def test_render_lambda_coefficients():
    e12 = make_gen(1, 2, 1)
    lam = LScalar.lam(1)
    x = Element({(e12, UNIT): lam * Q_MINUS_QINV, (UNIT, e12): LScalar.lift(Q)})
    assert render(x) == "q*1*e(1,2) + (lam*(q - q^-1))*e(1,2)*1"
    assert parse_element(render(x), 1, unit_marker=True) == x


def test_parse_examples():
    x = parse_element("e(2,3)*e(1,2) - q^-1*(q - 1)*e(1,3)", 2)
    e = lambda i, j: make_gen(i, j, 2)
    assert x.coeff((e(2, 3), e(1, 2))) == 1
    assert x.coeff((e(1, 3),)) == QScalar({0: -1, -1: 1})
    assert parse_element("2", 2) == Element.scalar(QScalar.const(2))
    assert parse_element("(1 + q)*1", 2) == Element.scalar(Q + 1)
    assert parse_element("e(1,2)*1", 2, unit_marker=True) == Element.word((e(1, 2), UNIT))


@pytest.mark.parametrize("text", ["e(2,1)", "e(1,5)", "e(1,2", "e(1,2)+", "", "x", "e(1,2) e(1,2)",
                                  "q^", "(e(1,2)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_element(text, 2)


def test_parse_error_position():
    with pytest.raises(ParseError) as ei:
        parse_element("e(1,2)*e(3,2)", 3)
    assert ei.value.pos == 7


GENS3 = generators(3)
coeffs = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), min_size=1, max_size=3).map(QScalar)
words = st.lists(st.sampled_from(GENS3), min_size=0, max_size=4).map(tuple)
elements = st.dictionaries(words, coeffs, max_size=5).map(Element)


@given(elements)
def test_render_parse_round_trip(x):
    assert parse_element(render(x), 3) == x


@given(elements, elements)
def test_extend_bilinear_is_linear(x, y):
    def rule(a, b):
        return Element({(b, a): Q, (a,): QScalar.const(2)})

    def longer(z):
        return Element({w: c for w, c in z.terms.items() if len(w) >= 2})

    x, y = longer(x), longer(y)
    assert extend_bilinear(rule, 1, x + y) == extend_bilinear(rule, 1, x) + extend_bilinear(rule, 1, y)


def test_extend_bilinear_positions():
    e12, e13, e23 = generators(2)
    flip = lambda a, b: Element.word((b, a))
    x = Element.word((e12, e13, e23))
    assert extend_bilinear(flip, 2, x) == Element.word((e12, e23, e13))
    with pytest.raises(ValueError):
        extend_bilinear(flip, 3, x)
    with pytest.raises(ValueError):
        extend_bilinear(flip, 1, Element.word((UNIT, e12)))
    assert extend_bilinear(flip, 1, Element.word((UNIT, e12)), unit_ok=True) == Element.word((e12, UNIT))


def test_gen_is_namedtuple():
    assert Gen(1, 2) == (1, 2)
