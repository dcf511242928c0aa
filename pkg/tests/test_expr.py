import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualnum.dual import Dual
from dualnum.errors import DomainError, EvaluationError, ParseError
from dualnum.expr import (
    BinaryOp,
    Call,
    NumberLit,
    Token,
    UnaryNeg,
    Variable,
    eval_dual,
    free_variables,
    parse,
    parse_expression,
    to_source,
    tokenize,
)

from _oracles import CATALOG, close, fd, py_eval, random_composition


def kinds(src):
    return [(t.kind, t.lexeme) for t in tokenize(src)]


class TestTokenize:
    def test_call(self):
        assert kinds("x*sin(x)") == [
            ("identifier", "x"), ("star", "*"), ("identifier", "sin"),
            ("lparen", "("), ("identifier", "x"), ("rparen", ")"),
        ]

    @pytest.mark.parametrize("src, value", [
        ("1.5e-3", 0.0015), ("42", 42.0), ("3.", 3.0), (".25", 0.25), ("2E+2", 200.0), ("7e0", 7.0),
    ])
    def test_number(self, src, value):
        (tok,) = tokenize(src)
        assert tok.kind == "number" and float(tok.lexeme) == value

    def test_all_punctuation(self):
        assert [t.kind for t in tokenize("+-*/^(),")] == [
            "plus", "minus", "star", "slash", "caret", "lparen", "rparen", "comma",
        ]

    def test_positions_increase(self):
        toks = tokenize("  a1 +\tlog(10 ,  x_2)^2 ")
        positions = [t.position for t in toks]
        assert positions == sorted(set(positions))
        assert toks[0] == Token("identifier", "a1", 2)

    @pytest.mark.parametrize("src, pos", [("x $ y", 2), ("2 # 3", 2), ("sin(x)!", 6), ("é", 0)])
    def test_bad_character(self, src, pos):
        with pytest.raises(ParseError) as exc:
            tokenize(src)
        assert exc.value.position == pos


def ev(src, **b):
    return eval_dual(parse_expression(src), b)


class TestParse:
    @pytest.mark.parametrize("src, expected", [
        ("2+3*4", 14.0),
        ("(2+3)*4", 20.0),
        ("2^3^2", 512.0),
        ("(2^3)^2", 64.0),
        ("-2^2", -4.0),
        ("2^-1", 0.5),
        ("8/4/2", 1.0),
        ("8-4-2", 2.0),
        ("--3", 3.0),
        ("2*-3", -6.0),
    ])
    def test_precedence(self, src, expected):
        assert ev(src) == Dual(expected, 0.0)

    def test_unary_minus_below_power(self):
        node = parse_expression("-x^2")
        assert isinstance(node, UnaryNeg) and isinstance(node.child, BinaryOp)
        assert ev("-x^2", x=3.0).x == -9.0

    def test_tree_shape(self):
        node = parse_expression("1 + x*y")
        assert node == BinaryOp("+", NumberLit(1.0, 0), BinaryOp("*", Variable("x", 4), Variable("y", 6), 5), 2)

    def test_log_two_arguments(self):
        node = parse_expression("log(2, x)")
        assert isinstance(node, Call) and len(node.args) == 2

    @pytest.mark.parametrize("src, pos", [
        ("", 0),
        ("1 +", 3),
        ("(1 + 2", 6),
        ("1 + 2)", 5),
        ("foo(x)", 0),
        ("sin(x, 2)", 0),
        ("log(1, 2, 3)", 8),
        ("2 3", 2),
        ("*2", 0),
        ("x + + 1", 4),
        ("sin", 0),
        ("sin()", 4),
        ("exp(x", 5),
        ("+x", 0),
    ])
    def test_errors_carry_position(self, src, pos):
        with pytest.raises(ParseError) as exc:
            parse_expression(src)
        assert exc.value.position == pos
        assert 0 <= exc.value.position <= len(src)

    def test_parse_requires_tokens(self):
        with pytest.raises(ParseError):
            parse([])

    @given(st.text(alphabet="x1.+-*/^(),sinlog e", max_size=20))
    def test_error_positions_in_range(self, src):
        try:
            parse_expression(src)
        except ParseError as exc:
            assert 0 <= exc.position <= len(src)


class TestEval:
    def test_x_sin_x(self):
        r = ev("x*sin(x)", x=Dual(1.0, 1.0))
        assert r == Dual(math.sin(1), math.sin(1) + math.cos(1))

    def test_square_of_eps(self):
        assert ev("x^2", x=Dual(0.0, 1.0)) == Dual(0.0, 0.0)

    def test_dual_exponent_rejected(self):
        with pytest.raises(EvaluationError) as exc:
            ev("x^x", x=Dual(2.0, 1.0))
        assert exc.value.position == 1
        assert ev("x^x", x=Dual(2.0, 0.0)) == Dual(4.0, 0.0)

    def test_unbound(self):
        with pytest.raises(EvaluationError) as exc:
            ev("x + y", x=1.0)
        assert exc.value.position == 4

    def test_constants_and_shadowing(self):
        assert ev("pi").x == math.pi
        assert ev("e").x == math.e
        assert ev("pi", pi=3.0).x == 3.0

    def test_domain_error_has_position(self):
        with pytest.raises(DomainError) as exc:
            ev("1 + log(x)", x=Dual(-1.0, 1.0))
        assert exc.value.position == 4
        with pytest.raises(DomainError) as exc:
            ev("1/(x - 1)", x=Dual(1.0, 1.0))
        assert exc.value.position == 1

    def test_abs_and_conj(self):
        assert ev("abs(x)", x=Dual(-3.0, 5.0)) == Dual(-3.0, 0.0)
        assert ev("conj(x)", x=Dual(-3.0, 5.0)) == Dual(-3.0, -5.0)

    def test_log_base_form(self):
        r = ev("log(2, x)", x=Dual(8.0, 1.0))
        assert close(r.x, 3.0, 1e-15)
        with pytest.raises(DomainError):
            ev("log(x, 8)", x=Dual(2.0, 1.0))

    def test_cube_root_of_negative_via_power(self):
        r = ev("x^(1/3)", x=Dual(-8.0, 12.0))
        assert close(r.x, -2.0, 1e-15) and close(r.y, 1.0, 1e-15)

    def test_plain_real_bindings(self):
        assert ev("x + 1", x=2) == Dual(3, 0)


def test_free_variables():
    assert free_variables(parse_expression("x*sin(x)")) == {"x"}
    assert free_variables(parse_expression("pi")) == set()
    assert free_variables(parse_expression("a+b")) == {"a", "b"}
    assert free_variables(parse_expression("log(e, t) - pi*u")) == {"t", "u"}


CORPUS = [(random_composition(random.Random(seed)), (-1.5, 1.5)) for seed in range(30)]
CORPUS += [(e.expr, e.domain) for e in CATALOG]
SOURCES = [src for src, _ in CORPUS]


def points(domain):
    lo, hi = domain
    return [lo + f * (hi - lo) for f in (0.1, 0.45, 0.85)]


@pytest.mark.parametrize("src, domain", CORPUS)
def test_zero_seed_is_plain_real_evaluation(src, domain):
    node = parse_expression(src)
    for a in points(domain):
        r = eval_dual(node, {"x": Dual(a, 0.0)})
        assert r.y == 0
        assert abs(r.x - py_eval(src, x=a)) <= 1e-14 * max(1.0, abs(r.x))


@pytest.mark.parametrize("src, domain", CORPUS)
def test_corpus_slope_matches_fd(src, domain):
    node = parse_expression(src)
    real = lambda t: eval_dual(node, {"x": Dual(t, 0.0)}).x
    for a in points(domain):
        d = eval_dual(node, {"x": Dual(a, 1.0)}).y
        assert abs(d - fd(real, a)) / max(1.0, abs(d)) <= 1e-6


def _respace(tokens, gaps):
    out = []
    for tok, gap in zip(tokens, gaps):
        out.append(tok.lexeme)
        out.append(" " * gap)
    return "".join(out)


@given(st.sampled_from(SOURCES), st.lists(st.integers(0, 3), min_size=200, max_size=200), st.floats(0.2, 1.2))
def test_whitespace_invariance(src, gaps, a):
    respaced = _respace(tokenize(src), gaps)
    assert eval_dual(parse_expression(respaced), {"x": Dual(a, 1.0)}) == eval_dual(parse_expression(src), {"x": Dual(a, 1.0)})


@pytest.mark.parametrize("src", SOURCES[:10] + ["-x^2", "2^3^2", "-(x-1)/-x"])
def test_to_source_round_trip(src):
    node = parse_expression(src)
    again = parse_expression(to_source(node))
    assert eval_dual(again, {"x": Dual(0.7, 1.0)}) == eval_dual(node, {"x": Dual(0.7, 1.0)})
    assert to_source(again) == to_source(node)
