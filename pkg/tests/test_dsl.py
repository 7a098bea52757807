from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvkit import dsl, represent
from mvkit.errors import ArityError, DSLError, DSLSyntaxError, UnknownName
from mvkit.groups import Integers, Lex, Rationals
from mvkit.mvcore import FiniteChain, Gamma, Neg, Plus, Var, Zero


def test_smallest_file():
    env = dsl.load_spec("algebra A = chain(3)")
    assert env.algebras == {"A": FiniteChain(3)}


def test_group_and_gamma():
    env = dsl.load_spec("group G = lex(Z, Q)\nalgebra P = gamma(G, (1, 0/1))")
    assert env.algebras["P"] == Gamma(Lex((Integers(), Rationals())), (1, F(0)))


def test_separating_term_ast():
    spec = dsl.parse_spec("term phi = ((x*x)+(x*x)) + ((x*x)+(x*x))")
    assert spec.decls[0].expr == represent.separating_term(F(1, 3), F(2, 3))


def test_precedence():
    a = dsl.parse_term("~x + y * z")
    b = dsl.parse_term("(~x) + (y * z)")
    assert a == b
    assert dsl.parse_term("x \\/ y /\\ z") == dsl.parse_term("x \\/ (y /\\ z)")
    assert dsl.parse_term("x + y + z") == Plus(Plus(Var("x"), Var("y")), Var("z"))
    assert dsl.parse_term("1") == Neg(Zero())


def test_terms_inline_earlier_terms():
    env = dsl.load_spec("term s = x * x\nterm d = s + s")
    s = env.terms["s"]
    assert env.terms["d"] == Plus(s, s)


def test_comments_and_blank_lines():
    env = dsl.load_spec("# header\n\nalgebra A = chang   # inline\n\n")
    assert list(env.algebras) == ["A"]


def test_elements_and_quotients():
    text = ("algebra B = product(chain(2), chain(3))\n"
            "ideal K = kernel(0)\n"
            "algebra BK = quotient(B, K)\n"
            "algebra R = quotient(chang, radical)\n"
            "element e = (1, 1/2)\n"
            "element f = [e, e]\n")
    env = dsl.load_spec(text)
    assert env.algebras["BK"].size == 2
    assert env.algebras["R"] == FiniteChain(2)
    assert env.elements["f"] == ((1, F(1, 2)), (1, F(1, 2)))


@pytest.mark.parametrize("text,exc,where", [
    ("algebra A = chain(3", DSLSyntaxError, (1, 20)),
    ("algebra A = chain(3)\nalgebra B = foo", UnknownName, (2, 13)),
    ("algebra A = chain(1, 2)", ArityError, (1, 13)),
    ("algebra A = quasiconst(chang)", ArityError, (1, 13)),
    ("term t = -x", DSLSyntaxError, (1, 10)),
    ("algebra A = chang\nalgebra A = chang", DSLError, (2, 9)),
    ("algebra chain = chang", DSLError, (1, 9)),
    ("group G = Z\nalgebra A = G", UnknownName, (2, 13)),
    ("algebra A = chain(3) x", DSLSyntaxError, (1, 22)),
    ("element e = 1/0", DSLError, (1, 15)),
])
def test_errors_carry_locations(text, exc, where):
    with pytest.raises(exc) as info:
        dsl.parse_spec(text)
    assert (info.value.line, info.value.col) == where


def test_semantic_errors_are_wrapped():
    with pytest.raises(DSLError, match="in declaration of 'A'"):
        dsl.load_spec("group G = Z\nalgebra A = gamma(G, 0)")


def test_spec_file_roundtrip():
    text = ("group G = lex(Z, Q)\n"
            "group T = lex()\n"
            "algebra P = gamma(G, (1, 0/1))\n"
            "algebra B = product(chain(2), chain(3))\n"
            "ideal K = kernel(0, 1)\n"
            "ideal E = {(0, 0)}\n"
            "element e = [(0, -3/4), 2]\n"
            "term t = ~x \\/ (y /\\ 1)\n")
    spec = dsl.parse_spec(text)
    assert dsl.parse_spec(dsl.format_spec(spec)) == spec


_vars = st.sampled_from([Var("x"), Var("y"), Var("z")])
_terms = st.recursive(
    st.one_of(_vars, st.just(Zero())),
    lambda inner: st.one_of(st.builds(Neg, inner), st.builds(Plus, inner, inner)),
    max_leaves=12)


@settings(max_examples=200, deadline=None)
@given(_terms)
def test_term_print_parse_roundtrip(t):
    assert dsl.parse_term(dsl.format_term(t)) == t


_nums = st.builds(dsl.Num, st.fractions(max_denominator=20), st.booleans()).map(
    lambda n: n if n.ratio or n.value.denominator == 1 else dsl.Num(n.value, True))
_lits = st.recursive(_nums, lambda inner: st.one_of(
    st.lists(inner, min_size=1, max_size=3).map(lambda xs: dsl.TupleLit(tuple(xs))),
    st.lists(inner, min_size=1, max_size=3).map(lambda xs: dsl.FuncLit(tuple(xs)))),
    max_leaves=6)


@settings(max_examples=200, deadline=None)
@given(_lits)
def test_literal_print_parse_roundtrip(lit):
    assert dsl.parse_literal(dsl.format_literal(lit)) == lit
