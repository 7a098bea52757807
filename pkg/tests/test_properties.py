from fractions import Fraction as F

from hypothesis import assume, given, settings
from hypothesis import strategies as st

import _oracle as oracle
from mvkit import represent, spectra
from mvkit.groups import Integers, Lex, Rationals
from mvkit.mvcore import (FiniteChain, FiniteProduct, Gamma, Join, Meet, Minus, Neg, One,
                          Plus, Times, UnitIntervalQ, Var, eval_term, komori)

Z, Qg = Integers(), Rationals()
U = UnitIntervalQ()
X, Y = Var("x"), Var("y")

unit_rationals = st.fractions(min_value=0, max_value=1, max_denominator=60)


@st.composite
def komori_elements(draw, n=None):
    n = n if n is not None else draw(st.integers(2, 6))
    a = draw(st.integers(0, n - 1))
    b = draw(st.integers(-10**6, 10**6))
    if a == 0:
        b = abs(b)
    elif a == n - 1:
        b = -abs(b)
    return n, (a, b)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), komori_elements(n), komori_elements(n), komori_elements(n))))
def test_komori_axioms_and_oracle(data):
    n, (_, x), (_, y), (_, z) = data
    A, u = komori(n), (n - 1, 0)
    p, neg = A.plus, A.neg
    assert p(x, y) == oracle.lex_plus(u, x, y)
    assert neg(x) == oracle.lex_neg(u, x)
    assert p(x, p(y, z)) == p(p(x, y), z)
    assert p(x, y) == p(y, x)
    assert p(x, A.zero()) == x and neg(neg(x)) == x
    assert p(x, neg(A.zero())) == A.one()
    assert p(neg(p(neg(x), y)), y) == p(neg(p(neg(y), x)), x)


@settings(max_examples=300, deadline=None)
@given(unit_rationals, unit_rationals)
def test_derived_operations_expand_literally(x, y):
    env = {"x": x, "y": y}
    assert eval_term(U, Times(X, Y), env) == max(F(0), x + y - 1)
    assert eval_term(U, Minus(X, Y), env) == max(F(0), x - y)
    assert eval_term(U, Join(X, Y), env) == max(x, y)
    assert eval_term(U, Meet(X, Y), env) == min(x, y)
    assert eval_term(U, One(), env) == 1
    assert U.dist(x, y) == abs(x - y)
    assert (U.dist(x, y) == 0) == (x == y)
    assert U.leq(x, y) == (U.minus(x, y) == 0) == (x <= y)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 5), st.integers(2, 5), st.data())
def test_product_order_is_componentwise(m, n, data):
    A = FiniteProduct((FiniteChain(m), FiniteChain(n)))
    els = A.elements()
    x, y = data.draw(st.sampled_from(els)), data.draw(st.sampled_from(els))
    assert A.leq(x, y) == (x[0] <= y[0] and x[1] <= y[1])
    assert A.join(x, y) == (max(x[0], y[0]), max(x[1], y[1]))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(2, 4))
def test_enumerated_ideals_are_ideals_and_primes_match(m, n):
    A = FiniteProduct((FiniteChain(m), FiniteChain(n)))
    ref = oracle.prod(oracle.chain(m), oracle.chain(n))
    for I in spectra.enumerate_ideals(A):
        S = set(I.elements)
        assert oracle.is_ideal(ref, S)
        p = spectra.ideal_predicates(A, I)
        assert p.is_prime == oracle.is_prime(ref, S)
        if spectra.is_proper(A, I):
            Qt, _ = spectra.quotient(A, I)
            assert p.is_prime == spectra.classify(Qt).is_chain


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), komori_elements(n))))
def test_order_matches_iterated_sum(data):
    n, (_, x) = data
    A = komori(n)
    got = spectra.order(A, x)
    ref = oracle.lex_ord((n - 1, 0), x, limit=n + 2)
    assert (got == spectra.INFINITE) == (ref is None)
    if ref is not None:
        assert got == ref
    assert spectra.is_infinitesimal(A, x) == (x[0] == 0 and x != (0, 0))


@st.composite
def separated_pairs(draw):
    x = draw(unit_rationals)
    y = draw(unit_rationals)
    assume(x != y)
    return min(x, y), max(x, y)


@settings(max_examples=300, deadline=None)
@given(separated_pairs())
def test_separating_terms(pair):
    x, y = pair
    stages = represent.separating_stages(x, y)
    assert oracle.luk_term_value(stages, x) == 0
    assert oracle.luk_term_value(stages, y) == 1
    assert len(stages) <= represent.stage_bound(x, y)
    t = represent.separating_term(x, y)
    assert eval_term(U, t, {"x": x}) == 0 and eval_term(U, t, {"x": y}) == 1


lex_pairs = st.tuples(st.integers(-50, 50), st.fractions(max_denominator=9))


@settings(max_examples=300, deadline=None)
@given(lex_pairs, lex_pairs)
def test_lex_order_is_tuple_order(x, y):
    G = Lex((Z, Qg))
    assert G.leq(x, y) == (x <= y)
    assert G.meet(x, y) == min(x, y) and G.join(x, y) == max(x, y)
    assert G.add(x, G.neg(x)) == G.zero()


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**6))
def test_quasi_constant_closure(k, seed):
    import random
    from mvkit.mvcore import chang
    K = represent.quasi_constant_algebra(chang(), k)
    rng = random.Random(seed)
    f, g = K.sample(rng), K.sample(rng)
    assert K.contains(K.plus(f, g)) and K.contains(K.neg(f))
    assert represent.is_quasi_constant(chang(), K.plus(f, g)).member


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=0, max_value=1, max_denominator=30),
       st.fractions(min_value=0, max_value=1, max_denominator=30))
def test_gamma_of_rationals_is_unit_interval(x, y):
    G = Gamma(Qg, F(1))
    assert G.plus(x, y) == U.plus(x, y) and G.neg(x) == U.neg(x)
    assert eval_term(G, Neg(Plus(Neg(X), Y)), {"x": x, "y": y}) == U.minus(x, y)
