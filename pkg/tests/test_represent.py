from fractions import Fraction as F

import pytest

import _oracle as oracle
from mvkit import represent, spectra
from mvkit.errors import BaseNotSupported, NotLocal, NotPerfect
from mvkit.groups import Integers, Lex, Rationals, nonstandard_reals, trivial_group
from mvkit.mvcore import (RADICAL, ZERO_IDEAL, FiniteChain, FiniteProduct, Gamma, Neg, Plus,
                          Times, UnitIntervalQ, Var, chang, eval_term, komori)

C = chang()
Z, Qg = Integers(), Rationals()
ZQ = Gamma(Lex((Z, Qg)), (1, F(0)))
L2L3 = FiniteProduct((FiniteChain(2), FiniteChain(3)))
U = UnitIntervalQ()


def test_chang_embedding_of_l2_l3():
    e = represent.chang_embedding(L2L3)
    assert e.hom_checked.strategy == "exhaustive"
    assert e.injectivity_checked.checked == 6
    images = {e(x) for x in L2L3.elements()}
    assert len(images) == 6


def test_chang_embedding_of_chang():
    e = represent.chang_embedding(C, samples=300)
    assert e.index == (ZERO_IDEAL, RADICAL)
    assert e((0, 5)) == ((0, 5), 0)
    assert e((1, -2)) == ((1, -2), 1)


def test_chain_embedding_zero_coordinate_is_identity():
    A = FiniteChain(5)
    e = represent.chang_embedding(A)
    assert all(e(x) == (x,) for x in A.elements())


def test_d_functor():
    r = represent.d_functor(C, samples=200)
    assert r.tail_group == Z
    assert r.iso(r.group.canon((0, 7), (0, 3))) == 4
    r = represent.d_functor(ZQ, samples=200)
    assert r.tail_group == Qg
    x = (0, F(2, 3))
    assert r.group.canon(x, x) == r.group.zero()
    with pytest.raises(NotPerfect):
        represent.d_functor(komori(3))


def test_g_functor():
    assert represent.g_functor(Z) == C
    assert spectra.classify(represent.g_functor(Qg)).is_perfect
    c = spectra.classify(represent.g_functor(Lex((Qg, Qg))))
    assert c.is_perfect and c.is_chain


@pytest.mark.parametrize("X", [Z, Qg, Lex((Z, Z)), trivial_group(), C, ZQ])
def test_roundtrips(X):
    assert represent.roundtrip_check(X, samples=200).checked > 0


def test_trivial_group_gives_two_element_algebra():
    A = represent.g_functor(trivial_group())
    assert A.size == 2
    assert represent.d_functor(A).group.is_trivial


def test_quasi_constant_membership():
    w = represent.is_quasi_constant(C, ((0, 1), (0, 5)))
    assert w.member and w.anchor_class == 0
    w = represent.is_quasi_constant(C, ((0, 1), (1, -1)))
    assert not w.member and w.failing_site == 1
    with pytest.raises(BaseNotSupported):
        represent.is_quasi_constant(L2L3, ((0, 0), (0, 0)))


def test_quasi_constant_algebra_is_local():
    rep = represent.verify_quasi_constant_algebra(C, 3, samples=200)
    assert rep.is_local


def test_separating_term_one_third_two_thirds():
    x = Var("x")
    s = Times(x, x)
    expected = Plus(Plus(s, s), Plus(s, s))
    t = represent.separating_term(F(1, 3), F(2, 3))
    assert t == expected
    assert eval_term(U, t, {"x": F(1, 3)}) == 0
    assert eval_term(U, t, {"x": F(2, 3)}) == 1


def test_separating_term_trivial_cases():
    assert represent.separating_term(F(0), F(1)) == Var("x")
    for q in [F(1, 2), F(1, 3), F(1, 7), F(3, 64), F(1, 50)]:
        stages = represent.separating_stages(F(0), q)
        k = 0
        while 2 ** k * q < 1:
            k += 1
        assert stages == ["double"] * k
        assert oracle.luk_term_value(stages, q) == 1


def test_prop_spec():
    assert represent.verify_prop_spec(C, samples=200).primes == (ZERO_IDEAL, RADICAL)
    cx = represent.prop_spec_counterexample(L2L3)
    assert cx.x == (0, F(1, 2))
    assert (cx.r, cx.s) == (0, F(1, 2))
    assert cx.ord_phi_x == cx.ord_neg_phi_x == spectra.INFINITE
    with pytest.raises(NotLocal):
        represent.verify_prop_spec(L2L3)


def test_local_representation_komori3():
    e = represent.local_representation(komori(3), samples=200)
    assert len(e.index) == 2
    assert e((1, 7)) == ((F(1, 2), 7), (F(1, 2), 0))
    assert e.notes


def test_local_representation_chain5_single_site():
    e = represent.local_representation(FiniteChain(5))
    assert e.index == (spectra.to_explicit(FiniteChain(5), ZERO_IDEAL),)
    assert e(F(3, 4)) == ((F(3, 4), 0),)


def test_local_representation_chang_infinitesimals():
    e = represent.local_representation(C, samples=200)
    img = e((0, 4))
    assert [v[0] for v in img] == [0, 0]
    assert img[0] == (0, 4)


def test_perfect_representation():
    e = represent.perfect_representation(C, samples=200)
    assert e((0, 3)) == ((0, (3, 0)), (0, (0, 0)))
    assert e((1, -3)) == ((1, (-3, 0)), (1, (0, 0)))
    deep = Gamma(Lex((Z, Lex((Z, Z)))), (1, (0, 0)))
    e = represent.perfect_representation(deep, samples=200)
    assert e((0, (2, -1)))[0] == (0, (2, -1))
    e = represent.perfect_representation(FiniteChain(2))
    assert {e(x) for x in (0, 1)} == {((0, (0, 0)),), ((1, (0, 0)),)}


def test_group_representation():
    e = represent.group_qc_representation(Lex((Z, Z)), (2, 0), samples=200)
    assert len(e.index) == 2
    assert e((2, 0)) == ((1, 0), (1, 0))
    e = represent.group_qc_representation(Z, 1, samples=100)
    assert e(5) == ((5, 0),)
    e = represent.group_qc_representation(Lex((Z, Qg)), (1, F(0)), samples=100)
    assert e((0, F(1, 3)))[0] == (0, F(1, 3))
    assert nonstandard_reals(2).is_divisible
