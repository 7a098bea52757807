from fractions import Fraction as F

import pytest

import _oracle as oracle
from mvkit import spectra
from mvkit.errors import CarrierTooLarge, ElementNotInAlgebra, UnsupportedShape
from mvkit.groups import Integers, Lex, Rationals
from mvkit.mvcore import (RADICAL, WHOLE, ZERO_IDEAL, ExplicitIdeal, FiniteChain,
                          FiniteProduct, FunctionAlgebra, Gamma, UnitIntervalQ, chang, komori)

C = chang()
L2, L3 = FiniteChain(2), FiniteChain(3)
L2L3 = FiniteProduct((L2, L3))
ZQ = Gamma(Lex((Integers(), Rationals())), (1, F(0)))


def _sets(ideals):
    return sorted((frozenset(I.elements) for I in ideals), key=lambda s: (len(s), sorted(s)))


def test_chain3_has_two_ideals():
    found = spectra.enumerate_ideals(L3)
    assert len(found) == 2
    assert ExplicitIdeal({F(0), F(1, 2)}) not in found
    assert _sets(found) == sorted(oracle.ideals_by_subsets(oracle.chain(3)), key=len)


def test_l2_l3_has_four_ideals():
    found = spectra.enumerate_ideals(L2L3, method="both")
    assert len(found) == 4
    ref = oracle.ideals_by_subsets(oracle.prod(oracle.chain(2), oracle.chain(3)))
    assert set(_sets(found)) == set(ref)


def test_chain2_ideals():
    assert len(spectra.enumerate_ideals(L2)) == 2


def test_cap_and_infinite_carriers():
    with pytest.raises(CarrierTooLarge):
        spectra.enumerate_ideals(FiniteChain(65))
    with pytest.raises(UnsupportedShape):
        spectra.enumerate_ideals(C)


def test_symbolic_catalogues():
    assert spectra.symbolic_ideals(C) == [ZERO_IDEAL, RADICAL, WHOLE]
    assert spectra.symbolic_ideals(UnitIntervalQ()) == [ZERO_IDEAL, WHOLE]
    assert spectra.symbolic_ideals(komori(3)) == [ZERO_IDEAL, RADICAL, WHOLE]


def test_prime_predicates():
    p = spectra.ideal_predicates(L2L3, ExplicitIdeal({(F(0), F(0))}))
    assert not p.is_prime
    x, y = p.prime_witness
    assert {x, y} == {(F(1), F(0)), (F(0), F(1, 2))}
    assert spectra.ideal_predicates(C, ZERO_IDEAL).is_prime
    assert spectra.ideal_predicates(FiniteChain(6), ExplicitIdeal({F(0)})).is_prime


def test_maximal_and_radical():
    assert len(spectra.max_ideals(L2L3)) == 2
    assert spectra.radical(L2L3) == ExplicitIdeal({(F(0), F(0))})
    assert spectra.max_ideals(C) == [RADICAL]
    assert spectra.radical(C) == RADICAL


def test_quotients():
    Q, proj = spectra.quotient(C, RADICAL)
    assert Q == FiniteChain(2)
    assert proj((0, 7)) == 0 and proj((1, -7)) == 1
    Q, proj = spectra.quotient(C, ZERO_IDEAL)
    assert Q == C and proj((0, 4)) == (0, 4)
    Q, proj = spectra.quotient(komori(3), RADICAL)
    assert Q == FiniteChain(3)
    assert proj((1, 7)) == F(1, 2)


def test_order_examples():
    assert spectra.order(C, (1, -5)) == 2 == oracle.lex_ord((1, 0), (1, -5))
    assert spectra.order(C, (0, 3)) == spectra.INFINITE
    assert oracle.lex_ord((1, 0), (0, 3), 500) is None
    assert spectra.order(L3, F(1)) == 1
    assert spectra.ord(komori(4), (1, 9)) == oracle.lex_ord((3, 0), (1, 9)) == 3
    with pytest.raises(ElementNotInAlgebra):
        spectra.order(C, (2, 0))


def test_infinitesimals():
    assert spectra.is_infinitesimal(C, (0, 1))
    assert not spectra.is_infinitesimal(C, (0, 0))
    assert not any(spectra.is_infinitesimal(UnitIntervalQ(), F(1, k)) for k in range(1, 40))


def test_classify_chang():
    c = spectra.classify(C)
    assert (c.is_chain, c.is_simple, c.is_semisimple, c.is_local, c.is_perfect) == (
        True, False, False, True, True)


def test_classify_komori3():
    c = spectra.classify(komori(3))
    assert c.is_chain and c.is_local and not c.is_perfect
    assert c.witnesses["not_perfect"] == (1, 0)


def test_classify_l2_l3():
    c = spectra.classify(L2L3)
    assert c.is_semisimple and not c.is_local and not c.is_simple and not c.is_perfect
    assert c.maximal_ideal_count == 2


def test_classify_matches_brute_force_on_small_products():
    for m in range(2, 5):
        for n in range(2, 5):
            A = FiniteProduct((FiniteChain(m), FiniteChain(n)))
            ref = oracle.prod(oracle.chain(m), oracle.chain(n))
            ids = oracle.ideals_by_subsets(ref) if m * n <= 12 else oracle.ideals_by_generators(ref)
            assert len(spectra.enumerate_ideals(A)) == len(ids) == 4
            assert spectra.classify(A).maximal_ideal_count == len(oracle.maximal(ref, ids))


def test_power_algebra_over_chang_is_product_structure():
    P = FunctionAlgebra(C, 2)
    c = spectra.classify(P)
    assert c.maximal_ideal_count == 2 and not c.is_local
