from fractions import Fraction as F

import pytest

from mvkit import spectra
from mvkit.errors import ShapeMismatch
from mvkit.groups import (Direct, Integers, LZero, Lex, Rationals, TailKernel, lex_leaves,
                          lideal_catalog, nonstandard_reals, trivial_group)
from mvkit.lgroup import (gamma, gamma_xi_iso, group_abs, group_add, group_cmp,
                          ideal_correspondence, ideal_phi, ideal_psi, is_strong_unit,
                          lgroup_is_local, xi, check_lideal_laws)
from mvkit.mvcore import (RADICAL, FiniteChain, FiniteProduct, Gamma, UnitIntervalQ,
                          chang, komori)

Z, Qg = Integers(), Rationals()
ZZ = Lex((Z, Z))
ZQ = Lex((Z, Qg))


def test_group_arithmetic():
    assert group_add(ZZ, (1, -5), (1, -5)) == (2, -10)
    assert group_cmp(ZZ, (0, 100), (1, -100)) == -1
    assert group_abs(ZQ, (0, F(-3, 2))) == (0, F(3, 2))
    with pytest.raises(ShapeMismatch):
        group_add(ZZ, (1, 2), (1, 2, 3))


def test_direct_product_is_partial():
    D = Direct((Z, Z))
    assert D.sign((1, -1)) is None
    assert D.meet((1, -1), (0, 2)) == (0, -1)


def test_strong_units():
    assert is_strong_unit(ZQ, (1, F(0))).value is True
    assert is_strong_unit(Z, 0).value is False
    r = is_strong_unit(ZZ, (0, 1))
    assert r.value is False
    assert r.witness == (1, 0)


def test_gamma_examples():
    assert gamma(Z, 1).elements() == (0, 1)
    assert gamma(ZZ, (1, 0)) == chang()
    G = gamma(Qg, F(1))
    U = UnitIntervalQ()
    for x in [F(0), F(1, 3), F(3, 4), F(1)]:
        assert G.plus(x, F(1, 2)) == U.plus(x, F(1, 2))


def test_xi_examples():
    assert xi(FiniteChain(3)) == (Z, 2)
    assert xi(chang()) == (ZZ, (1, 0))
    G, u = xi(FiniteProduct((FiniteChain(2), FiniteChain(2))))
    assert G == Direct((Z, Z)) and u == (1, 1)


def test_gamma_xi_roundtrip_on_chain():
    rep = gamma_xi_iso(FiniteChain(4))
    assert rep.mode == "exhaustive"
    assert rep.checked > 0


def test_phi_of_radical_is_tail_kernel():
    A = Gamma(ZQ, (1, F(0)))
    assert ideal_phi(A, RADICAL) == TailKernel(1)
    assert spectra.is_zero_ideal(A, ideal_psi(A, LZero()))


def test_local_lgroups():
    assert lgroup_is_local(ZQ, (1, F(0)))
    assert not lgroup_is_local(Direct((Z, Z)), (1, 1))
    assert lgroup_is_local(Z, 1)


@pytest.mark.parametrize("A,count", [
    (Gamma(Z, 2), 2),
    (Gamma(Direct((Z, Z)), (1, 1)), 4),
    (Gamma(ZQ, (1, F(0))), 3),
    (komori(3), 3),
    (Gamma(Lex((Z, Lex((Z, Z)))), (1, (0, 0))), 4),
])
def test_ideal_correspondence_is_bijective(A, count):
    rep = ideal_correspondence(A)
    assert len(rep.pairs) == count


def test_lideal_catalogue_of_lex():
    cat = lideal_catalog(Lex((Z, Z, Qg)))
    assert len(cat) == 4
    for H in cat:
        assert check_lideal_laws(Lex((Z, Z, Qg)), H, samples=100)[0]


def test_surrogate_group():
    S = nonstandard_reals(3)
    assert lex_leaves(S) == (Qg, Qg, Qg)
    assert S.is_divisible
    assert trivial_group().is_trivial
