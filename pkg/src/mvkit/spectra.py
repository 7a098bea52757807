"""Ideals, spectra, quotients and the classification predicates.

Finite algebras are handled exhaustively through their Cayley tables.  For
the infinite algebras the library supports (Gamma of a nested lex product of
Z/Q with a unit whose leading coordinate is positive, the rational unit
interval, products of those, and quasi-constant algebras over local bases) the
ideal lattice is a small closed catalogue of named ideals; anything else is
rejected with ``UnsupportedShape`` rather than guessed.

For a Gamma-of-lex algebra with flattened coordinates ``(x0, x1, ..., xm)``
the ideals are exactly the sets ``tail(l)`` of elements whose first ``l``
coordinates vanish, for ``l = 0 .. m+1``: they are the images of the convex
subgroups of the lex product, and the unit's positive leading coordinate makes
it a strong unit.  ``tail(1)`` is the radical, ``tail(m+1)`` is zero.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .errors import (CarrierTooLarge, ElementNotInAlgebra, InvalidIdeal,
                     UnsupportedShape, VerificationError)
from .groups import Integers, Lex, Rationals, flatten, lex_leaves, unflatten
from .mvcore import (RADICAL, WHOLE, ZERO_IDEAL, Exhaustive, ExplicitIdeal,
                     FiniteChain, FiniteProduct, FunctionAlgebra, Gamma,
                     MVAlgebra, ProductIdeal, QuasiConstant, Quotient,
                     SymbolicIdeal, UnitIntervalQ, _Pointwise, _check,
                     check_axioms, tables)

INFINITE = math.inf
DEFAULT_CAP = 64


# ---------------------------------------------------------------------------
# shape recognition

@dataclass(frozen=True)
class LexShape:
    """Gamma(G, u) with G a nested lex product of Z/Q, read in flat coordinates."""

    leaves: tuple
    unit: tuple

    @property
    def tail_count(self) -> int:
        return len(self.leaves) - 1

    @property
    def k(self):
        return self.unit[0]


def lex_shape(A) -> LexShape | None:
    if not isinstance(A, Gamma):
        return None
    leaves = lex_leaves(A.group)
    if not leaves:
        return None
    u = flatten(A.group, A.unit)
    if u[0] <= 0:
        return None
    return LexShape(leaves, u)


def _is_product(A) -> bool:
    return isinstance(A, (FiniteProduct, FunctionAlgebra))


def _flat_zero_prefix(A, x, level: int) -> bool:
    return all(v == 0 for v in flatten(A.group, x)[:level])


# ---------------------------------------------------------------------------
# finite ideal lattices

def explicit_ideal_violation(A: MVAlgebra, I: ExplicitIdeal) -> str | None:
    """None if ``I`` is an ideal of the finite algebra ``A``, else the reason."""
    T = tables(A)
    try:
        members = [T.index[x] for x in I.elements]
    except (KeyError, TypeError):
        return "contains non-elements"
    mask = np.zeros(len(T.elements), dtype=bool)
    mask[members] = True
    if not mask[T.zero]:
        return "does not contain 0"
    sums = T.plus[np.ix_(mask, mask)]
    if not mask[sums].all():
        return "not closed under +"
    below = T.leq[:, mask].any(axis=1)
    if (below & ~mask).any():
        return "not downward closed"
    return None


def _ideal_key(I: ExplicitIdeal):
    return (len(I.elements), tuple(sorted(I.elements)))


def _generic_ideals(A) -> list:
    """Principal ideals: downward closure of each element, closed under +.

    In a finite algebra every ideal is principal (generated by the sum of its
    members), so this list is complete.
    """
    T = tables(A)
    n = len(T.elements)
    leq = T.leq
    found = {}
    for a in range(n):
        mask = leq[:, a].copy()
        while True:
            sums = np.unique(T.plus[np.ix_(mask, mask)])
            grown = mask.copy()
            grown[sums] = True
            grown = leq[:, grown].any(axis=1)
            if (grown == mask).all():
                break
            mask = grown
        key = mask.tobytes()
        if key not in found:
            found[key] = ExplicitIdeal(T.elements[i] for i in np.flatnonzero(mask))
    return sorted(found.values(), key=_ideal_key)


def _is_product_of_chains(A) -> bool:
    return _is_product(A) and all(isinstance(f, FiniteChain) for f in A.factors)


def _structural_product_ideals(A) -> list:
    """Ideals of a product of finite chains: one of {0, whole} per factor."""
    import itertools

    choices = [((f.zero(),), f.elements()) for f in A.factors]
    out = [ExplicitIdeal(itertools.product(*pick))
           for pick in itertools.product(*choices)]
    return sorted(out, key=_ideal_key)


def enumerate_ideals(A: MVAlgebra, cap: int = DEFAULT_CAP, method: str = "auto") -> list:
    """All ideals of a finite algebra, canonically sorted.

    ``method`` is ``auto`` (structural path for products of chains, generic
    closure otherwise), ``generic``, ``structural`` or ``both``; ``both`` runs
    the two paths and raises if they disagree.
    """
    if not A.is_finite:
        raise UnsupportedShape(f"{A!r} is infinite; use symbolic_ideals")
    if A.size > cap:
        raise CarrierTooLarge(f"{A!r} has {A.size} elements, cap is {cap}")
    structural_ok = _is_product_of_chains(A)
    if method == "structural" or (method == "auto" and structural_ok):
        if not structural_ok:
            raise UnsupportedShape("structural enumeration needs a product of chains")
        return _structural_product_ideals(A)
    generic = _generic_ideals(A)
    if method == "both" and structural_ok:
        if _structural_product_ideals(A) != generic:
            raise VerificationError("structural and generic ideal enumerations disagree")
    return generic


@dataclass(frozen=True)
class _FiniteData:
    ideals: tuple
    maximal: tuple
    primes: tuple
    radical: ExplicitIdeal


@functools.lru_cache(maxsize=256)
def _finite_data(A, cap) -> _FiniteData:
    ideals = enumerate_ideals(A, cap)
    n = A.size
    proper = [I for I in ideals if len(I.elements) < n]
    maximal = [I for I in proper
               if not any(I.elements < J.elements for J in proper)]
    primes = [I for I in proper if _finite_prime_witness(A, I) is None]
    if maximal:
        rad = frozenset.intersection(*(I.elements for I in maximal))
    else:
        rad = frozenset(A.elements())
    return _FiniteData(tuple(ideals), tuple(maximal), tuple(primes), ExplicitIdeal(rad))


def _finite_prime_witness(A, I: ExplicitIdeal):
    T = tables(A)
    n = len(T.elements)
    mask = np.zeros(n, dtype=bool)
    mask[[T.index[x] for x in I.elements]] = True
    # minus[x, y] = neg(neg x + neg neg y) = neg(neg x + y)
    minus = T.neg[T.plus[T.neg]]
    ok = mask[minus] | mask[minus.T]
    bad = np.argwhere(~ok)
    if len(bad):
        i, j = bad[0]
        return (T.elements[i], T.elements[j])
    return None


# ---------------------------------------------------------------------------
# symbolic catalogue

def symbolic_ideals(A: MVAlgebra) -> list:
    """Catalogue of the ideals of a supported infinite algebra, ascending."""
    shape = lex_shape(A)
    if shape is not None and not A.is_finite:
        m = shape.tail_count
        if m == 0:
            return [ZERO_IDEAL, WHOLE]
        tails = [SymbolicIdeal("tail", l) for l in range(m, 1, -1)]
        return [ZERO_IDEAL] + tails + [RADICAL, WHOLE]
    if isinstance(A, UnitIntervalQ):
        return [ZERO_IDEAL, WHOLE]
    if _is_product(A) and not A.is_finite:
        import itertools

        cats = [ideals(f) for f in A.factors]
        return [ProductIdeal(tuple(p)) for p in itertools.product(*cats)]
    raise UnsupportedShape(f"no ideal catalogue for {A!r}")


def ideals(A: MVAlgebra, cap: int = DEFAULT_CAP) -> list:
    if A.is_finite:
        return list(_finite_data(A, cap).ideals)
    return symbolic_ideals(A)


def _level(A, I) -> int:
    """Position of a catalogued symbolic ideal: 0 for whole, larger is smaller."""
    shape = lex_shape(A)
    m = shape.tail_count if shape is not None else 1
    if I.tag == "whole":
        return 0
    if I.tag == "radical":
        return 1
    if I.tag == "tail":
        return I.level
    return m + 1


def _as_product(A, I) -> ProductIdeal:
    if isinstance(I, ProductIdeal):
        return I
    if isinstance(I, SymbolicIdeal) and I.tag in ("zero", "whole", "radical"):
        if I.tag == "radical":
            return ProductIdeal(tuple(radical(f) for f in A.factors))
        return ProductIdeal((I,) * len(A.factors))
    raise InvalidIdeal(f"{I!r} is not an ideal of the product {A!r}")


def to_explicit(A: MVAlgebra, I) -> ExplicitIdeal:
    if isinstance(I, ExplicitIdeal):
        return I
    return ExplicitIdeal(x for x in A.elements() if ideal_contains(A, I, x))


def ideal_contains(A: MVAlgebra, I, x) -> bool:
    if isinstance(I, ExplicitIdeal):
        return x in I.elements
    if isinstance(I, ProductIdeal):
        return all(ideal_contains(f, p, v) for f, p, v in zip(A.factors, I.parts, x))
    if I.tag == "whole":
        return True
    if I.tag == "zero":
        return x == A.zero()
    if I.tag == "radical":
        return in_radical(A, x)
    if I.tag == "tail":
        if lex_shape(A) is None:
            raise InvalidIdeal(f"tail ideals need a Gamma-of-lex algebra, not {A!r}")
        return _flat_zero_prefix(A, x, I.level)
    raise InvalidIdeal(f"unknown ideal {I!r}")


def is_proper(A, I) -> bool:
    if isinstance(I, ExplicitIdeal):
        return len(I.elements) < A.size
    if isinstance(I, ProductIdeal):
        return not all(is_whole(f, p) for f, p in zip(A.factors, I.parts))
    return I.tag != "whole"


def is_whole(A, I) -> bool:
    return not is_proper(A, I)


def is_zero_ideal(A, I) -> bool:
    if isinstance(I, ExplicitIdeal):
        return I.elements == {A.zero()}
    if isinstance(I, ProductIdeal):
        return all(is_zero_ideal(f, p) for f, p in zip(A.factors, I.parts))
    if I.tag == "zero":
        return True
    if I.tag == "radical":
        return _radical_trivial(A)
    if I.tag == "tail":
        shape = lex_shape(A)
        return shape is not None and I.level > shape.tail_count
    return False


def ideal_leq(A: MVAlgebra, I, J) -> bool:
    """Inclusion between two ideals of ``A``."""
    if A.is_finite:
        return to_explicit(A, I).elements <= to_explicit(A, J).elements
    if _is_product(A):
        I, J = _as_product(A, I), _as_product(A, J)
        return all(ideal_leq(f, p, q) for f, p, q in zip(A.factors, I.parts, J.parts))
    if is_zero_ideal(A, I) or is_whole(A, J):
        return True
    return _level(A, I) >= _level(A, J)


def ideal_equal(A, I, J) -> bool:
    return ideal_leq(A, I, J) and ideal_leq(A, J, I)


# ---------------------------------------------------------------------------
# radical

def _radical_trivial(A) -> bool:
    if A.is_finite:
        return len(_finite_data(A, max(DEFAULT_CAP, A.size)).radical.elements) == 1
    shape = lex_shape(A)
    if shape is not None:
        return shape.tail_count == 0
    if isinstance(A, UnitIntervalQ):
        return True
    if isinstance(A, _Pointwise):
        return all(_radical_trivial(f) for f in A.factors)
    raise UnsupportedShape(f"radical of {A!r} is not supported")


def in_radical(A: MVAlgebra, x) -> bool:
    if A.is_finite:
        return x in _finite_data(A, max(DEFAULT_CAP, A.size)).radical.elements
    if lex_shape(A) is not None:
        return _flat_zero_prefix(A, x, 1)
    if isinstance(A, UnitIntervalQ):
        return x == 0
    if isinstance(A, _Pointwise):
        return all(in_radical(f, v) for f, v in zip(A.factors, x))
    raise UnsupportedShape(f"radical membership in {A!r} is not supported")


def radical(A: MVAlgebra, cap: int = DEFAULT_CAP):
    """Intersection of the maximal ideals: explicit when finite, else symbolic."""
    if A.is_finite:
        return _finite_data(A, cap).radical
    if isinstance(A, QuasiConstant):
        return ZERO_IDEAL if _radical_trivial(A.base) else RADICAL
    if _is_product(A):
        return ProductIdeal(tuple(radical(f, cap) for f in A.factors))
    return ZERO_IDEAL if _radical_trivial(A) else RADICAL


def _abs_in(A, x):
    G = A.group
    return G.abs(x)


def sample_radical(A: MVAlgebra, rng: random.Random):
    if A.is_finite:
        return rng.choice(sorted(_finite_data(A, max(DEFAULT_CAP, A.size)).radical.elements))
    shape = lex_shape(A)
    if shape is not None:
        return _sample_tail(A, 1, rng)
    if isinstance(A, UnitIntervalQ):
        return A.zero()
    if isinstance(A, _Pointwise):
        return tuple(sample_radical(f, rng) for f in A.factors)
    raise UnsupportedShape(f"cannot sample the radical of {A!r}")


def _sample_tail(A, level, rng):
    flat = list(flatten(A.group, A.sample(rng)))
    for i in range(min(level, len(flat))):
        flat[i] = type(flat[i])(0)
    return _abs_in(A, unflatten(A.group, flat))


def sample_ideal(A: MVAlgebra, I, rng: random.Random):
    if isinstance(I, ExplicitIdeal):
        return rng.choice(sorted(I.elements))
    if isinstance(I, ProductIdeal):
        return tuple(sample_ideal(f, p, rng) for f, p in zip(A.factors, I.parts))
    if I.tag == "zero":
        return A.zero()
    if I.tag == "whole":
        return A.sample(rng)
    if I.tag == "radical":
        return sample_radical(A, rng)
    return _sample_tail(A, I.level, rng)


def check_ideal_laws(A: MVAlgebra, I, samples: int = 1000, seed: int = 1):
    """Sampled check of the three ideal laws; returns ``(ok, witness)``."""
    if not ideal_contains(A, I, A.zero()):
        return False, {"law": "0 in I"}
    rng = random.Random(seed)
    for _ in range(samples):
        x, y = sample_ideal(A, I, rng), sample_ideal(A, I, rng)
        s = A.plus(x, y)
        if not ideal_contains(A, I, s):
            return False, {"law": "closed under +", "x": A.fmt(x), "y": A.fmt(y)}
        z = A.sample(rng)
        for below in (A.times(x, z), A.meet(x, z)):
            if not ideal_contains(A, I, below):
                return False, {"law": "downward closed", "x": A.fmt(x), "y": A.fmt(below)}
    return True, None


# ---------------------------------------------------------------------------
# prime / maximal

@dataclass(frozen=True)
class IdealPredicates:
    is_ideal: bool
    is_prime: bool
    is_maximal: bool
    prime_witness: tuple | None = None
    mode: str = "exhaustive"


def prime_witness(A: MVAlgebra, I, samples: int = 1000, seed: int = 1):
    """A pair (x, y) with neither x-y nor y-x in I, or None if I is prime.

    For an improper ideal the witness is ``("improper",)``.
    """
    if not is_proper(A, I):
        return ("improper",)
    if A.is_finite:
        return _finite_prime_witness(A, to_explicit(A, I))
    if _is_product(A):
        P = _as_product(A, I)
        live = [i for i, (f, p) in enumerate(zip(A.factors, P.parts)) if is_proper(f, p)]
        if len(live) >= 2:
            i, j = live[:2]
            x = tuple(f.one() if k == i else f.zero() for k, f in enumerate(A.factors))
            y = tuple(f.one() if k == j else f.zero() for k, f in enumerate(A.factors))
            return (x, y)
        i = live[0]
        inner = prime_witness(A.factors[i], P.parts[i], samples, seed)
        if inner is None:
            return None
        lift = lambda v: tuple(v if k == i else f.zero() for k, f in enumerate(A.factors))
        return (lift(inner[0]), lift(inner[1]))
    # supported infinite non-products are chains: sampled comparability check
    rng = random.Random(seed)
    for _ in range(samples):
        x, y = A.sample(rng), A.sample(rng)
        if not (ideal_contains(A, I, A.minus(x, y)) or ideal_contains(A, I, A.minus(y, x))):
            return (x, y)
    return None


def ideal_predicates(A: MVAlgebra, I, cap: int = DEFAULT_CAP, samples: int = 1000,
                     seed: int = 1) -> IdealPredicates:
    if A.is_finite:
        E = to_explicit(A, I)
        if explicit_ideal_violation(A, E) is not None:
            return IdealPredicates(False, False, False, None, "exhaustive")
        mode = "exhaustive"
    else:
        ok, _ = check_ideal_laws(A, I, samples, seed)
        if not ok:
            return IdealPredicates(False, False, False, None, "sampled")
        mode = "catalogue+sampled"
    w = prime_witness(A, I, samples, seed)
    maximal = is_proper(A, I) and not any(
        is_proper(A, J) and ideal_leq(A, I, J) and not ideal_leq(A, J, I)
        for J in ideals(A, cap))
    return IdealPredicates(True, w is None, maximal, None if w is None else w, mode)


def max_ideals(A: MVAlgebra, cap: int = DEFAULT_CAP) -> list:
    if A.is_finite:
        return list(_finite_data(A, cap).maximal)
    if isinstance(A, QuasiConstant):
        # every f outside {f : f(0) in Rad U} has finite order (U is local and
        # f is quasi-constant), so that ideal contains every proper ideal
        return [radical(A)]
    cat = ideals(A, cap)
    proper = [I for I in cat if is_proper(A, I)]
    return [I for I in proper
            if not any(ideal_leq(A, I, J) and not ideal_leq(A, J, I) for J in proper)]


def spec(A: MVAlgebra, cap: int = DEFAULT_CAP) -> list:
    """Prime ideals, canonically ordered."""
    if A.is_finite:
        return list(_finite_data(A, cap).primes)
    if isinstance(A, QuasiConstant):
        raise UnsupportedShape("the prime spectrum of a quasi-constant algebra is not catalogued")
    return [I for I in ideals(A, cap) if prime_witness(A, I) is None]


# ---------------------------------------------------------------------------
# quotients

def _identity(x):
    return x


def quotient(A: MVAlgebra, I, cap: int = DEFAULT_CAP):
    """Return ``(A/I, projection)``."""
    if is_zero_ideal(A, I):
        return A, _identity
    if A.is_finite:
        E = to_explicit(A, I)
        if explicit_ideal_violation(A, E) is not None:
            raise InvalidIdeal(f"{I!r} is not an ideal of {A!r}")
        Q = Quotient(A, E)
        report = check_axioms(Q, Exhaustive())
        if not report.passed:
            raise VerificationError(f"quotient {Q!r} fails the axioms",
                                    {"failures": [r.axiom for r in report.failures()]})
        return Q, Q.canon
    if not is_proper(A, I):
        raise InvalidIdeal("the quotient by the whole algebra is trivial")
    shape = lex_shape(A)
    if shape is not None:
        level = 1 if I.tag == "radical" else I.level
        if I.tag not in ("radical", "tail"):
            raise InvalidIdeal(f"{I!r} is not in the catalogue of {A!r}")
        G = A.group
        if level == 1:
            k = shape.k
            if isinstance(shape.leaves[0], Integers):
                return FiniteChain(k + 1), lambda x: Fraction(flatten(G, x)[0], k)
            return UnitIntervalQ(), lambda x: Fraction(flatten(G, x)[0]) / k
        H = Lex(shape.leaves[:level])
        Q = Gamma(H, tuple(shape.unit[:level]))
        return Q, lambda x: tuple(flatten(G, x)[:level])
    if _is_product(A):
        P = _as_product(A, I)
        keep = [i for i, (f, p) in enumerate(zip(A.factors, P.parts)) if is_proper(f, p)]
        parts = [quotient(A.factors[i], P.parts[i], cap) for i in keep]
        if len(keep) == 1:
            (Q, proj), i = parts[0], keep[0]
            return Q, lambda x: proj(x[i])
        Q = FiniteProduct(tuple(q for q, _ in parts))
        projs = [(i, p) for i, (_, p) in zip(keep, parts)]
        return Q, lambda x: tuple(p(x[i]) for i, p in projs)
    if isinstance(A, QuasiConstant) and getattr(I, "tag", None) == "radical":
        QU, pU = quotient(A.base, radical(A.base), cap)
        return QU, lambda f: pU(f[0])
    raise UnsupportedShape(f"quotient of {A!r} by {I!r} is not supported")


# ---------------------------------------------------------------------------
# order and infinitesimals

def order(A: MVAlgebra, x):
    """Least n with n-fold x-sum equal to 1, or ``INFINITE``.

    On Gamma(L0 x_lex T, (k, s)) with x = (a, t): if a = 0 every multiple keeps
    leading coordinate 0 < k, so the order is infinite.  Otherwise
    n(a, t) >= (k, s) holds iff n*a > k, or n*a = k and n*t >= s; with
    n0 = ceil(k/a) the answer is n0, plus one exactly when n0*a = k and
    n0*t < s (then (n0+1)*a > k).
    """
    _check(A, x)
    return _order(A, x)


def _order(A, x):
    if A.is_finite:
        one = A.one()
        acc = A.zero()
        for n in range(1, A.size + 1):
            acc = A.plus(acc, x)
            if acc == one:
                return n
        return INFINITE
    if isinstance(A, UnitIntervalQ):
        return INFINITE if x == 0 else math.ceil(1 / x)
    shape = lex_shape(A)
    if shape is not None:
        flat = flatten(A.group, x)
        a, k = flat[0], shape.k
        if a == 0:
            return INFINITE
        n = math.ceil(Fraction(k) / a)
        if n * a == k and tuple(n * t for t in flat[1:]) < tuple(shape.unit[1:]):
            n += 1
        return n
    if isinstance(A, _Pointwise):
        return max(_order(f, v) for f, v in zip(A.factors, x))
    raise UnsupportedShape(f"order in {A!r} is not supported")


ord = order


def is_infinitesimal(A: MVAlgebra, x) -> bool:
    """x != 0 and n*x < ~x for every n."""
    _check(A, x)
    return _infinitesimal(A, x)


def _infinitesimal(A, x) -> bool:
    if x == A.zero():
        return False
    if A.is_finite:
        nx, negx = A.zero(), A.neg(x)
        for _ in range(A.size + 1):
            nx = A.plus(nx, x)
            if not (A.leq(nx, negx) and nx != negx):
                return False
        return True
    if lex_shape(A) is not None:
        return _flat_zero_prefix(A, x, 1)
    if isinstance(A, UnitIntervalQ):
        return False
    if isinstance(A, _Pointwise):
        return all(v == f.zero() or _infinitesimal(f, v) for f, v in zip(A.factors, x))
    raise UnsupportedShape(f"infinitesimals of {A!r} are not supported")


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class Classification:
    algebra: str
    is_chain: bool
    is_simple: bool
    is_semisimple: bool
    is_local: bool
    is_perfect: bool
    maximal_ideal_count: int
    radical: Any
    maximal_ideals: tuple
    ord_criterion: bool
    mode: str
    checked: int
    witnesses: dict = field(default_factory=dict)


def _ord_criterion_holds(A, x) -> bool:
    return _order(A, x) < INFINITE or _order(A, A.neg(x)) < INFINITE


@functools.lru_cache(maxsize=256)
def _classify_finite(A, cap) -> Classification:
    T = tables(A)
    n = len(T.elements)
    data = _finite_data(A, cap)
    nontrivial = n > 1
    comparable = T.leq | T.leq.T
    chain = nontrivial and bool(comparable.all())
    rad = data.radical.elements
    semisimple = nontrivial and len(rad) == 1
    local = len(data.maximal) == 1
    simple = nontrivial and len(data.ideals) == 2
    witnesses = {}
    if not chain and nontrivial:
        i, j = np.argwhere(~comparable)[0]
        witnesses["incomparable"] = (T.elements[i], T.elements[j])
    perfect = nontrivial
    for x in T.elements:
        if x not in rad and A.neg(x) not in rad:
            perfect = False
            witnesses["not_perfect"] = x
            break
    crit = True
    for x in T.elements:
        if not _ord_criterion_holds(A, x):
            crit = False
            witnesses["ord_infinite_both"] = x
            break
    return Classification(repr(A), chain, simple, semisimple, local, perfect,
                          len(data.maximal), data.radical, data.maximal, crit,
                          "exhaustive", n, witnesses)


def _structural_flags(A, cap):
    """(chain, simple, semisimple, local, perfect, maximal, witnesses) for infinite A."""
    shape = lex_shape(A)
    if shape is not None:
        m = shape.tail_count
        chain = A.group.is_total
        perfect, w = True, {}
        if isinstance(shape.leaves[0], Rationals) or shape.k >= 2:
            mid = Fraction(shape.k, 2) if isinstance(shape.leaves[0], Rationals) else 1
            flat = [mid] + [type(v)(0) for v in shape.unit[1:]]
            perfect, w = False, {"not_perfect": unflatten(A.group, flat)}
        maxs = (RADICAL,) if m else (ZERO_IDEAL,)
        return chain, m == 0, m == 0, True, perfect, maxs, w
    if isinstance(A, UnitIntervalQ):
        return True, True, True, True, False, (ZERO_IDEAL,), {"not_perfect": Fraction(1, 2)}
    if isinstance(A, QuasiConstant):
        cu = classify(A.base, cap)
        if cu.is_semisimple:
            return (cu.is_chain, cu.is_simple, True, True, cu.is_perfect, (ZERO_IDEAL,), {})
        return (A.sites == 1 and cu.is_chain, False, False, True, cu.is_perfect,
                (RADICAL,), {})
    if _is_product(A):
        cs = [classify(f, cap) for f in A.factors]
        maxs = tuple(max_ideals(A, cap))
        single = len(cs) == 1
        w = {}
        if not single:
            w["not_perfect"] = tuple(f.one() if i == 0 else f.zero()
                                     for i, f in enumerate(A.factors))
            w["ord_infinite_both"] = w["not_perfect"]
        return (single and cs[0].is_chain, single and cs[0].is_simple,
                all(c.is_semisimple for c in cs), len(maxs) == 1,
                single and cs[0].is_perfect, maxs, w)
    raise UnsupportedShape(f"cannot classify {A!r}")


def classify(A: MVAlgebra, cap: int = DEFAULT_CAP, samples: int = 1000,
             seed: int = 1) -> Classification:
    """Compute the chain/simple/semisimple/local/perfect flags.

    Finite algebras are decided exhaustively.  Supported infinite algebras are
    decided from their ideal catalogue and the chain/perfect flags are then
    cross-checked on ``samples`` seeded elements; locality is always
    cross-checked against the order criterion (local iff every x has
    ord(x) or ord(~x) finite).  Any disagreement raises VerificationError.
    """
    return _classify(A, cap, samples, seed)


@functools.lru_cache(maxsize=512)
def _classify(A, cap, samples, seed) -> Classification:
    if A.is_finite:
        c = _classify_finite(A, cap)
        if c.ord_criterion != c.is_local:
            raise VerificationError("locality disagrees with the order criterion",
                                    {"algebra": repr(A)})
        return c
    chain, simple, semisimple, local, perfect, maxs, w = _structural_flags(A, cap)
    rad = radical(A, cap)
    rng = random.Random(seed)
    pts = [A.sample(rng) for _ in range(samples)]
    if "ord_infinite_both" in w:
        pts.append(w["ord_infinite_both"])
    crit = True
    for x in pts:
        if not _ord_criterion_holds(A, x):
            crit = False
            w.setdefault("ord_infinite_both", x)
            break
    if crit != local:
        raise VerificationError("locality disagrees with the order criterion",
                                {"algebra": repr(A)})
    for x, y in zip(pts, pts[1:]):
        if chain and not (A.leq(x, y) or A.leq(y, x)):
            raise VerificationError("sampled pair is incomparable in a chain",
                                    {"x": A.fmt(x), "y": A.fmt(y)})
        if perfect and not (in_radical(A, x) or in_radical(A, A.neg(x))):
            raise VerificationError("sampled element outside Rad and ~Rad",
                                    {"x": A.fmt(x)})
    return Classification(repr(A), chain, simple, semisimple, local, perfect,
                          len(maxs), rad, tuple(maxs), crit,
                          "catalogue+sampled", len(pts), w)
