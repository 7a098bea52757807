"""Unital l-groups and their bridge to MV-algebras.

The group descriptors themselves live in :mod:`mvkit.groups`; this module adds
validated group operations, strong-unit detection, the functors ``gamma`` and
``xi`` and the correspondence between MV-ideals of Gamma(G, u) and l-ideals of
G (phi(J) = {x : |x| /\\ u in J}, psi(H) = H restricted to [0, u]).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .errors import (InvalidIdeal, NotGammaAlgebra, ShapeMismatch,
                     UnsupportedShape, VerificationError)
from .groups import (Direct, Integers, LWhole, LZero, OrderedGroup,
                     QuasiConstantGroup, Rationals, flatten, group_probes,
                     leaf_zero, lex_leaves, lideal_catalog, lideal_contains,
                     lideal_leq, lideal_sample, unflatten)
from .mvcore import (ExplicitIdeal, FiniteChain, FiniteProduct, FunctionAlgebra,
                     Gamma, MVAlgebra, QuasiConstant, UnitIntervalQ)
from . import spectra


# ---------------------------------------------------------------------------
# validated group operations

def _need(G: OrderedGroup, *xs):
    for x in xs:
        if not G.contains(x):
            raise ShapeMismatch(f"{x!r} is not an element of {G!r}")


def group_add(G, x, y):
    _need(G, x, y)
    return G.add(x, y)


def group_neg(G, x):
    _need(G, x)
    return G.neg(x)


def group_cmp(G, x, y):
    """-1, 0, 1, or None when x and y are incomparable."""
    _need(G, x, y)
    return G.cmp(x, y)


def group_abs(G, x):
    _need(G, x)
    return G.abs(x)


def group_min(G, x, y):
    _need(G, x, y)
    return G.meet(x, y)


def group_max(G, x, y):
    _need(G, x, y)
    return G.join(x, y)


# ---------------------------------------------------------------------------
# strong units

@dataclass(frozen=True)
class StrongUnitReport:
    value: bool | None
    mode: str
    witness: Any = None
    checked: int = 0


def _exact_strong_unit(G, u):
    """(decided, witness) or None when G is not structured."""
    if isinstance(G, (Integers, Rationals)):
        return (u > 0, None if u > 0 else G.coerce(1))
    leaves = lex_leaves(G)
    if leaves is not None:
        if not leaves:
            return (True, None)
        flat = flatten(G, u)
        if flat[0] > 0:
            return (True, None)
        e0 = [leaf_zero(l) for l in leaves]
        e0[0] = type(e0[0])(1)
        return (False, unflatten(G, e0))
    if isinstance(G, Direct):
        out = []
        for i, (c, v) in enumerate(zip(G.components, u)):
            sub = _exact_strong_unit(c, v)
            if sub is None:
                return None
            if not sub[0]:
                w = list(G.zero())
                w[i] = sub[1]
                return (False, tuple(w))
            out.append(sub)
        return (True, None)
    return None


def _dominated(G, u, x, n) -> bool:
    return G.leq(G.abs(x), G.scale(n, u))


def _dominating_multiple(G, u, x, bound):
    """Least n <= bound with |x| <= n*u, by bisection on the monotone predicate."""
    if not _dominated(G, u, x, bound):
        return None
    lo, hi = 0, bound
    while lo < hi:
        mid = (lo + hi) // 2
        if _dominated(G, u, x, mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def is_strong_unit(G: OrderedGroup, u, bound: int = 1000, seed: int = 1) -> StrongUnitReport:
    """Decide whether every |x| is below some multiple of ``u``.

    Lex/direct products of Z and Q are decided exactly (the leading flattened
    coordinate of ``u`` must be positive, componentwise for direct products);
    the exact answer is then sanity-checked on seeded samples.  Other groups
    are only sampled, and the answer is ``None`` (undecided).
    """
    _need(G, u)
    rng = random.Random(seed)
    exact = _exact_strong_unit(G, u)
    samples = [G.sample(rng) for _ in range(min(bound, 200))]
    if exact is not None:
        ok, w = exact
        if ok:
            for x in samples:
                if _dominating_multiple(G, u, x, 10**6 if G.is_trivial else _bound_for(G, u, x)) is None:
                    raise VerificationError("closed-form strong-unit criterion failed on a sample",
                                            {"x": G.fmt(x)})
        return StrongUnitReport(ok, "exact", w, len(samples))
    for x in samples:
        if _dominating_multiple(G, u, x, bound) is None:
            return StrongUnitReport(None, "sampled", x, len(samples))
    return StrongUnitReport(None, "sampled", None, len(samples))


def _bound_for(G, u, x):
    """A multiple that must dominate |x| when the closed form says u is a strong unit."""
    if isinstance(G, Direct):
        return max([_bound_for(c, v, a) for c, v, a in zip(G.components, u, x)] + [0])
    flat_u, flat_x = flatten(G, u), flatten(G, x)
    if not flat_u:
        return 0
    return int(abs(Fraction(flat_x[0]) / flat_u[0])) + 2


# ---------------------------------------------------------------------------
# the functors

def gamma(G: OrderedGroup, u) -> Gamma:
    return Gamma(G, u)


def xi(A: MVAlgebra):
    """Pattern-based inverse of gamma: a unital l-group (G, u) with gamma(G, u) = A."""
    if isinstance(A, Gamma):
        return A.group, A.unit
    if isinstance(A, FiniteChain):
        return Integers(), A.n - 1
    if isinstance(A, UnitIntervalQ):
        return Rationals(), Fraction(1)
    if isinstance(A, (FiniteProduct, FunctionAlgebra)):
        parts = [xi(f) for f in A.factors]
        return Direct(tuple(g for g, _ in parts)), tuple(v for _, v in parts)
    if isinstance(A, QuasiConstant):
        G, u = xi(A.base)
        return QuasiConstantGroup(G, A.sites, _radical_lideal(A.base)), (u,) * A.sites
    raise UnsupportedShape(f"no l-group is known for {A!r}")


def _radical_lideal(U):
    G, u = xi(U)
    A = gamma(G, u)
    return ideal_phi(A, spectra.radical(A))


def _element_maps(A) -> tuple[Callable, Callable]:
    """(to, back) between A and gamma(xi(A))."""
    if isinstance(A, (Gamma, UnitIntervalQ)):
        return (lambda x: x), (lambda y: y)
    if isinstance(A, FiniteChain):
        k = A.n - 1
        return (lambda x: int(x * k)), (lambda y: Fraction(y, k))
    if isinstance(A, (FiniteProduct, FunctionAlgebra, QuasiConstant)):
        maps = [_element_maps(f) for f in A.factors]
        return (lambda x: tuple(m[0](v) for m, v in zip(maps, x)),
                lambda y: tuple(m[1](v) for m, v in zip(maps, y)))
    raise UnsupportedShape(f"no l-group is known for {A!r}")


@dataclass(frozen=True)
class IsoReport:
    source: str
    target: str
    mode: str
    checked: int
    to: Callable = field(repr=False, compare=False)
    back: Callable = field(repr=False, compare=False)


def gamma_xi_iso(A: MVAlgebra, samples: int = 1000, seed: int = 1) -> IsoReport:
    """Build and verify the isomorphism A -> gamma(xi(A)).

    Finite algebras are checked on every element and pair; infinite ones on
    seeded samples, through the two-sided inverse.
    """
    B = gamma(*xi(A))
    to, back = _element_maps(A)
    if A.is_finite:
        xs = list(A.elements())
        if len(set(map(to, xs))) != len(xs) or B.size != len(xs):
            raise VerificationError("gamma(xi(A)) has a different size", {"algebra": repr(A)})
        pairs = [(x, y) for x in xs for y in xs]
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        xs = [A.sample(rng) for _ in range(samples)]
        pairs = list(zip(xs, xs[1:] + xs[:1]))
        mode = "sampled"
    if to(A.zero()) != B.zero():
        raise VerificationError("zero is not preserved", {})
    for x in xs:
        y = to(x)
        if not B.contains(y) or back(y) != x or to(A.neg(x)) != B.neg(y):
            raise VerificationError("element map fails", {"x": A.fmt(x)})
    for x, y in pairs:
        if to(A.plus(x, y)) != B.plus(to(x), to(y)):
            raise VerificationError("sum is not preserved", {"x": A.fmt(x), "y": A.fmt(y)})
    return IsoReport(repr(A), repr(B), mode, len(pairs), to, back)


# ---------------------------------------------------------------------------
# ideal correspondence

def _require_gamma(A):
    if not isinstance(A, Gamma):
        raise NotGammaAlgebra(f"{A!r} is not given as gamma(G, u)")


def _truncate(A, x):
    G = A.group
    return G.meet(G.abs(x), A.unit)


def _group_test_points(A, samples, seed):
    G = A.group
    rng = random.Random(seed)
    pts = list(group_probes(G))
    pts += [G.sample(rng) for _ in range(samples)]
    pts.append(A.unit)
    return pts


def ideal_phi(A: MVAlgebra, J, samples: int = 200, seed: int = 1):
    """The l-ideal {x : |x| /\\ u in J} of G, identified in the catalogue of G."""
    _require_gamma(A)
    if A.is_finite:
        if spectra.explicit_ideal_violation(A, spectra.to_explicit(A, J)) is not None:
            raise InvalidIdeal(f"{J!r} is not an ideal of {A!r}")
    G = A.group
    pts = _group_test_points(A, samples, seed)
    truth = [spectra.ideal_contains(A, J, _truncate(A, x)) for x in pts]
    hits = [H for H in lideal_catalog(G)
            if all(lideal_contains(G, H, x) == t for x, t in zip(pts, truth))]
    if len(hits) != 1:
        raise InvalidIdeal(f"{J!r} does not match a unique l-ideal of {G!r}")
    return hits[0]


def ideal_psi(A: MVAlgebra, H, samples: int = 200, seed: int = 1):
    """H restricted to [0, u], as an ideal of A (explicit when A is finite)."""
    _require_gamma(A)
    G = A.group
    if A.is_finite:
        return ExplicitIdeal(x for x in A.elements() if lideal_contains(G, H, x))
    rng = random.Random(seed)
    pts = [_truncate(A, x) for x in _group_test_points(A, samples, seed)]
    pts += [A.sample(rng) for _ in range(samples)]
    truth = [lideal_contains(G, H, x) for x in pts]
    hits = [J for J in spectra.ideals(A)
            if all(spectra.ideal_contains(A, J, x) == t for x, t in zip(pts, truth))]
    if len(hits) != 1:
        raise InvalidIdeal(f"{H!r} does not match a unique ideal of {A!r}")
    return hits[0]


@dataclass(frozen=True)
class CorrespondenceReport:
    algebra: str
    pairs: tuple
    checked_pairs: int


def ideal_correspondence(A: MVAlgebra, samples: int = 200, seed: int = 1) -> CorrespondenceReport:
    """Check that phi and psi are inverse order isomorphisms of the ideal posets."""
    _require_gamma(A)
    G = A.group
    mv = spectra.ideals(A)
    lg = list(lideal_catalog(G))
    phis = [ideal_phi(A, J, samples, seed) for J in mv]
    if len(set(phis)) != len(mv) or set(phis) != set(lg):
        raise VerificationError("phi is not a bijection onto the l-ideals",
                                {"phi": [repr(h) for h in phis], "l_ideals": [repr(h) for h in lg]})
    for J, H in zip(mv, phis):
        if not spectra.ideal_equal(A, ideal_psi(A, H, samples, seed), J):
            raise VerificationError("psi(phi(J)) != J", {"J": repr(J)})
    for H in lg:
        if ideal_phi(A, ideal_psi(A, H, samples, seed), samples, seed) != H:
            raise VerificationError("phi(psi(H)) != H", {"H": repr(H)})
    n = 0
    for J1, H1 in zip(mv, phis):
        for J2, H2 in zip(mv, phis):
            n += 1
            if spectra.ideal_leq(A, J1, J2) != lideal_leq(G, H1, H2):
                raise VerificationError("phi does not preserve inclusion",
                                        {"J1": repr(J1), "J2": repr(J2)})
    return CorrespondenceReport(repr(A), tuple(zip(mv, phis)), n)


def lgroup_is_local(G: OrderedGroup, u) -> bool:
    """(G, u) has a unique maximal l-ideal iff gamma(G, u) is local."""
    return spectra.classify(gamma(G, u)).is_local


def check_lideal_laws(G: OrderedGroup, H, samples: int = 500, seed: int = 1):
    """Sampled closure and convexity check; returns (ok, witness)."""
    rng = random.Random(seed)
    for _ in range(samples):
        x, y = lideal_sample(G, H, rng), lideal_sample(G, H, rng)
        if not lideal_contains(G, H, G.sub(x, y)):
            return False, {"law": "subgroup", "x": G.fmt(x), "y": G.fmt(y)}
        z = G.meet(G.abs(G.sample(rng)), G.abs(x))
        if not lideal_contains(G, H, z):
            return False, {"law": "convex", "x": G.fmt(x), "y": G.fmt(z)}
    return True, None


__all__ = [
    "group_add", "group_neg", "group_cmp", "group_abs", "group_min", "group_max",
    "StrongUnitReport", "is_strong_unit", "gamma", "xi", "gamma_xi_iso", "IsoReport",
    "ideal_phi", "ideal_psi", "ideal_correspondence", "CorrespondenceReport",
    "lgroup_is_local", "check_lideal_laws", "LZero", "LWhole",
]
