"""Representation theorems, built and checked on concrete algebras.

Every constructor here is fail-stop: it returns an :class:`Embedding` only
after the map has been checked to preserve 0, negation and the sum and to be
injective (on all elements of a finite source, on seeded samples otherwise).
A failed check raises ``VerificationError`` with the offending elements.

Ultrapowers of the reals are replaced throughout by the divisible totally
ordered group ``nonstandard_reals(depth)`` (rational vectors under the lex
order); every report built on it says so in ``notes``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .errors import (BaseNotSupported, ElementNotInAlgebra, NotLocal, NotPerfect, NotStrictlyOrdered,
                     OutOfUnitInterval, UnsupportedShape, VerificationError)
from .groups import (Integers, Lex, OrderedGroup, QuasiConstantGroup,
                     TailKernel, LZero, flatten, lex_leaves, nonstandard_reals,
                     trivial_group, unflatten)
from .lgroup import gamma, ideal_phi, lgroup_is_local
from .mvcore import (FiniteChain, FiniteProduct, FunctionAlgebra, Gamma,
                     MVAlgebra, Neg, Plus, QuasiConstant, UnitIntervalQ, Var,
                     eval_term)
from . import spectra
from .spectra import lex_shape

SURROGATE_NOTE = ("ultrapower replaced by the lex-ordered rational vector group "
                  "nonstandard_reals({depth})")


# ---------------------------------------------------------------------------
# embeddings and their verification

@dataclass(frozen=True)
class Verification:
    strategy: str
    checked: int
    seed: int | None = None
    passed: bool = True


@dataclass(frozen=True)
class Embedding:
    source: Any
    target: Any
    map: Callable = field(repr=False, compare=False)
    hom_checked: Verification = None
    injectivity_checked: Verification = None
    index: tuple = ()
    notes: tuple = ()
    extra: dict = field(default_factory=dict, repr=False, compare=False)

    def __call__(self, x):
        return self.map(x)


def _test_elements(A, samples, seed):
    if A.is_finite:
        return list(A.elements()), "exhaustive"
    rng = random.Random(seed)
    xs = [A.zero(), A.one()] + [A.sample(rng) for _ in range(samples)]
    return xs, "sampled"


def _test_pairs(xs, strategy, seed):
    if strategy == "exhaustive":
        return [(x, y) for x in xs for y in xs]
    rng = random.Random(seed + 1)
    shuffled = xs[:]
    rng.shuffle(shuffled)
    return list(zip(xs, xs[1:])) + list(zip(xs, shuffled))


def verify_mv_map(A: MVAlgebra, B: MVAlgebra, f: Callable, samples: int = 1000,
                  seed: int = 1):
    """Check that f: A -> B is an injective MV-homomorphism; returns the two records."""
    xs, strategy = _test_elements(A, samples, seed)
    if f(A.zero()) != B.zero():
        raise VerificationError("0 is not preserved", {"image": B.fmt(f(A.zero()))})
    images = {}
    for x in xs:
        y = f(x)
        if not B.contains(y):
            raise VerificationError("image leaves the target", {"x": A.fmt(x)})
        if f(A.neg(x)) != B.neg(y):
            raise VerificationError("negation is not preserved", {"x": A.fmt(x)})
        if y in images and images[y] != x:
            raise VerificationError("map is not injective",
                                    {"x": A.fmt(x), "y": A.fmt(images[y])})
        images[y] = x
    pairs = _test_pairs(xs, strategy, seed)
    for x, y in pairs:
        if f(A.plus(x, y)) != B.plus(f(x), f(y)):
            raise VerificationError("sum is not preserved", {"x": A.fmt(x), "y": A.fmt(y)})
    s = None if strategy == "exhaustive" else seed
    return (Verification(strategy, len(pairs) + len(xs), s),
            Verification(strategy, len(images), s))


# ---------------------------------------------------------------------------
# Chang subdirect embedding

def chang_embedding(A: MVAlgebra, cap: int = spectra.DEFAULT_CAP, samples: int = 1000,
                    seed: int = 1) -> Embedding:
    """x -> (x/P) over P in Spec A, into the product of the chains A/P."""
    primes = spectra.spec(A, cap)
    parts = [spectra.quotient(A, P, cap) for P in primes]
    for P, (Q, _) in zip(primes, parts):
        if not spectra.classify(Q, cap, samples, seed).is_chain:
            raise VerificationError("a prime quotient is not a chain", {"prime": repr(P)})
    target = FiniteProduct(tuple(Q for Q, _ in parts))
    projs = tuple(p for _, p in parts)

    def f(x):
        return tuple(p(x) for p in projs)

    hom, inj = verify_mv_map(A, target, f, samples, seed)
    return Embedding(A, target, f, hom, inj, tuple(primes))


# ---------------------------------------------------------------------------
# the D and G functors

@dataclass(frozen=True)
class DGroup(OrderedGroup):
    """Classes of pairs of radical elements; [x, y] is stored as (x - y, y - x)."""

    algebra: MVAlgebra

    def __repr__(self):
        return f"D({self.algebra!r})"

    def canon(self, x, y):
        A = self.algebra
        return (A.minus(x, y), A.minus(y, x))

    @property
    def is_total(self):
        return spectra.classify(self.algebra).is_chain

    @property
    def is_trivial(self):
        return spectra._radical_trivial(self.algebra)

    def contains(self, p):
        A = self.algebra
        return (isinstance(p, tuple) and len(p) == 2
                and all(A.contains(v) and spectra.in_radical(A, v) for v in p)
                and p == self.canon(*p))

    def zero(self):
        z = self.algebra.zero()
        return (z, z)

    def add(self, p, q):
        A = self.algebra
        return self.canon(A.plus(p[0], q[0]), A.plus(p[1], q[1]))

    def neg(self, p):
        return (p[1], p[0])

    def sign(self, p):
        z = self.algebra.zero()
        if p[0] == z:
            return 0 if p[1] == z else -1
        return 1 if p[1] == z else None

    def sample(self, rng):
        A = self.algebra
        return self.canon(spectra.sample_radical(A, rng), spectra.sample_radical(A, rng))

    def sample_nonneg(self, rng):
        return (spectra.sample_radical(self.algebra, rng), self.algebra.zero())

    def coerce(self, v):
        A = self.algebra
        x, y = (A.coerce(c) for c in v)
        return self.canon(x, y)

    def fmt(self, p):
        return "[" + self.algebra.fmt(p[0]) + ", " + self.algebra.fmt(p[1]) + "]"


@dataclass(frozen=True)
class DFunctorResult:
    algebra: MVAlgebra
    group: DGroup
    tail_group: OrderedGroup | None
    iso: Callable | None = field(default=None, repr=False, compare=False)
    iso_inverse: Callable | None = field(default=None, repr=False, compare=False)
    checked: int = 0


def _require_perfect(A):
    if not spectra.classify(A).is_perfect:
        raise NotPerfect(f"{A!r} is not perfect")


def _tail_iso(A):
    """(T, D(A) -> T, T -> D(A)) when A is Gamma(Z x_lex T, (1, 0)) or degenerate."""
    D = DGroup(A)
    if spectra._radical_trivial(A):
        T = trivial_group()
        return T, (lambda p: ()), (lambda g: D.zero())
    shape = lex_shape(A)
    if shape is None or shape.k != 1 or not isinstance(shape.leaves[0], Integers):
        return None, None, None
    G = A.group
    comps = getattr(G, "components", ())
    if (len(comps) == 2 and isinstance(comps[0], Integers)
            and lex_leaves(comps[1]) is not None and A.unit == (1, comps[1].zero())):
        T = comps[1]

        def iso(p):
            return T.sub(p[0][1], p[1][1])

        def inv(g):
            z = T.zero()
            return ((0, T.join(g, z)), (0, T.join(T.neg(g), z)))

        return T, iso, inv
    T = Lex(shape.leaves[1:])

    def iso(p):
        return T.sub(flatten(G, p[0])[1:], flatten(G, p[1])[1:])

    def inv(g):
        z = T.zero()
        return (unflatten(G, (0,) + T.join(g, z)), unflatten(G, (0,) + T.join(T.neg(g), z)))

    return T, iso, inv


def d_functor(A: MVAlgebra, samples: int = 1000, seed: int = 1) -> DFunctorResult:
    """The group of radical-pair classes of a perfect algebra, with its laws checked."""
    _require_perfect(A)
    D = DGroup(A)
    rng = random.Random(seed)
    xs = [D.zero()] + [D.sample(rng) for _ in range(samples)]
    n = 0
    for a, b, c in zip(xs, xs[1:] + xs[:1], xs[2:] + xs[:2]):
        n += 1
        checks = (
            D.add(a, D.add(b, c)) == D.add(D.add(a, b), c),
            D.add(a, b) == D.add(b, a),
            D.add(a, D.zero()) == a,
            D.add(a, D.neg(a)) == D.zero(),
            D.neg(a) == D.canon(a[1], a[0]),
            not D.leq(a, b) or D.leq(D.add(a, c), D.add(b, c)),
        )
        if not all(checks):
            raise VerificationError("D(A) fails a group law",
                                    {"a": D.fmt(a), "b": D.fmt(b), "c": D.fmt(c)})
    T, iso, inv = _tail_iso(A)
    if iso is not None:
        for a, b in zip(xs, xs[1:]):
            if inv(iso(a)) != a or iso(D.add(a, b)) != T.add(iso(a), iso(b)):
                raise VerificationError("tail isomorphism fails", {"a": D.fmt(a), "b": D.fmt(b)})
            if (D.sign(a) or 0) != (T.sign(iso(a)) or 0):
                raise VerificationError("tail isomorphism is not monotone", {"a": D.fmt(a)})
    return DFunctorResult(A, D, T, iso, inv, n)


def g_functor(G: OrderedGroup, check: bool = True) -> Gamma:
    """Gamma(Z x_lex G, (1, 0)); with ``check`` the result is classified perfect."""
    if not isinstance(G, OrderedGroup):
        raise UnsupportedShape(f"not a group descriptor: {G!r}")
    A = Gamma(Lex((Integers(), G)), (1, G.zero()))
    if check and not spectra.classify(A).is_perfect:
        raise VerificationError("G(G) is not perfect", {"group": repr(G)})
    return A


@dataclass(frozen=True)
class RoundtripReport:
    kind: str
    source: str
    via: str
    checked: int
    seed: int


def roundtrip_check(X, samples: int = 1000, seed: int = 1) -> RoundtripReport:
    """Verify D(G(G)) = G for a group, or G(D(A)) = A for a perfect algebra.

    Both directions are checked on seeded samples through explicit two-sided
    inverses, and the forward map is checked to be a homomorphism.
    """
    rng = random.Random(seed)
    if isinstance(X, OrderedGroup):
        G = X
        A = g_functor(G)
        res = d_functor(A, samples, seed)
        if res.iso is None:
            raise UnsupportedShape(f"no explicit isomorphism D(G({G!r})) -> {G!r}")
        D, iso, inv = res.group, res.iso, res.iso_inverse
        gs = [G.zero()] + [G.sample(rng) for _ in range(samples)]
        ds = [D.zero()] + [D.sample(rng) for _ in range(samples)]
        for g, h in zip(gs, gs[1:] + gs[:1]):
            if not D.contains(inv(g)) or iso(inv(g)) != g:
                raise VerificationError("D(G(G)) -> G is not onto", {"g": G.fmt(g)})
            if inv(G.add(g, h)) != D.add(inv(g), inv(h)):
                raise VerificationError("G -> D(G(G)) is not additive",
                                        {"g": G.fmt(g), "h": G.fmt(h)})
        for d in ds:
            if inv(iso(d)) != d:
                raise VerificationError("D(G(G)) -> G is not injective", {"d": D.fmt(d)})
        return RoundtripReport("group", repr(G), f"D({A!r})", len(gs) + len(ds), seed)

    A = X
    res = d_functor(A, samples, seed)
    D = res.group
    B = g_functor(D, check=False)
    G = B.group

    def alpha(x):
        if spectra.in_radical(A, x):
            return (0, (x, A.zero()))
        return (1, (A.zero(), A.neg(x)))

    def beta(b):
        head, d = b
        if head == 0:
            return A.minus(d[0], d[1])
        return A.neg(A.minus(d[1], d[0]))

    xs, _ = _test_elements(A, samples, seed)
    for x, y in zip(xs, xs[1:] + xs[:1]):
        ax = alpha(x)
        if not B.contains(ax) or beta(ax) != x:
            raise VerificationError("A -> G(D(A)) has no left inverse", {"x": A.fmt(x)})
        if alpha(A.plus(x, y)) != B.plus(ax, alpha(y)) or alpha(A.neg(x)) != B.neg(ax):
            raise VerificationError("A -> G(D(A)) is not a homomorphism",
                                    {"x": A.fmt(x), "y": A.fmt(y)})
    bs = [B.sample(rng) for _ in range(samples)]
    for b in bs:
        if alpha(beta(b)) != b:
            raise VerificationError("G(D(A)) -> A has no left inverse", {"b": G.fmt(b)})
    return RoundtripReport("algebra", repr(A), repr(B), len(xs) + len(bs), seed)


# ---------------------------------------------------------------------------
# quasi-constant functions

def quasi_constant_algebra(U: MVAlgebra, k: int) -> QuasiConstant:
    return QuasiConstant(U, k)


@dataclass(frozen=True)
class QuasiConstantWitness:
    member: bool
    anchor: Any
    anchor_class: Any
    evidence: tuple
    failing_site: int | None = None


def _require_local_base(U):
    if not spectra.classify(U).is_local:
        raise BaseNotSupported(f"{U!r} is not local")


def is_quasi_constant(U: MVAlgebra, f) -> QuasiConstantWitness:
    """Decide membership of f in K(U^k) with anchor f[0]."""
    _require_local_base(U)
    f = tuple(f)
    for v in f:
        if not U.contains(v):
            raise ElementNotInAlgebra(f"{v!r} is not in {U!r}")
    anchor = f[0]
    _, proj = spectra.quotient(U, spectra.radical(U))
    evidence = []
    for i, v in enumerate(f):
        d = U.dist(v, anchor)
        ok = spectra.in_radical(U, d)
        evidence.append((i, d, ok))
        if not ok:
            return QuasiConstantWitness(False, anchor, proj(anchor), tuple(evidence), i)
    return QuasiConstantWitness(True, anchor, proj(anchor), tuple(evidence))


@dataclass(frozen=True)
class QuasiConstantReport:
    algebra: str
    closure_checked: int
    is_local: bool
    seed: int


def verify_quasi_constant_algebra(U: MVAlgebra, k: int, samples: int = 1000,
                                  seed: int = 1) -> QuasiConstantReport:
    """Closure under 0, negation and sum on samples, then locality."""
    K = quasi_constant_algebra(U, k)
    rng = random.Random(seed)
    if not K.contains(K.zero()):
        raise VerificationError("0 is not quasi-constant", {})
    fs = [K.sample(rng) for _ in range(samples)]
    for f, g in zip(fs, fs[1:] + fs[:1]):
        if not (K.contains(f) and K.contains(K.neg(f)) and K.contains(K.plus(f, g))):
            raise VerificationError("K(U^X) is not closed", {"f": K.fmt(f), "g": K.fmt(g)})
    c = spectra.classify(K, samples=samples, seed=seed)
    if not c.is_local:
        raise VerificationError("K(U^X) is not local", {"algebra": repr(K)})
    return QuasiConstantReport(repr(K), len(fs), c.is_local, seed)


# ---------------------------------------------------------------------------
# separating terms

def _as_rational(v, name):
    try:
        q = Fraction(v)
    except (TypeError, ValueError):
        raise OutOfUnitInterval(f"{name} = {v!r} is not a rational number") from None
    if not 0 <= q <= 1:
        raise OutOfUnitInterval(f"{name} = {q} is outside [0, 1]")
    return q


def separating_stages(x, y) -> list:
    """The doubling/squaring schedule that sends x to 0 and y to 1."""
    a, b = _as_rational(x, "x"), _as_rational(y, "y")
    if not a < b:
        raise NotStrictlyOrdered(f"need x < y, got {a} and {b}")
    half = Fraction(1, 2)
    stages = []
    while not (a == 0 and b == 1):
        if a == 0 or b <= half:
            stages.append("double")
            a, b = min(Fraction(1), 2 * a), min(Fraction(1), 2 * b)
        else:
            stages.append("square")
            a, b = max(Fraction(0), 2 * a - 1), max(Fraction(0), 2 * b - 1)
    return stages


def stage_bound(x, y) -> int:
    """2 * ceil(log2(1 / (y - x))) + 4, in integer arithmetic."""
    gap = Fraction(y) - Fraction(x)
    k = 0
    while (gap.numerator << k) < gap.denominator:
        k += 1
    return 2 * k + 4


def build_term(stages, var: str = "x"):
    t = Var(var)
    for st in stages:
        if st == "double":
            t = Plus(t, t)
        else:
            n = Neg(t)
            t = Neg(Plus(n, n))
    return t


def separating_term(x, y, var: str = "x"):
    """A one-variable term worth exactly 0 at x and 1 at y."""
    stages = separating_stages(x, y)
    t = build_term(stages, var)
    I = UnitIntervalQ()
    fx = eval_term(I, t, {var: Fraction(x)})
    fy = eval_term(I, t, {var: Fraction(y)})
    if fx != 0 or fy != 1:
        raise VerificationError("separating term misses its targets",
                                {"x": str(x), "y": str(y), "phi(x)": str(fx), "phi(y)": str(fy)})
    if len(stages) > stage_bound(x, y):
        raise VerificationError("stage bound exceeded", {"x": str(x), "y": str(y)})
    return t


# ---------------------------------------------------------------------------
# prime independence of the radical class

def _simple_value(R, v) -> Fraction:
    """Position of v in a simple chain R, as a rational in [0, 1]."""
    if isinstance(R, (FiniteChain, UnitIntervalQ)):
        return Fraction(v)
    if R.is_finite:
        els = R.elements()
        below = sum(1 for w in els if w != v and R.leq(w, v))
        return Fraction(below, len(els) - 1)
    shape = lex_shape(R)
    if shape is not None and shape.tail_count == 0:
        return Fraction(flatten(R.group, v)[0]) / shape.k
    raise UnsupportedShape(f"cannot read off a standard value in {R!r}")


def _standard_part(A, P, cap=spectra.DEFAULT_CAP):
    """x -> (x/P)/Rad(A/P) as a rational."""
    Q, p1 = spectra.quotient(A, P, cap)
    R, p2 = spectra.quotient(Q, spectra.radical(Q, cap), cap)
    return lambda x: _simple_value(R, p2(p1(x)))


@dataclass(frozen=True)
class PropSpecReport:
    algebra: str
    primes: tuple
    checked: int
    strategy: str
    examples: tuple


def verify_prop_spec(A: MVAlgebra, samples: int = 1000, seed: int = 1,
                     cap: int = spectra.DEFAULT_CAP) -> PropSpecReport:
    """For local A, (x/P)/Rad(A/P) does not depend on the prime P."""
    if not spectra.classify(A, cap).is_local:
        raise NotLocal(f"{A!r} is not local")
    primes = spectra.spec(A, cap)
    parts = [_standard_part(A, P, cap) for P in primes]
    xs, strategy = _test_elements(A, samples, seed)
    examples = []
    for x in xs:
        vals = [p(x) for p in parts]
        if len(set(vals)) != 1:
            raise VerificationError("radical class depends on the prime",
                                    {"x": A.fmt(x), "values": [str(v) for v in vals]})
        if len(examples) < 5:
            examples.append((x, vals[0]))
    return PropSpecReport(repr(A), tuple(primes), len(xs), strategy, tuple(examples))


@dataclass(frozen=True)
class PropSpecCounterexample:
    x: Any
    P: Any
    Q: Any
    r: Fraction
    s: Fraction
    term: Any
    phi_x: Any
    ord_phi_x: Any
    ord_neg_phi_x: Any


def prop_spec_counterexample(A: MVAlgebra, samples: int = 1000, seed: int = 1,
                             cap: int = spectra.DEFAULT_CAP):
    """For non-local A: x, primes P, Q with different radical classes, and a
    term phi with phi(x)/P in Rad(A/P), ~phi(x)/Q in Rad(A/Q).

    Returns None when no such x is found (as for local algebras).
    """
    primes = spectra.spec(A, cap)
    parts = [_standard_part(A, P, cap) for P in primes]
    xs, _ = _test_elements(A, samples, seed)
    for x in xs:
        vals = [p(x) for p in parts]
        for i in range(len(primes)):
            for j in range(len(primes)):
                if vals[i] < vals[j]:
                    r, s = vals[i], vals[j]
                    t = separating_term(r, s)
                    z = eval_term(A, t, {"x": x})
                    if parts[i](z) != 0 or parts[j](A.neg(z)) != 0:
                        raise VerificationError("separating term does not transfer", {"x": A.fmt(x)})
                    o1, o2 = spectra.order(A, z), spectra.order(A, A.neg(z))
                    if o1 != spectra.INFINITE or o2 != spectra.INFINITE:
                        raise VerificationError("expected two infinite orders", {"x": A.fmt(x)})
                    return PropSpecCounterexample(x, primes[i], primes[j], r, s, t, z, o1, o2)
    return None


# ---------------------------------------------------------------------------
# local representation (quasi-constant functions into the surrogate)

def _linear_map(leaves, unit, depth):
    """Unital order embedding of lex(leaves) with unit ``unit`` into Q^depth (lex)."""
    if len(leaves) > depth:
        raise UnsupportedShape(
            f"a lex product with {len(leaves)} levels needs surrogate depth >= {len(leaves)}")
    k, s = Fraction(unit[0]), unit[1:]

    def f(flat):
        a = Fraction(flat[0]) / k
        out = [a] + [Fraction(t) - a * si for t, si in zip(flat[1:], s)]
        return tuple(out) + (Fraction(0),) * (depth - len(out))

    return f


def _chain_embedding(Q, depth):
    """Embed a chain Q into Gamma(nonstandard_reals(depth), (1, 0, ...))."""
    pad = (Fraction(0),) * (depth - 1)
    if isinstance(Q, (FiniteChain, UnitIntervalQ)):
        return lambda v: (Fraction(v),) + pad
    shape = lex_shape(Q)
    if shape is not None and not Q.is_finite:
        lin = _linear_map(shape.leaves, shape.unit, depth)
        return lambda v: lin(flatten(Q.group, v))
    if Q.is_finite:
        return lambda v: (_simple_value(Q, v),) + pad
    raise UnsupportedShape(f"no chain embedding for {Q!r}")


def _surrogate_unit(depth):
    return (Fraction(1),) + (Fraction(0),) * (depth - 1)


def local_representation(A: MVAlgebra, depth: int = 2, samples: int = 1000, seed: int = 1,
                         cap: int = spectra.DEFAULT_CAP) -> Embedding:
    """Embed a local algebra into quasi-constant functions Spec A -> surrogate.

    Site P carries x/P embedded into Gamma(nonstandard_reals(depth), 1).  Each
    image is checked to be quasi-constant with anchor class equal to the
    prime-independent radical class of x.
    """
    if not spectra.classify(A, cap).is_local:
        raise NotLocal(f"{A!r} is not local")
    S = nonstandard_reals(depth)
    V = Gamma(S, _surrogate_unit(depth))
    primes = spectra.spec(A, cap)
    target = QuasiConstant(V, len(primes))
    sites = []
    for P in primes:
        Q, proj = spectra.quotient(A, P, cap)
        sites.append((proj, _chain_embedding(Q, depth)))

    def f(x):
        return tuple(e(p(x)) for p, e in sites)

    hom, inj = verify_mv_map(A, target, f, samples, seed)
    std = _standard_part(A, primes[0], cap)
    xs, _ = _test_elements(A, samples, seed)
    for x in xs:
        img = f(x)
        w = is_quasi_constant(V, img)
        if not w.member:
            raise VerificationError("image is not quasi-constant", {"x": A.fmt(x)})
        predicted = std(x)
        if any(v[0] != predicted for v in img):
            raise VerificationError("anchor class differs from the predicted class",
                                    {"x": A.fmt(x), "predicted": str(predicted)})
    notes = (SURROGATE_NOTE.format(depth=depth),)
    return Embedding(A, target, f, hom, inj, tuple(primes), notes,
                     {"depth": depth, "anchor_checked": len(xs)})


# ---------------------------------------------------------------------------
# perfect representation

def _perfect_site_map(Q, depth):
    """Q (perfect chain) -> Gamma(Z x_lex Q^depth, (1, 0)) through G(D(Q))."""
    S = nonstandard_reals(depth)
    if spectra._radical_trivial(Q):
        zero = S.zero()
        return lambda v: (0 if v == Q.zero() else 1, zero)
    res = d_functor(Q, samples=50)
    if res.iso is None:
        raise UnsupportedShape(f"no explicit description of D({Q!r})")
    T, iso = res.tail_group, res.iso
    leaves = lex_leaves(T)
    if leaves is None or len(leaves) > depth:
        raise UnsupportedShape(f"tail group {T!r} does not fit nonstandard_reals({depth})")

    def into_surrogate(g):
        flat = tuple(Fraction(c) for c in flatten(T, g))
        return flat + (Fraction(0),) * (depth - len(flat))

    def site(v):
        if spectra.in_radical(Q, v):
            return (0, into_surrogate(iso((v, Q.zero()))))
        return (1, into_surrogate(iso((Q.zero(), Q.neg(v)))))

    return site


def perfect_representation(A: MVAlgebra, depth: int = 2, samples: int = 1000, seed: int = 1,
                           cap: int = spectra.DEFAULT_CAP) -> Embedding:
    """Embed a perfect algebra into functions Spec A -> Gamma(Z x_lex surrogate, (1, 0))."""
    _require_perfect(A)
    S = nonstandard_reals(depth)
    W = Gamma(Lex((Integers(), S)), (1, S.zero()))
    primes = spectra.spec(A, cap)
    sites = []
    for P in primes:
        Q, proj = spectra.quotient(A, P, cap)
        sites.append((proj, _perfect_site_map(Q, depth)))
    target = FunctionAlgebra(W, len(primes))

    def f(x):
        return tuple(e(p(x)) for p, e in sites)

    hom, inj = verify_mv_map(A, target, f, samples, seed)
    return Embedding(A, target, f, hom, inj, tuple(primes),
                     (SURROGATE_NOTE.format(depth=depth),), {"depth": depth})


# ---------------------------------------------------------------------------
# unital l-group representation

def _truncation_level(G, H, n_leaves):
    if isinstance(H, LZero):
        return n_leaves
    if isinstance(H, TailKernel):
        return H.k
    raise UnsupportedShape(f"prime l-ideal {H!r} is not a tail kernel")


def group_qc_representation(G: OrderedGroup, u, depth: int = 2, samples: int = 1000,
                            seed: int = 1, cap: int = spectra.DEFAULT_CAP) -> Embedding:
    """Embed a local unital l-group into quasi-constant functions into the surrogate.

    Site P sends x to the image of x modulo phi(P) under the unital linear
    embedding into Q^depth; on [0, u] this agrees with local_representation.
    """
    if not lgroup_is_local(G, u):
        raise NotLocal(f"({G!r}, {u!r}) is not local")
    leaves = lex_leaves(G)
    if not leaves:
        raise UnsupportedShape(f"{G!r} is not a lex product of Z and Q")
    A = gamma(G, u)
    mv = local_representation(A, depth, samples, seed, cap)
    uflat = flatten(G, u)
    maps = []
    for P in mv.index:
        level = _truncation_level(G, ideal_phi(A, P), len(leaves))
        maps.append((level, _linear_map(leaves[:level], uflat[:level], depth)))
    S = nonstandard_reals(depth)
    target = QuasiConstantGroup(S, len(maps), TailKernel(1))
    unit = target.constant(_surrogate_unit(depth))

    def f(x):
        flat = flatten(G, x)
        return tuple(lin(flat[:level]) for level, lin in maps)

    rng = random.Random(seed)
    xs = [G.zero(), u] + [G.sample(rng) for _ in range(samples)]
    if f(u) != unit or f(G.zero()) != target.zero():
        raise VerificationError("unit or zero is not preserved", {})
    seen = {}
    for x, y in zip(xs, xs[1:] + xs[:1]):
        fx, fy = f(x), f(y)
        if not target.contains(fx):
            raise VerificationError("image is not quasi-constant", {"x": G.fmt(x)})
        if f(G.add(x, y)) != target.add(fx, fy) or f(G.neg(x)) != target.neg(fx):
            raise VerificationError("not a group homomorphism", {"x": G.fmt(x), "y": G.fmt(y)})
        if G.leq(x, y) != target.leq(fx, fy):
            raise VerificationError("order is not preserved", {"x": G.fmt(x), "y": G.fmt(y)})
        if fx in seen and seen[fx] != x:
            raise VerificationError("not injective", {"x": G.fmt(x)})
        seen[fx] = x
    ys, _ = _test_elements(A, samples, seed)
    for y in ys:
        if f(y) != mv(y):
            raise VerificationError("disagrees with the MV-algebra embedding", {"x": A.fmt(y)})
    ver = Verification("sampled", len(xs) + len(ys), seed)
    return Embedding((G, u), (target, unit), f, ver, Verification("sampled", len(seen), seed),
                     mv.index, mv.notes, {"depth": depth, "mv_embedding": mv})


__all__ = [
    "Embedding", "Verification", "verify_mv_map", "chang_embedding",
    "DGroup", "DFunctorResult", "d_functor", "g_functor", "roundtrip_check", "RoundtripReport",
    "quasi_constant_algebra", "is_quasi_constant", "QuasiConstantWitness",
    "verify_quasi_constant_algebra", "QuasiConstantReport",
    "separating_stages", "separating_term", "stage_bound", "build_term",
    "verify_prop_spec", "PropSpecReport", "prop_spec_counterexample", "PropSpecCounterexample",
    "local_representation", "perfect_representation", "group_qc_representation",
    "nonstandard_reals",
]
