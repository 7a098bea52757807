"""Concrete MV-algebras, their element arithmetic and MV-terms.

Every algebra is an immutable descriptor exposing the primitive operations
``plus`` (the truncated sum) and ``neg``; the derived operations are obtained
from those by their textbook expansions and are never special-cased, so a
descriptor is only ever as correct as its two primitives.

Public entry points (``mv_plus``, ``mv_neg``, ``mv_times`` ...) validate their
arguments; the descriptor methods do not.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Mapping

import numpy as np

from .errors import (BaseNotSupported, ElementNotInAlgebra, EmptyProduct,
                     InfiniteCarrierExhaustive, InvalidUnit, ShapeMismatch,
                     UnboundVariable, UnsupportedQuotient, UnsupportedShape)
from .groups import Integers, Lex, OrderedGroup, fmt_number, fmt_value


# ---------------------------------------------------------------------------
# ideal descriptors (operated on by ``spectra``; declared here because
# quotient algebras carry one)

@dataclass(frozen=True)
class ExplicitIdeal:
    elements: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))

    def __repr__(self):
        return "{" + ", ".join(fmt_value(e) for e in sorted(self.elements)) + "}"

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class SymbolicIdeal:
    """Named ideal of a structured algebra.

    ``tag`` is one of ``zero``, ``radical``, ``whole`` or ``tail``; a ``tail``
    ideal of a Gamma-of-lex algebra holds the elements whose first ``level``
    flattened coordinates vanish (``radical`` is the level-1 case).
    """

    tag: str
    level: int = 0

    def __repr__(self):
        return f"tail({self.level})" if self.tag == "tail" else self.tag


@dataclass(frozen=True)
class ProductIdeal:
    """Product of one ideal per factor of a product algebra."""

    parts: tuple

    def __repr__(self):
        return "prod(" + ", ".join(map(repr, self.parts)) + ")"


ZERO_IDEAL = SymbolicIdeal("zero")
RADICAL = SymbolicIdeal("radical")
WHOLE = SymbolicIdeal("whole")


# ---------------------------------------------------------------------------
# algebra descriptors

class MVAlgebra:
    """Common behaviour; subclasses supply zero/one/plus/neg/contains."""

    is_finite = False

    def validate(self):
        return self

    def zero(self):
        raise NotImplementedError

    def one(self):
        return self.neg(self.zero())

    def contains(self, x) -> bool:
        raise NotImplementedError

    def plus(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    # derived operations, expanded into plus/neg exactly
    def times(self, x, y):
        return self.neg(self.plus(self.neg(x), self.neg(y)))

    def minus(self, x, y):
        return self.times(x, self.neg(y))

    def join(self, x, y):
        return self.plus(self.minus(x, y), y)

    def meet(self, x, y):
        return self.times(x, self.plus(self.neg(x), y))

    def dist(self, x, y):
        return self.plus(self.minus(x, y), self.minus(y, x))

    def leq(self, x, y) -> bool:
        return self.minus(x, y) == self.zero()

    def multiple(self, n: int, x):
        acc = self.zero()
        for _ in range(n):
            acc = self.plus(acc, x)
        return acc

    def elements(self) -> tuple:
        raise InfiniteCarrierExhaustive(f"{self!r} has an infinite carrier")

    @property
    def size(self) -> int:
        return len(self.elements())

    def sample(self, rng: random.Random):
        return rng.choice(self.elements())

    def coerce(self, v):
        raise NotImplementedError

    def fmt(self, x) -> str:
        return fmt_value(x)


def _is_rational(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True)
class FiniteChain(MVAlgebra):
    """The Lukasiewicz chain {0, 1/(n-1), ..., 1}."""

    n: int

    is_finite = True

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidUnit(f"chain size must be an integer >= 2, got {self.n!r}")
        return self

    def __repr__(self):
        return f"chain({self.n})"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def contains(self, x):
        return _is_rational(x) and 0 <= x <= 1 and (self.n - 1) % x.denominator == 0

    def plus(self, x, y):
        return min(Fraction(1), x + y)

    def neg(self, x):
        return 1 - x

    @functools.cached_property
    def _elements(self):
        return tuple(Fraction(i, self.n - 1) for i in range(self.n))

    def elements(self):
        return self._elements

    @property
    def size(self):
        return self.n

    def sample(self, rng):
        return Fraction(rng.randint(0, self.n - 1), self.n - 1)

    def coerce(self, v):
        x = Fraction(v) if not isinstance(v, (tuple, list)) else None
        if x is None or not self.contains(x):
            raise ElementNotInAlgebra(f"{fmt_value(v)} is not in {self!r}")
        return x

    def fmt(self, x):
        return fmt_number(x)


@dataclass(frozen=True)
class UnitIntervalQ(MVAlgebra):
    """Rational points of [0, 1] with truncated addition."""

    def __repr__(self):
        return "unitQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def contains(self, x):
        return _is_rational(x) and 0 <= x <= 1

    def plus(self, x, y):
        return min(Fraction(1), x + y)

    def neg(self, x):
        return 1 - x

    def sample(self, rng):
        r = rng.random()
        if r < 0.08:
            return Fraction(0)
        if r < 0.16:
            return Fraction(1)
        d = rng.randint(1, 60) if r < 0.9 else rng.randint(61, 10**6)
        return Fraction(rng.randint(0, d), d)

    def coerce(self, v):
        x = Fraction(v) if not isinstance(v, (tuple, list)) else None
        if x is None or not self.contains(x):
            raise ElementNotInAlgebra(f"{fmt_value(v)} is not in {self!r}")
        return x

    def fmt(self, x):
        return fmt_number(x)


class _Pointwise(MVAlgebra):
    """Tuples with coordinatewise operations."""

    @property
    def factors(self) -> tuple:
        raise NotImplementedError

    @property
    def is_finite(self):
        return all(f.is_finite for f in self.factors)

    def zero(self):
        return tuple(f.zero() for f in self.factors)

    def one(self):
        return tuple(f.one() for f in self.factors)

    def _shape_ok(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(f.contains(v) for f, v in zip(self.factors, x)))

    def contains(self, x):
        return self._shape_ok(x)

    def plus(self, x, y):
        return tuple(f.plus(a, b) for f, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def elements(self):
        if not self.is_finite:
            raise InfiniteCarrierExhaustive(f"{self!r} has an infinite carrier")
        return _pointwise_elements(self)

    def sample(self, rng):
        if self.is_finite and _finite_size(self) <= 4096:
            return rng.choice(self.elements())
        return tuple(f.sample(rng) for f in self.factors)

    def _coerce_parts(self, v):
        if not isinstance(v, (tuple, list)) or len(v) != len(self.factors):
            raise ElementNotInAlgebra(
                f"{fmt_value(v)} does not have {len(self.factors)} coordinates")
        return tuple(f.coerce(a) for f, a in zip(self.factors, v))

    def coerce(self, v):
        return self._coerce_parts(v)


def _finite_size(A):
    if isinstance(A, _Pointwise):
        out = 1
        for f in A.factors:
            out *= _finite_size(f)
        return out
    return A.size


@functools.lru_cache(maxsize=256)
def _pointwise_elements(A):
    return tuple(sorted(itertools.product(*(f.elements() for f in A.factors))))


@dataclass(frozen=True)
class FiniteProduct(_Pointwise):
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        self.validate()

    def validate(self):
        if not self.components:
            raise EmptyProduct("a product needs at least one factor")
        return self

    def __repr__(self):
        return "product(" + ", ".join(map(repr, self.components)) + ")"

    @property
    def factors(self):
        return self.components

    def fmt(self, x):
        return "(" + ", ".join(f.fmt(v) for f, v in zip(self.factors, x)) + ")"


@dataclass(frozen=True)
class FunctionAlgebra(_Pointwise):
    """All functions from ``sites`` abstract points into ``base``."""

    base: MVAlgebra
    sites: int

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not isinstance(self.sites, int) or self.sites < 1:
            raise ValueError("a function algebra needs at least one site")
        return self

    def __repr__(self):
        return f"power({self.base!r}, {self.sites})"

    @property
    def factors(self):
        return (self.base,) * self.sites

    def fmt(self, x):
        return "[" + ", ".join(self.base.fmt(v) for v in x) + "]"


@dataclass(frozen=True)
class QuasiConstant(_Pointwise):
    """Functions into ``base`` whose values share one class modulo Rad(base)."""

    base: MVAlgebra
    sites: int

    def __post_init__(self):
        self.validate()

    def validate(self):
        from .spectra import classify

        if not isinstance(self.sites, int) or self.sites < 1:
            raise ValueError("a quasi-constant algebra needs at least one site")
        if not classify(self.base).is_local:
            raise BaseNotSupported(
                f"quasi-constant functions need a local base algebra, {self.base!r} is not")
        return self

    def __repr__(self):
        return f"quasiconst({self.base!r}, {self.sites})"

    @property
    def factors(self):
        return (self.base,) * self.sites

    def contains(self, x):
        from .spectra import in_radical

        if not self._shape_ok(x):
            return False
        return all(in_radical(self.base, self.base.dist(v, x[0])) for v in x[1:])

    def elements(self):
        if not self.base.is_finite:
            raise InfiniteCarrierExhaustive(f"{self!r} has an infinite carrier")
        return tuple(f for f in _pointwise_elements(self) if self.contains(f))

    def sample(self, rng):
        from .spectra import sample_radical

        a = self.base.sample(rng)
        if rng.random() < 0.1:
            return (a,) * self.sites
        out = [a]
        for _ in range(self.sites - 1):
            r, s = sample_radical(self.base, rng), sample_radical(self.base, rng)
            out.append(self.base.minus(self.base.plus(a, r), s))
        rng.shuffle(out)
        return tuple(out)

    def coerce(self, v):
        f = self._coerce_parts(v)
        if not self.contains(f):
            raise ElementNotInAlgebra(f"{self.fmt(f)} is not quasi-constant over {self.base!r}")
        return f

    def fmt(self, x):
        return "[" + ", ".join(self.base.fmt(v) for v in x) + "]"


@dataclass(frozen=True)
class Gamma(MVAlgebra):
    """The unit interval [0, u] of a lattice-ordered group."""

    group: OrderedGroup
    unit: Any

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not self.group.contains(self.unit):
            raise InvalidUnit(f"{fmt_value(self.unit)} is not an element of {self.group!r}")
        if self.group.sign(self.unit) != 1:
            raise InvalidUnit(f"unit {fmt_value(self.unit)} is not strictly positive")
        return self

    def __repr__(self):
        return f"gamma({self.group!r}, {self.group.fmt(self.unit)})"

    @functools.cached_property
    def _carrier(self):
        els = self.group.interval(self.group.zero(), self.unit)
        return None if els is None else tuple(sorted(els))

    @property
    def is_finite(self):
        return self._carrier is not None

    def zero(self):
        return self.group.zero()

    def one(self):
        return self.unit

    def contains(self, x):
        G = self.group
        return G.contains(x) and G.leq(G.zero(), x) and G.leq(x, self.unit)

    def plus(self, x, y):
        return self.group.meet(self.unit, self.group.add(x, y))

    def neg(self, x):
        return self.group.sub(self.unit, x)

    def elements(self):
        if self._carrier is None:
            raise InfiniteCarrierExhaustive(f"{self!r} has an infinite carrier")
        return self._carrier

    def sample(self, rng):
        if self._carrier is not None:
            return rng.choice(self._carrier)
        return self.group.sample_interval(self.group.zero(), self.unit, rng)

    def coerce(self, v):
        try:
            x = self.group.coerce(v)
        except ShapeMismatch as exc:
            raise ElementNotInAlgebra(str(exc)) from None
        if not self.contains(x):
            raise ElementNotInAlgebra(f"{fmt_value(v)} is not in {self!r}")
        return x

    def fmt(self, x):
        return self.group.fmt(x)


@dataclass(frozen=True)
class Quotient(MVAlgebra):
    """Finite quotient A/I; elements are canonical (least) class representatives."""

    base: MVAlgebra
    ideal: ExplicitIdeal

    is_finite = True

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not self.base.is_finite:
            raise UnsupportedQuotient("explicit quotients need a finite base algebra")
        if not isinstance(self.ideal, ExplicitIdeal):
            raise UnsupportedQuotient("explicit quotients need an explicit ideal")
        from .spectra import explicit_ideal_violation

        bad = explicit_ideal_violation(self.base, self.ideal)
        if bad is not None:
            raise UnsupportedQuotient(f"{self.ideal!r} is not an ideal of {self.base!r}: {bad}")
        return self

    def __repr__(self):
        return f"quotient({self.base!r}, {self.ideal!r})"

    @functools.cached_property
    def _classes(self):
        # representative index for each base element, via the base Cayley tables
        T = tables(self.base)
        P, N = T.plus, T.neg
        r = np.arange(len(T.elements))
        m = N[P[N[r][:, None], r[None, :]]]          # x (-) y
        dist = P[m, m.T]
        in_ideal = np.isin(dist, [T.index[e] for e in self.ideal.elements])
        rep = np.empty(len(r), dtype=np.int64)
        for i in r:
            rep[i] = min(np.flatnonzero(in_ideal[i]), key=lambda j: T.elements[j])
        return T, rep

    @functools.cached_property
    def _canon(self) -> dict:
        T, rep = self._classes
        return {e: T.elements[rep[i]] for i, e in enumerate(T.elements)}

    def canon(self, x):
        return self._canon[x]

    def zero(self):
        return self._canon[self.base.zero()]

    def contains(self, x):
        return self.base.contains(x) and self._canon[x] == x

    def plus(self, x, y):
        T, rep = self._classes
        return T.elements[rep[T.plus[T.index[x], T.index[y]]]]

    def neg(self, x):
        T, rep = self._classes
        return T.elements[rep[T.neg[T.index[x]]]]

    def elements(self):
        return tuple(sorted(set(self._canon.values())))

    def coerce(self, v):
        return self._canon[self.base.coerce(v)]

    def fmt(self, x):
        return self.base.fmt(x)


@dataclass(frozen=True)
class TableAlgebra(MVAlgebra):
    """An algebra given by explicit Cayley tables over a list of labels.

    No axioms are enforced; this is how corrupted or hand-built structures are
    fed to ``check_axioms``.
    """

    labels: tuple
    plus_table: tuple
    neg_table: tuple
    zero_index: int = 0

    is_finite = True

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "plus_table", tuple(tuple(r) for r in self.plus_table))
        object.__setattr__(self, "neg_table", tuple(self.neg_table))
        n = len(self.labels)
        if (len(self.plus_table) != n or any(len(r) != n for r in self.plus_table)
                or len(self.neg_table) != n):
            raise ShapeMismatch("Cayley tables must be n x n and n")

    def __repr__(self):
        return f"table({len(self.labels)})"

    @functools.cached_property
    def _index(self):
        return {v: i for i, v in enumerate(self.labels)}

    def zero(self):
        return self.labels[self.zero_index]

    def contains(self, x):
        try:
            return x in self._index
        except TypeError:
            return False

    def plus(self, x, y):
        return self.labels[self.plus_table[self._index[x]][self._index[y]]]

    def neg(self, x):
        return self.labels[self.neg_table[self._index[x]]]

    def elements(self):
        return self.labels

    def coerce(self, v):
        for lab in self.labels:
            if lab == v:
                return lab
        raise ElementNotInAlgebra(f"{fmt_value(v)} is not a label of {self!r}")

    @classmethod
    def from_algebra(cls, A: MVAlgebra, overrides: Mapping | None = None) -> "TableAlgebra":
        """Tabulate a finite algebra; ``overrides`` maps (x, y) pairs to forced sums."""
        els = A.elements()
        idx = {e: i for i, e in enumerate(els)}
        plus = [[idx[A.plus(a, b)] for b in els] for a in els]
        for (a, b), v in (overrides or {}).items():
            plus[idx[a]][idx[b]] = idx[v]
        neg = [idx[A.neg(a)] for a in els]
        return cls(els, plus, neg, idx[A.zero()])


# ---------------------------------------------------------------------------
# constructors

def make_algebra(desc: MVAlgebra) -> MVAlgebra:
    """Validate a descriptor and hand it back."""
    if not isinstance(desc, MVAlgebra):
        raise TypeError(f"not an algebra descriptor: {desc!r}")
    return desc.validate()


def komori(n: int) -> Gamma:
    if n < 2:
        raise ValueError("Komori chains have rank >= 2")
    return Gamma(Lex((Integers(), Integers())), (n - 1, 0))


def chang() -> Gamma:
    return komori(2)


def lukasiewicz(n: int) -> FiniteChain:
    return FiniteChain(n)


# ---------------------------------------------------------------------------
# validated element operations

def _check(A: MVAlgebra, *xs):
    for x in xs:
        if not A.contains(x):
            raise ElementNotInAlgebra(f"{fmt_value(x)} is not an element of {A!r}")


def mv_plus(A, x, y):
    _check(A, x, y)
    return A.plus(x, y)


def mv_neg(A, x):
    _check(A, x)
    return A.neg(x)


def mv_times(A, x, y):
    _check(A, x, y)
    return A.times(x, y)


def mv_minus(A, x, y):
    _check(A, x, y)
    return A.minus(x, y)


def mv_join(A, x, y):
    _check(A, x, y)
    return A.join(x, y)


def mv_meet(A, x, y):
    _check(A, x, y)
    return A.meet(x, y)


def mv_dist(A, x, y):
    _check(A, x, y)
    return A.dist(x, y)


def mv_leq(A, x, y) -> bool:
    _check(A, x, y)
    return A.leq(x, y)


DERIVED_OPS = {
    "times": MVAlgebra.times,
    "minus": MVAlgebra.minus,
    "join": MVAlgebra.join,
    "meet": MVAlgebra.meet,
    "dist": MVAlgebra.dist,
}


def mv_derived(A, op: str, x, y):
    if op not in DERIVED_OPS:
        raise ValueError(f"unknown derived operation {op!r}")
    _check(A, x, y)
    return getattr(A, op)(x, y)


# ---------------------------------------------------------------------------
# Cayley tables for finite algebras

@dataclass(frozen=True)
class Tables:
    elements: tuple
    index: dict = field(repr=False)
    plus: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    zero: int
    one: int

    @functools.cached_property
    def leq(self) -> np.ndarray:
        # x <= y  iff  x (-) y = neg(neg x + y) = 0
        m = self.neg[self.plus[self.neg]]
        return m == self.zero


@functools.lru_cache(maxsize=512)
def tables(A: MVAlgebra) -> Tables:
    els = A.elements()
    idx = {e: i for i, e in enumerate(els)}
    if isinstance(A, TableAlgebra):
        plus = np.array(A.plus_table, dtype=np.int64)
        neg = np.array(A.neg_table, dtype=np.int64)
    else:
        plus = np.array([[idx[A.plus(a, b)] for b in els] for a in els], dtype=np.int64)
        neg = np.array([idx[A.neg(a)] for a in els], dtype=np.int64)
    z = idx[A.zero()]
    return Tables(els, idx, plus, neg, z, int(neg[z]))


# ---------------------------------------------------------------------------
# terms

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Neg:
    child: Any


@dataclass(frozen=True)
class Plus:
    left: Any
    right: Any


Term = Any  # Var | Zero | Neg | Plus


def One():
    return Neg(Zero())


def Times(a, b):
    return Neg(Plus(Neg(a), Neg(b)))


def Minus(a, b):
    return Times(a, Neg(b))


def Join(a, b):
    return Plus(Minus(a, b), b)


def Meet(a, b):
    return Times(a, Plus(Neg(a), b))


def term_vars(t) -> set:
    out, seen, stack = set(), set(), [t]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, Neg):
            stack.append(node.child)
        elif isinstance(node, Plus):
            stack.extend((node.left, node.right))
    return out


def term_size(t) -> int:
    """Number of distinct nodes (shared subterms counted once)."""
    seen, stack = set(), [t]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if isinstance(node, Neg):
            stack.append(node.child)
        elif isinstance(node, Plus):
            stack.extend((node.left, node.right))
    return len(seen)


def eval_term(A: MVAlgebra, t, env: Mapping[str, Any]):
    """Evaluate ``t`` in ``A``; shared subterms are evaluated once."""
    for name in term_vars(t):
        if name not in env:
            raise UnboundVariable(name)
    _check(A, *(env[name] for name in term_vars(t)))
    memo: dict[int, Any] = {}

    def ev(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Var):
            v = env[node.name]
        elif isinstance(node, Zero):
            v = A.zero()
        elif isinstance(node, Neg):
            v = A.neg(ev(node.child))
        elif isinstance(node, Plus):
            v = A.plus(ev(node.left), ev(node.right))
        else:
            raise TypeError(f"not a term node: {node!r}")
        memo[key] = v
        return v

    return ev(t)


# ---------------------------------------------------------------------------
# axiom verification

AXIOMS = (
    (1, "x + (y + z) = (x + y) + z"),
    (2, "x + y = y + x"),
    (3, "x + 0 = x"),
    (4, "~~x = x"),
    (5, "x + ~0 = ~0"),
    (6, "~(~x + y) + y = ~(~y + x) + x"),
)
_AXIOM_VARS = {1: "xyz", 2: "xy", 3: "x", 4: "x", 5: "x", 6: "xy"}


@dataclass(frozen=True)
class Exhaustive:
    def __str__(self):
        return "exhaustive"


@dataclass(frozen=True)
class Sampled:
    count: int = 1000
    seed: int = 1

    def __str__(self):
        return f"sampled({self.count}, seed={self.seed})"


@dataclass(frozen=True)
class AxiomResult:
    axiom: int
    statement: str
    passed: bool
    checked: int
    witness: dict | None = None


@dataclass(frozen=True)
class AxiomReport:
    algebra: str
    strategy: Any
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]


def _axiom_sides(A, k, x, y, z):
    p, n = A.plus, A.neg
    if k == 1:
        return p(x, p(y, z)), p(p(x, y), z)
    if k == 2:
        return p(x, y), p(y, x)
    if k == 3:
        return p(x, A.zero()), x
    if k == 4:
        return n(n(x)), x
    if k == 5:
        return p(x, n(A.zero())), n(A.zero())
    return p(n(p(n(x), y)), y), p(n(p(n(y), x)), x)


def _exhaustive_axioms(A) -> list:
    T = tables(A)
    P, N, z = T.plus, T.neg, T.zero
    n = len(T.elements)
    r = np.arange(n)
    x, y, w = r[:, None, None], r[None, :, None], r[None, None, :]
    sides = {
        1: (P[x, P[y, w]], P[P[x, y], w]),
        2: (P[x, y], P[y, x]),
        3: (P[x, z], x),
        4: (N[N[x]], x),
        5: (P[x, N[z]], np.full((1, 1, 1), N[z])),
        6: (P[N[P[N[x], y]], y], P[N[P[N[y], x]], x]),
    }
    shape = (n, n, n)
    out = []
    for k, stmt in AXIOMS:
        lhs, rhs = (np.broadcast_to(s, shape) for s in sides[k])
        bad = np.argwhere(lhs != rhs)
        witness = None
        if len(bad):
            i, j, l = (int(v) for v in bad[0])
            vals = dict(zip("xyz", (T.elements[i], T.elements[j], T.elements[l])))
            witness = {v: A.fmt(vals[v]) for v in _AXIOM_VARS[k]}
            witness["lhs"] = A.fmt(T.elements[int(lhs[i, j, l])])
            witness["rhs"] = A.fmt(T.elements[int(rhs[i, j, l])])
        out.append(AxiomResult(k, stmt, witness is None, n ** 3, witness))
    return out


def _sampled_axioms(A, count, seed) -> list:
    rng = random.Random(seed)
    triples = [(A.sample(rng), A.sample(rng), A.sample(rng)) for _ in range(count)]
    out = []
    for k, stmt in AXIOMS:
        witness = None
        for x, y, z in triples:
            lhs, rhs = _axiom_sides(A, k, x, y, z)
            if lhs != rhs:
                vals = {"x": x, "y": y, "z": z}
                witness = {v: A.fmt(vals[v]) for v in _AXIOM_VARS[k]}
                witness["lhs"], witness["rhs"] = A.fmt(lhs), A.fmt(rhs)
                break
        out.append(AxiomResult(k, stmt, witness is None, count, witness))
    return out


def check_axioms(A: MVAlgebra, strategy=None) -> AxiomReport:
    """Check the six defining equations on all triples or on seeded samples."""
    if strategy is None:
        strategy = Exhaustive() if A.is_finite else Sampled()
    if isinstance(strategy, Exhaustive):
        if not A.is_finite:
            raise InfiniteCarrierExhaustive(f"cannot check {A!r} exhaustively")
        results = _exhaustive_axioms(A)
    elif isinstance(strategy, Sampled):
        results = _sampled_axioms(A, strategy.count, strategy.seed)
    else:
        raise TypeError(f"unknown strategy {strategy!r}")
    return AxiomReport(repr(A), strategy, tuple(results))
