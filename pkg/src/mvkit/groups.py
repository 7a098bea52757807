"""Partially ordered abelian groups with exact arithmetic.

Elements are plain Python values: ``int`` for the integers, ``Fraction`` for
the rationals and tuples for lexicographic and direct products.  Group
descriptors are frozen dataclasses, so they hash and compare structurally and
can be shared freely between threads.

The module also holds the small catalogue of l-ideals used elsewhere
(``LZero``, ``LWhole``, ``TailKernel``, ``DirectIdeal``).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .errors import ShapeMismatch, UnsupportedShape

_SMALL_DENOMS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 25, 60)


def _is_int(v: Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def fmt_number(v) -> str:
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def fmt_value(v) -> str:
    """Render a nested value using the literal syntax of the spec-file DSL."""
    if isinstance(v, tuple):
        return "(" + ", ".join(fmt_value(c) for c in v) + ")"
    if isinstance(v, list):
        return "[" + ", ".join(fmt_value(c) for c in v) + "]"
    return fmt_number(v)


class OrderedGroup:
    """Interface shared by all group descriptors.

    ``sign`` returns 1, 0 or -1, or ``None`` when the element is incomparable
    with zero.  Everything else is derived from ``add``/``neg``/``sign``.
    """

    is_total = True
    is_divisible = False
    is_trivial = False

    def contains(self, x) -> bool:
        raise NotImplementedError

    def zero(self):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sign(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def cmp(self, x, y):
        return self.sign(self.sub(x, y))

    def leq(self, x, y) -> bool:
        s = self.cmp(x, y)
        return s is not None and s <= 0

    def lt(self, x, y) -> bool:
        return self.cmp(x, y) == -1

    def meet(self, x, y):
        s = self.cmp(x, y)
        if s is None:
            raise UnsupportedShape(f"{self!r}: no meet for incomparable elements")
        return x if s <= 0 else y

    def join(self, x, y):
        s = self.cmp(x, y)
        if s is None:
            raise UnsupportedShape(f"{self!r}: no join for incomparable elements")
        return y if s <= 0 else x

    def abs(self, x):
        return self.join(x, self.neg(x))

    def scale(self, n: int, x):
        acc = self.zero()
        step = x if n >= 0 else self.neg(x)
        for _ in range(abs(n)):
            acc = self.add(acc, step)
        return acc

    def divide(self, x, n: int):
        raise UnsupportedShape(f"{self!r} is not divisible")

    def sample(self, rng: random.Random):
        raise NotImplementedError

    def sample_nonneg(self, rng: random.Random):
        return self.abs(self.sample(rng))

    def sample_interval(self, lo, hi, rng: random.Random):
        # generic fallback: shift lo upwards and keep it if it stays below hi
        for _ in range(8):
            cand = self.add(lo, self.sample_nonneg(rng))
            if self.leq(cand, hi):
                return cand
        return lo

    def interval(self, lo, hi):
        """Elements of [lo, hi] as a tuple, or None when the interval is infinite."""
        return None

    def coerce(self, v):
        raise NotImplementedError

    def fmt(self, x) -> str:
        return fmt_value(x)


@dataclass(frozen=True)
class Integers(OrderedGroup):
    def __repr__(self):
        return "Z"

    def contains(self, x):
        return _is_int(x)

    def zero(self):
        return 0

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def sub(self, x, y):
        return x - y

    def sign(self, x):
        return (x > 0) - (x < 0)

    def cmp(self, x, y):
        return (x > y) - (x < y)

    def leq(self, x, y):
        return x <= y

    def meet(self, x, y):
        return min(x, y)

    def join(self, x, y):
        return max(x, y)

    def abs(self, x):
        return abs(x)

    def scale(self, n, x):
        return n * x

    def divide(self, x, n):
        if x % n:
            raise UnsupportedShape(f"{x} is not divisible by {n} in Z")
        return x // n

    def sample(self, rng):
        r = rng.random()
        if r < 0.15:
            return 0
        if r < 0.8:
            return rng.randint(-12, 12)
        return rng.randint(-10**6, 10**6)

    def sample_interval(self, lo, hi, rng):
        r = rng.random()
        if r < 0.1:
            return lo
        if r < 0.2:
            return hi
        return rng.randint(lo, hi)

    def interval(self, lo, hi):
        return tuple(range(lo, hi + 1))

    def coerce(self, v):
        if _is_int(v):
            return v
        if isinstance(v, Fraction) and v.denominator == 1:
            return v.numerator
        raise ShapeMismatch(f"{fmt_value(v)} is not an integer")


@dataclass(frozen=True)
class Rationals(OrderedGroup):
    is_divisible = True

    def __repr__(self):
        return "Q"

    def contains(self, x):
        return isinstance(x, Fraction)

    def zero(self):
        return Fraction(0)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def sub(self, x, y):
        return x - y

    def sign(self, x):
        return (x > 0) - (x < 0)

    def cmp(self, x, y):
        return (x > y) - (x < y)

    def leq(self, x, y):
        return x <= y

    def meet(self, x, y):
        return min(x, y)

    def join(self, x, y):
        return max(x, y)

    def abs(self, x):
        return abs(x)

    def scale(self, n, x):
        return n * x

    def divide(self, x, n):
        return x / n

    def sample(self, rng):
        r = rng.random()
        if r < 0.15:
            return Fraction(0)
        if r < 0.8:
            return Fraction(rng.randint(-40, 40), rng.choice(_SMALL_DENOMS))
        return Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))

    def sample_interval(self, lo, hi, rng):
        if lo == hi:
            return lo
        d = rng.randint(1, 24)
        return lo + (hi - lo) * Fraction(rng.randint(0, d), d)

    def interval(self, lo, hi):
        if lo == hi:
            return (lo,)
        if lo > hi:
            return ()
        return None

    def coerce(self, v):
        if _is_int(v) or isinstance(v, Fraction):
            return Fraction(v)
        raise ShapeMismatch(f"{fmt_value(v)} is not a rational")


class _TupleGroup(OrderedGroup):
    """Shared plumbing for groups whose elements are fixed-length tuples."""

    components: tuple

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.components)
                and all(c.contains(v) for c, v in zip(self.components, x)))

    def zero(self):
        return tuple(c.zero() for c in self.components)

    def add(self, x, y):
        return tuple(c.add(a, b) for c, a, b in zip(self.components, x, y))

    def neg(self, x):
        return tuple(c.neg(a) for c, a in zip(self.components, x))

    def sub(self, x, y):
        return tuple(c.sub(a, b) for c, a, b in zip(self.components, x, y))

    def scale(self, n, x):
        return tuple(c.scale(n, a) for c, a in zip(self.components, x))

    def divide(self, x, n):
        return tuple(c.divide(a, n) for c, a in zip(self.components, x))

    @property
    def is_divisible(self):
        return all(c.is_divisible for c in self.components)

    @property
    def is_trivial(self):
        return all(c.is_trivial for c in self.components)

    def sample(self, rng):
        return tuple(c.sample(rng) for c in self.components)

    def coerce(self, v):
        if not isinstance(v, (tuple, list)) or len(v) != len(self.components):
            raise ShapeMismatch(
                f"{fmt_value(v)} does not have {len(self.components)} coordinates")
        return tuple(c.coerce(a) for c, a in zip(self.components, v))


@dataclass(frozen=True)
class Lex(_TupleGroup):
    """Lexicographic product; the first component is the most significant."""

    components: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __repr__(self):
        return "lex(" + ", ".join(map(repr, self.components)) + ")"

    @property
    def is_total(self):
        return all(c.is_total for c in self.components)

    def sign(self, x):
        for c, v in zip(self.components, x):
            s = c.sign(v)
            if s != 0:
                return s
        return 0

    def _pick(self, x, y, want_min):
        out = []
        for i, c in enumerate(self.components):
            s = c.cmp(x[i], y[i])
            if s is None:
                # equal prefix, incomparable coordinate: only a lattice op
                # when this is the last coordinate
                if i != len(self.components) - 1:
                    raise UnsupportedShape(f"{self!r}: lex product is not a lattice here")
                out.append(c.meet(x[i], y[i]) if want_min else c.join(x[i], y[i]))
                return tuple(out)
            if s == 0:
                out.append(x[i])
                continue
            src = x if (s < 0) == want_min else y
            return tuple(out) + tuple(src[i:])
        return tuple(out)

    def meet(self, x, y):
        return self._pick(x, y, True)

    def join(self, x, y):
        return self._pick(x, y, False)

    def _rest(self):
        return Lex(self.components[1:])

    def sample_interval(self, lo, hi, rng):
        if not self.components:
            return ()
        r = rng.random()
        if r < 0.05:
            return lo
        if r < 0.1:
            return hi
        head, rest = self.components[0], self._rest()
        s = head.cmp(lo[0], hi[0])
        if s == 0:
            return (lo[0],) + rest.sample_interval(lo[1:], hi[1:], rng)
        r = rng.random()
        if r < 0.3:
            h = lo[0]
        elif r < 0.6:
            h = hi[0]
        else:
            h = head.sample_interval(lo[0], hi[0], rng)
        if h == lo[0]:
            tail = rest.add(lo[1:], rest.sample_nonneg(rng))
        elif h == hi[0]:
            tail = rest.sub(hi[1:], rest.sample_nonneg(rng))
        else:
            tail = rest.sample(rng)
        return (h,) + tail

    def interval(self, lo, hi):
        if not self.components:
            return ((),)
        head, rest = self.components[0], self._rest()
        s = head.cmp(lo[0], hi[0])
        if s is None or s > 0:
            return () if s is not None else None
        if s == 0:
            tails = rest.interval(lo[1:], hi[1:])
            return None if tails is None else tuple((lo[0],) + t for t in tails)
        if not rest.is_trivial:
            return None
        heads = head.interval(lo[0], hi[0])
        if heads is None:
            return None
        return tuple((h,) + rest.zero() for h in heads)


@dataclass(frozen=True)
class Direct(_TupleGroup):
    """Direct product with the componentwise (lattice) order."""

    components: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __repr__(self):
        return "direct(" + ", ".join(map(repr, self.components)) + ")"

    @property
    def is_total(self):
        nontrivial = [c for c in self.components if not c.is_trivial]
        return len(nontrivial) <= 1 and all(c.is_total for c in nontrivial)

    def sign(self, x):
        signs = [c.sign(v) for c, v in zip(self.components, x)]
        if any(s is None for s in signs):
            return None
        if all(s == 0 for s in signs):
            return 0
        if all(s >= 0 for s in signs):
            return 1
        if all(s <= 0 for s in signs):
            return -1
        return None

    def meet(self, x, y):
        return tuple(c.meet(a, b) for c, a, b in zip(self.components, x, y))

    def join(self, x, y):
        return tuple(c.join(a, b) for c, a, b in zip(self.components, x, y))

    def sample_nonneg(self, rng):
        return tuple(c.sample_nonneg(rng) for c in self.components)

    def sample_interval(self, lo, hi, rng):
        return tuple(c.sample_interval(a, b, rng)
                     for c, a, b in zip(self.components, lo, hi))

    def interval(self, lo, hi):
        parts = [c.interval(a, b) for c, a, b in zip(self.components, lo, hi)]
        if any(p is None for p in parts):
            return None
        return tuple(itertools.product(*parts))


def trivial_group() -> Lex:
    return Lex(())


def nonstandard_reals(depth: int = 2) -> Lex:
    """Divisible totally ordered surrogate for an ultrapower of the reals."""
    if depth < 1:
        raise ValueError("surrogate depth must be at least 1")
    return Lex((Rationals(),) * depth)


# ---------------------------------------------------------------------------
# flattening of nested lexicographic products

def lex_leaves(G: OrderedGroup):
    """Archimedean leaves of a nested lex product, or None if G is not one."""
    if isinstance(G, (Integers, Rationals)):
        return (G,)
    if isinstance(G, Lex):
        out = []
        for c in G.components:
            sub = lex_leaves(c)
            if sub is None:
                return None
            out.extend(sub)
        return tuple(out)
    return None


def flatten(G: OrderedGroup, x) -> tuple:
    if isinstance(G, (Integers, Rationals)):
        return (x,)
    out = []
    for c, v in zip(G.components, x):
        out.extend(flatten(c, v))
    return tuple(out)


def unflatten(G: OrderedGroup, flat: Sequence):
    def build(g, pos):
        if isinstance(g, (Integers, Rationals)):
            return flat[pos], pos + 1
        vals = []
        for c in g.components:
            v, pos = build(c, pos)
            vals.append(v)
        return tuple(vals), pos

    value, used = build(G, 0)
    if used != len(flat):
        raise ShapeMismatch("flat coordinate count does not match the group")
    return value


# ---------------------------------------------------------------------------
# l-ideals

@dataclass(frozen=True)
class LZero:
    def __repr__(self):
        return "LZero"


@dataclass(frozen=True)
class LWhole:
    def __repr__(self):
        return "LWhole"


@dataclass(frozen=True)
class TailKernel:
    """Elements of a (flattened) lex product whose first ``k`` coordinates vanish."""

    k: int

    def __repr__(self):
        return f"TailKernel({self.k})"


@dataclass(frozen=True)
class DirectIdeal:
    parts: tuple

    def __repr__(self):
        return "DirectIdeal(" + ", ".join(map(repr, self.parts)) + ")"


LIdeal = Any  # LZero | LWhole | TailKernel | DirectIdeal


def lideal_contains(G: OrderedGroup, H, x) -> bool:
    if isinstance(H, LWhole):
        return True
    if isinstance(H, LZero):
        return x == G.zero()
    if isinstance(H, TailKernel):
        flat = flatten(G, x)
        return all(v == 0 for v in flat[:H.k])
    if isinstance(H, DirectIdeal):
        return all(lideal_contains(c, h, v)
                   for c, h, v in zip(G.components, H.parts, x))
    if isinstance(G, QuasiConstantGroup):
        return all(lideal_contains(G.base, H, v) for v in x)
    raise UnsupportedShape(f"unknown l-ideal {H!r}")


def _normalize_direct(parts: tuple):
    if all(isinstance(p, LZero) for p in parts):
        return LZero()
    if all(isinstance(p, LWhole) for p in parts):
        return LWhole()
    return DirectIdeal(parts)


def lideal_catalog(G: OrderedGroup) -> tuple:
    """All l-ideals of a structured group, in an inclusion-compatible order."""
    leaves = lex_leaves(G)
    if leaves is not None:
        m = len(leaves)
        if m == 0:
            return (LZero(),)
        return (LZero(),) + tuple(TailKernel(k) for k in range(m - 1, 0, -1)) + (LWhole(),)
    if isinstance(G, Direct):
        cats = [lideal_catalog(c) for c in G.components]
        out = []
        for parts in itertools.product(*cats):
            H = _normalize_direct(tuple(parts))
            if H not in out:
                out.append(H)
        return tuple(out)
    raise UnsupportedShape(f"no l-ideal catalogue for {G!r}")


def _expand(G, H):
    if isinstance(G, Direct) and isinstance(H, (LZero, LWhole)):
        return DirectIdeal(tuple(type(H)() for _ in G.components))
    return H


def lideal_leq(G: OrderedGroup, H1, H2) -> bool:
    """Inclusion H1 <= H2 between catalogued l-ideals."""
    if isinstance(H1, LZero) or isinstance(H2, LWhole):
        return True
    if isinstance(H1, LWhole) or isinstance(H2, LZero):
        return H1 == H2 or (lex_leaves(G) == ())
    leaves = lex_leaves(G)
    if leaves is not None:
        return H1.k >= H2.k
    if isinstance(G, Direct):
        a, b = _expand(G, H1), _expand(G, H2)
        return all(lideal_leq(c, p, q) for c, p, q in zip(G.components, a.parts, b.parts))
    raise UnsupportedShape(f"no l-ideal order for {G!r}")


def lideal_sample(G: OrderedGroup, H, rng: random.Random):
    if isinstance(H, LZero):
        return G.zero()
    if isinstance(H, LWhole):
        return G.sample(rng)
    if isinstance(H, TailKernel):
        flat = list(flatten(G, G.sample(rng)))
        for i in range(min(H.k, len(flat))):
            flat[i] = type(flat[i])(0)
        return unflatten(G, flat)
    if isinstance(H, DirectIdeal):
        return tuple(lideal_sample(c, h, rng) for c, h in zip(G.components, H.parts))
    raise UnsupportedShape(f"cannot sample {H!r}")


def group_probes(G: OrderedGroup) -> list:
    """A fixed set of elements that separates the catalogued l-ideals of G."""
    if isinstance(G, Integers):
        return [0, 1, -1, 3]
    if isinstance(G, Rationals):
        return [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-3, 7)]
    leaves = lex_leaves(G)
    if leaves is not None:
        out = [G.zero()]
        for j, leaf in enumerate(leaves):
            for s in (1, -1):
                flat = [leaf_zero(lf) for lf in leaves]
                flat[j] = type(flat[j])(s)
                out.append(unflatten(G, flat))
            if j + 1 < len(leaves):
                flat = [leaf_zero(lf) for lf in leaves]
                flat[j] = type(flat[j])(1)
                flat[j + 1] = type(flat[j + 1])(-5)
                out.append(unflatten(G, flat))
        return out
    if isinstance(G, Direct):
        out = [G.zero()]
        for i, c in enumerate(G.components):
            for p in group_probes(c):
                v = list(G.zero())
                v[i] = p
                out.append(tuple(v))
        return out
    return [G.zero()]


def leaf_zero(leaf):
    return 0 if isinstance(leaf, Integers) else Fraction(0)


# ---------------------------------------------------------------------------
# quasi-constant functions with values in a group

@dataclass(frozen=True)
class QuasiConstantGroup(OrderedGroup):
    """Functions from ``sites`` points into ``base`` whose values all lie in one
    coset of the l-ideal ``kernel``; ordered pointwise."""

    base: OrderedGroup
    sites: int
    kernel: Any

    def __repr__(self):
        return f"K({self.base!r}, {self.sites}, {self.kernel!r})"

    @property
    def is_total(self):
        return self.sites == 1 and self.base.is_total

    def contains(self, x):
        if not (isinstance(x, tuple) and len(x) == self.sites):
            return False
        if not all(self.base.contains(v) for v in x):
            return False
        return all(lideal_contains(self.base, self.kernel, self.base.sub(v, x[0]))
                   for v in x[1:])

    def zero(self):
        return (self.base.zero(),) * self.sites

    def constant(self, v):
        return (v,) * self.sites

    def add(self, x, y):
        return tuple(self.base.add(a, b) for a, b in zip(x, y))

    def neg(self, x):
        return tuple(self.base.neg(a) for a in x)

    def scale(self, n, x):
        return tuple(self.base.scale(n, a) for a in x)

    def sign(self, x):
        return Direct((self.base,) * self.sites).sign(x)

    def meet(self, x, y):
        return tuple(self.base.meet(a, b) for a, b in zip(x, y))

    def join(self, x, y):
        return tuple(self.base.join(a, b) for a, b in zip(x, y))

    def sample(self, rng):
        v0 = self.base.sample(rng)
        return (v0,) + tuple(self.base.add(v0, lideal_sample(self.base, self.kernel, rng))
                             for _ in range(self.sites - 1))

    def sample_nonneg(self, rng):
        return self.abs(self.sample(rng))

    def sample_interval(self, lo, hi, rng):
        v0 = self.base.sample_interval(lo[0], hi[0], rng)
        out = [v0]
        for i in range(1, self.sites):
            pick = v0
            for _ in range(6):
                cand = self.base.add(v0, lideal_sample(self.base, self.kernel, rng))
                if self.base.leq(lo[i], cand) and self.base.leq(cand, hi[i]):
                    pick = cand
                    break
            out.append(pick)
        return tuple(out)

    def coerce(self, v):
        if not isinstance(v, (tuple, list)) or len(v) != self.sites:
            raise ShapeMismatch(f"expected a function on {self.sites} sites")
        out = tuple(self.base.coerce(a) for a in v)
        if not self.contains(out):
            raise ShapeMismatch(f"{fmt_value(list(out))} is not quasi-constant")
        return out

    def fmt(self, x):
        return fmt_value(list(x))
