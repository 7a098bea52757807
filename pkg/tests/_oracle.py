"""Naive reference implementations used to derive the frozen test values.

Nothing here imports mvkit.  Python tuples already compare lexicographically,
which gives the lex-ordered groups for free.
"""

from fractions import Fraction
from itertools import combinations, product


class Finite:
    def __init__(self, elements, plus, neg, zero):
        self.elements = list(elements)
        self.plus, self.neg, self.zero = plus, neg, zero
        self.one = neg(zero)

    def minus(self, x, y):
        return self.neg(self.plus(self.neg(x), y))

    def leq(self, x, y):
        return self.plus(self.neg(x), y) == self.one


def chain(n):
    return Finite([Fraction(i, n - 1) for i in range(n)],
                  lambda x, y: min(Fraction(1), x + y), lambda x: 1 - x, Fraction(0))


def prod(*fs):
    return Finite(list(product(*(f.elements for f in fs))),
                  lambda x, y: tuple(f.plus(a, b) for f, a, b in zip(fs, x, y)),
                  lambda x: tuple(f.neg(a) for f, a in zip(fs, x)),
                  tuple(f.zero for f in fs))


def lex_plus(u, x, y):
    return min(u, tuple(a + b for a, b in zip(x, y)))


def lex_neg(u, x):
    return tuple(a - b for a, b in zip(u, x))


def lex_ord(u, x, limit=10_000):
    acc = tuple(0 for _ in x)
    for n in range(1, limit):
        acc = lex_plus(u, acc, x)
        if acc == u:
            return n
    return None


def is_ideal(A, S):
    if A.zero not in S:
        return False
    for x in S:
        for y in A.elements:
            if A.leq(y, x) and y not in S:
                return False
        for y in S:
            if A.plus(x, y) not in S:
                return False
    return True


def ideals_by_subsets(A):
    """Every subset checked; feasible up to about 12 elements."""
    out = []
    els = A.elements
    for r in range(1, len(els) + 1):
        for S in combinations(els, r):
            if is_ideal(A, set(S)):
                out.append(frozenset(S))
    return out


def ideals_by_generators(A):
    """Finite MV-algebras: every ideal is generated by one element."""
    out = set()
    for a in A.elements:
        multiples, acc = {A.zero}, A.zero
        for _ in range(len(A.elements) + 1):
            acc = A.plus(acc, a)
            multiples.add(acc)
        out.add(frozenset(x for x in A.elements if any(A.leq(x, m) for m in multiples)))
    return sorted(out, key=len)


def is_prime(A, I):
    if set(I) == set(A.elements):
        return False
    return all(A.minus(x, y) in I or A.minus(y, x) in I
               for x in A.elements for y in A.elements)


def maximal(A, ideals):
    proper = [I for I in ideals if len(I) < len(A.elements)]
    return [I for I in proper if not any(I < J for J in proper)]


def luk_term_value(stages, t):
    for s in stages:
        t = min(Fraction(1), 2 * t) if s == "double" else max(Fraction(0), 2 * t - 1)
    return t
