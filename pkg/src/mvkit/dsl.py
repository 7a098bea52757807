"""Spec-file language: tokenizer, recursive-descent parser, printer, resolver.

A spec file is a sequence of declarations, one per line::

    group G = lex(Z, Q)
    algebra P = gamma(G, (1, 0/1))
    ideal R = radical
    element e = (0, 3)
    term phi = ((x*x)+(x*x)) + ((x*x)+(x*x))

``#`` starts a comment.  Term operators, loosest first: ``+`` and ``\\/``,
then ``*`` and ``/\\``, then prefix ``~``; all binary operators associate to
the left.  Terms are stored already expanded into {var, 0, ~, +}; a name that
was declared as a term earlier is inlined.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import ArityError, DSLError, DSLSyntaxError, UnknownName
from .groups import Direct, Integers, Lex, Rationals, nonstandard_reals
from .mvcore import (RADICAL, WHOLE, ZERO_IDEAL, ExplicitIdeal, FiniteChain,
                     FiniteProduct, FunctionAlgebra, Join, Meet, Neg, One, Plus,
                     ProductIdeal, QuasiConstant, Times, UnitIntervalQ, Var, Zero,
                     chang, komori, make_algebra)
from .mvcore import Gamma as GammaAlgebra

# ---------------------------------------------------------------------------
# tokens

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\\/|/\\|[()\[\]{},=/+*~-])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list:
    out, line, start, pos = [], 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DSLSyntaxError(line, pos - start + 1, "a token", text[pos])
        kind = m.lastgroup
        if kind == "nl":
            out.append(Token("nl", "\n", line, pos - start + 1))
            line, start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class Num:
    value: Fraction
    ratio: bool = False


@dataclass(frozen=True)
class TupleLit:
    items: tuple


@dataclass(frozen=True)
class FuncLit:
    items: tuple


@dataclass(frozen=True)
class Call:
    """Constructor application or bare keyword, e.g. ``chain(3)``, ``unitQ``."""

    head: str
    args: tuple = ()


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class IdealSet:
    items: tuple


@dataclass(frozen=True)
class Decl:
    kind: str
    name: str
    expr: Any


@dataclass(frozen=True)
class SpecFile:
    decls: tuple

    def names(self, kind=None):
        return [d.name for d in self.decls if kind is None or d.kind == kind]


# head -> (argument kinds); "g" group, "a" algebra, "i" ideal, "n" integer, "l" literal
GROUP_HEADS = {"Z": (), "Q": (), "lex": "g*", "direct": "g+", "nonstandard": ("n",)}
ALGEBRA_HEADS = {
    "chain": ("n",), "product": "a+", "unitQ": (), "gamma": ("g", "l"),
    "komori": ("n",), "chang": (), "quasiconst": ("a", "n"), "power": ("a", "n"),
    "quotient": ("a", "i"),
}
IDEAL_HEADS = {"zero": (), "radical": (), "whole": (), "kernel": "n+"}
KINDS = ("group", "algebra", "ideal", "element", "term")
RESERVED = set(GROUP_HEADS) | set(ALGEBRA_HEADS) | set(IDEAL_HEADS) | set(KINDS)


# ---------------------------------------------------------------------------
# parser

class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0
        self.scope: dict[str, str] = {}
        self.terms: dict[str, Any] = {}

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected):
        t = self.tok
        found = "end of line" if t.kind == "nl" else ("end of input" if t.kind == "eof" else t.text)
        raise DSLSyntaxError(t.line, t.col, expected, found)

    def eat(self, text=None, kind=None):
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            self.fail(repr(text) if text is not None else kind)
        self.i += 1
        return t

    def accept(self, text):
        if self.tok.text == text and self.tok.kind == "op":
            self.i += 1
            return True
        return False

    # -- file ---------------------------------------------------------------
    def parse(self) -> SpecFile:
        decls = []
        while True:
            while self.tok.kind == "nl":
                self.i += 1
            if self.tok.kind == "eof":
                return SpecFile(tuple(decls))
            decls.append(self.decl())
            if self.tok.kind not in ("nl", "eof"):
                self.fail("end of line")

    def decl(self) -> Decl:
        t = self.tok
        if t.kind != "name" or t.text not in KINDS:
            self.fail("a declaration (" + ", ".join(KINDS) + ")")
        self.i += 1
        kind = t.text
        nt = self.eat(kind="name")
        if nt.text in RESERVED:
            raise DSLError(f"{nt.text!r} is a reserved word", nt.line, nt.col)
        if nt.text in self.scope:
            raise DSLError(f"{nt.text!r} is already declared", nt.line, nt.col)
        self.eat("=")
        expr = {"group": self.group, "algebra": self.algebra, "ideal": self.ideal,
                "element": self.literal, "term": self.term}[kind]()
        self.scope[nt.text] = kind
        if kind == "term":
            self.terms[nt.text] = expr
        return Decl(kind, nt.text, expr)

    # -- shared -------------------------------------------------------------
    def _ref(self, kind, t):
        if t.text not in self.scope:
            raise UnknownName(f"unknown {kind} {t.text!r}", t.line, t.col)
        if self.scope[t.text] != kind:
            raise UnknownName(f"{t.text!r} is a {self.scope[t.text]}, not a {kind}", t.line, t.col)
        return Ref(t.text)

    def _call(self, kind, heads):
        t = self.tok
        if t.kind != "name":
            self.fail(f"a {kind}")
        self.i += 1
        if t.text not in heads:
            return self._ref(kind, t)
        sig = heads[t.text]
        if not sig:
            if self.tok.text == "(":
                raise ArityError(f"{t.text} takes no arguments", t.line, t.col)
            return Call(t.text)
        self.eat("(")
        args = []
        if isinstance(sig, str):
            item, mult = sig[0], sig[1]
            if not (mult == "*" and self.tok.text == ")"):
                args.append(self._arg(item))
                while self.accept(","):
                    args.append(self._arg(item))
        else:
            for j, item in enumerate(sig):
                if j:
                    if self.tok.text == ")":
                        raise ArityError(f"{t.text} expects {len(sig)} arguments, got {j}",
                                         t.line, t.col)
                    self.eat(",")
                args.append(self._arg(item))
            if self.tok.text == ",":
                raise ArityError(f"{t.text} expects {len(sig)} arguments", t.line, t.col)
        self.eat(")")
        return Call(t.text, tuple(args))

    def _arg(self, item):
        if item == "g":
            return self.group()
        if item == "a":
            return self.algebra()
        if item == "i":
            return self.ideal()
        if item == "l":
            return self.literal()
        return int(self.eat(kind="int").text)

    def group(self):
        return self._call("group", GROUP_HEADS)

    def algebra(self):
        return self._call("algebra", ALGEBRA_HEADS)

    def ideal(self):
        if self.accept("{"):
            items = []
            if self.tok.text != "}":
                items.append(self.literal())
                while self.accept(","):
                    items.append(self.literal())
            self.eat("}")
            return IdealSet(tuple(items))
        return self._call("ideal", IDEAL_HEADS)

    # -- literals -------------------------------------------------------------
    def literal(self):
        t = self.tok
        if t.kind == "name" and self.scope.get(t.text) == "element":
            self.i += 1
            return Ref(t.text)
        if self.accept("("):
            return TupleLit(self._items(")"))
        if self.accept("["):
            return FuncLit(self._items("]"))
        sign = -1 if self.accept("-") else 1
        if self.tok.kind != "int":
            self.fail("a number, '(' or '['")
        num = int(self.eat(kind="int").text)
        if self.accept("/"):
            den_tok = self.tok
            den = int(self.eat(kind="int").text)
            if den == 0:
                raise DSLError("zero denominator", den_tok.line, den_tok.col)
            return Num(Fraction(sign * num, den), True)
        return Num(Fraction(sign * num), False)

    def _items(self, close):
        items = [self.literal()]
        while self.accept(","):
            items.append(self.literal())
        self.eat(close)
        return tuple(items)

    # -- terms --------------------------------------------------------------
    def term(self):
        left = self._product()
        while self.tok.text in ("+", "\\/"):
            op = self.eat().text
            right = self._product()
            left = Plus(left, right) if op == "+" else Join(left, right)
        return left

    def _product(self):
        left = self._unary()
        while self.tok.text in ("*", "/\\"):
            op = self.eat().text
            right = self._unary()
            left = Times(left, right) if op == "*" else Meet(left, right)
        return left

    def _unary(self):
        if self.accept("~"):
            return Neg(self._unary())
        if self.tok.text == "-":
            raise DSLSyntaxError(self.tok.line, self.tok.col, "a term (negation is written ~x)", "-")
        return self._atom()

    def _atom(self):
        t = self.tok
        if self.accept("("):
            inner = self.term()
            self.eat(")")
            return inner
        if t.kind == "int" and t.text in ("0", "1"):
            self.i += 1
            return Zero() if t.text == "0" else One()
        if t.kind == "name":
            self.i += 1
            if t.text in self.terms:
                return self.terms[t.text]
            if t.text in self.scope:
                raise UnknownName(f"{t.text!r} is a {self.scope[t.text]}, not a term", t.line, t.col)
            return Var(t.text)
        self.fail("a variable, 0, 1, '~' or '('")


def parse_spec(text: str) -> SpecFile:
    """Parse a whole spec file; the first error is raised with its line/column."""
    return _Parser(text).parse()


def parse_term(text: str, terms: dict | None = None):
    p = _Parser(text)
    p.terms = dict(terms or {})
    p.scope = {k: "term" for k in p.terms}
    t = p.term()
    if p.tok.kind not in ("eof", "nl"):
        p.fail("end of term")
    return t


def parse_literal(text: str, elements: dict | None = None):
    p = _Parser(text)
    p.scope = {k: "element" for k in (elements or {})}
    lit = p.literal()
    if p.tok.kind != "eof":
        p.fail("end of literal")
    return lit


# ---------------------------------------------------------------------------
# printing

def format_literal(node) -> str:
    if isinstance(node, Num):
        v = node.value
        if node.ratio:
            return f"{v.numerator}/{v.denominator}"
        return str(v.numerator)
    if isinstance(node, TupleLit):
        return "(" + ", ".join(map(format_literal, node.items)) + ")"
    if isinstance(node, FuncLit):
        return "[" + ", ".join(map(format_literal, node.items)) + "]"
    if isinstance(node, Ref):
        return node.name
    raise TypeError(node)


def format_expr(node) -> str:
    if isinstance(node, Ref):
        return node.name
    if isinstance(node, IdealSet):
        return "{" + ", ".join(map(format_literal, node.items)) + "}"
    if isinstance(node, Call):
        if not node.args and node.head not in ("lex",):
            return node.head
        return node.head + "(" + ", ".join(
            str(a) if isinstance(a, int) else
            format_literal(a) if isinstance(a, (Num, TupleLit, FuncLit)) else
            format_expr(a) for a in node.args) + ")"
    raise TypeError(node)


def format_term(t, top: bool = True) -> str:
    """Print a term; 1 and binary products are re-sugared, everything else is primitive."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Neg):
        c = t.child
        if isinstance(c, Zero):
            return "1"
        if isinstance(c, Plus) and isinstance(c.left, Neg) and isinstance(c.right, Neg):
            s = f"{format_term(c.left.child, False)} * {format_term(c.right.child, False)}"
            return s if top else f"({s})"
        return "~" + format_term(c, False)
    if isinstance(t, Plus):
        s = f"{format_term(t.left, False)} + {format_term(t.right, False)}"
        return s if top else f"({s})"
    raise TypeError(t)


def format_spec(spec: SpecFile) -> str:
    lines = []
    for d in spec.decls:
        if d.kind == "term":
            body = format_term(d.expr)
        elif d.kind == "element":
            body = format_literal(d.expr)
        else:
            body = format_expr(d.expr)
        lines.append(f"{d.kind} {d.name} = {body}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# resolution into descriptors

def literal_value(node, elements: dict | None = None):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, (TupleLit, FuncLit)):
        return tuple(literal_value(i, elements) for i in node.items)
    if isinstance(node, Ref):
        if elements is None or node.name not in elements:
            raise UnknownName(f"unknown element {node.name!r}")
        return elements[node.name]
    raise TypeError(node)


@dataclass
class Environment:
    groups: dict
    algebras: dict
    ideals: dict
    elements: dict
    terms: dict
    spec: SpecFile


def _group(node, env):
    if isinstance(node, Ref):
        return env.groups[node.name]
    h, a = node.head, node.args
    if h == "Z":
        return Integers()
    if h == "Q":
        return Rationals()
    if h == "lex":
        return Lex(tuple(_group(x, env) for x in a))
    if h == "direct":
        return Direct(tuple(_group(x, env) for x in a))
    return nonstandard_reals(a[0])


def resolve_ideal(node, A, env=None):
    """Turn an ideal expression into a descriptor for the algebra ``A``."""
    from . import spectra

    if isinstance(node, Ref):
        node = env.ideals[node.name]
    if isinstance(node, IdealSet):
        if not A.is_finite:
            raise DSLError("explicit ideals need a finite algebra")
        return ExplicitIdeal(A.coerce(literal_value(i, env.elements if env else None))
                             for i in node.items)
    h = node.head
    if h == "zero":
        return ZERO_IDEAL
    if h == "radical":
        return RADICAL
    if h == "whole":
        return WHOLE
    factors = getattr(A, "factors", None)
    if factors is None or isinstance(A, QuasiConstant):
        raise DSLError(f"kernel(...) needs a product algebra, not {A!r}")
    idx = set(node.args)
    if not idx <= set(range(len(factors))):
        raise DSLError(f"kernel index out of range for {A!r}")
    I = ProductIdeal(tuple(ZERO_IDEAL if i in idx else WHOLE for i in range(len(factors))))
    return spectra.to_explicit(A, I) if A.is_finite else I


def _algebra(node, env):
    from . import spectra

    if isinstance(node, Ref):
        return env.algebras[node.name]
    h, a = node.head, node.args
    if h == "chain":
        return FiniteChain(a[0])
    if h == "product":
        return FiniteProduct(tuple(_algebra(x, env) for x in a))
    if h == "unitQ":
        return UnitIntervalQ()
    if h == "gamma":
        G = _group(a[0], env)
        return GammaAlgebra(G, G.coerce(literal_value(a[1], env.elements)))
    if h == "komori":
        return komori(a[0])
    if h == "chang":
        return chang()
    if h == "quasiconst":
        return QuasiConstant(_algebra(a[0], env), a[1])
    if h == "power":
        return FunctionAlgebra(_algebra(a[0], env), a[1])
    base = _algebra(a[0], env)
    Q, _ = spectra.quotient(base, resolve_ideal(a[1], base, env))
    return Q


def resolve(spec: SpecFile) -> Environment:
    """Build every declared group and algebra; values are validated eagerly."""
    env = Environment({}, {}, {}, {}, {}, spec)
    for d in spec.decls:
        try:
            if d.kind == "group":
                env.groups[d.name] = _group(d.expr, env)
            elif d.kind == "algebra":
                env.algebras[d.name] = make_algebra(_algebra(d.expr, env))
            elif d.kind == "ideal":
                env.ideals[d.name] = d.expr
            elif d.kind == "element":
                env.elements[d.name] = literal_value(d.expr, env.elements)
            else:
                env.terms[d.name] = d.expr
        except DSLError:
            raise
        except Exception as exc:
            raise DSLError(f"in declaration of {d.name!r}: {exc}") from exc
    return env


def load_spec(text: str) -> Environment:
    return resolve(parse_spec(text))
