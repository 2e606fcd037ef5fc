"""Bracket expressions in the two Onsager generators.

Abstract syntax over the atoms A and B with negation, rational scaling,
binary sums and Lie brackets.  The concrete grammar is

    Expr   := ['+'|'-'] Term (('+'|'-') Term)*
    Term   := [Rational] Factor ('/' Natural)*
    Factor := 'A' | 'B' | '[' Expr ',' Expr ']' | '(' Expr ')'

so "1/2 A + 1/2 B - 1/4 [A, B]" and the shorthand "A/2" both parse.  Scale
coefficients are nonzero by construction.

Shared subtrees are legal and evaluate() walks each node once, so the
recursively built basis expressions stay cheap even when their printed form
grows exponentially.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import json
import re

from .loop import LoopElem, ONSAGER_A, ONSAGER_B, bracket


class Expr:
    """Base class for expression nodes."""

    __slots__ = ()

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Gen(Expr):
    which: str

    def __post_init__(self):
        if self.which not in ("A", "B"):
            raise ValueError(f"unknown generator {self.which!r}")


@dataclass(frozen=True)
class Neg(Expr):
    child: Expr


@dataclass(frozen=True)
class Scale(Expr):
    coeff: Fraction
    child: Expr

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            raise ValueError("zero coefficient in Scale")


@dataclass(frozen=True)
class Sum(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Bracket(Expr):
    left: Expr
    right: Expr


GEN_A = Gen("A")
GEN_B = Gen("B")


def evaluate(e: Expr) -> LoopElem:
    """Value in the loop algebra; shared subtrees are computed once."""
    memo: dict[int, LoopElem] = {}

    def go(n: Expr) -> LoopElem:
        got = memo.get(id(n))
        if got is not None:
            return got
        if isinstance(n, Gen):
            val = ONSAGER_A if n.which == "A" else ONSAGER_B
        elif isinstance(n, Neg):
            val = -go(n.child)
        elif isinstance(n, Scale):
            val = go(n.child) * n.coeff
        elif isinstance(n, Sum):
            val = go(n.left) + go(n.right)
        elif isinstance(n, Bracket):
            val = bracket(go(n.left), go(n.right))
        else:
            raise TypeError(f"not an expression node: {n!r}")
        memo[id(n)] = val
        return val

    return go(e)


def expr_equal(e1: Expr, e2: Expr) -> bool:
    """Semantic equality: equal values in the loop algebra."""
    return evaluate(e1) == evaluate(e2)


# ---------------------------------------------------------------------------
# parsing


class ExprParseError(ValueError):
    """Parse failure carrying the offending position and expectation."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_EXPR_TOKEN = re.compile(r"\s*(?:(\d+)|([AB])|(\[)|(\])|(\()|(\))|(,)|(\+)|(-)|(/))")
_KINDS = ("num", "gen", "lbrack", "rbrack", "lparen", "rparen",
          "comma", "plus", "minus", "slash")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].strip()
            if rest:
                raise ExprParseError(f"unexpected character {rest[0]!r}", pos)
            break
        pos = m.end()
        for kind, val in zip(_KINDS, m.groups()):
            if val is not None:
                toks.append((kind, val, m.start()))
                break
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j][0] if j < len(self.toks) else None

    def pos(self) -> int:
        if self.i < len(self.toks):
            return self.toks[self.i][2]
        return len(self.text)

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str):
        if self.peek() != kind:
            raise ExprParseError(f"expected {what}", self.pos())
        return self.take()

    def rational(self) -> Fraction:
        n = int(self.expect("num", "a number")[1])
        if self.peek() == "slash" and self.peek(1) == "num":
            self.take()
            d = int(self.take()[1])
            if d == 0:
                raise ExprParseError("zero denominator", self.pos())
            return Fraction(n, d)
        return Fraction(n)

    def factor(self) -> Expr:
        kind = self.peek()
        if kind == "gen":
            return GEN_A if self.take()[1] == "A" else GEN_B
        if kind == "lbrack":
            self.take()
            left = self.expr()
            self.expect("comma", "','")
            right = self.expr()
            self.expect("rbrack", "']'")
            return Bracket(left, right)
        if kind == "lparen":
            self.take()
            inner = self.expr()
            self.expect("rparen", "')'")
            return inner
        raise ExprParseError("expected 'A', 'B', '[' or '('", self.pos())

    def divisors(self) -> Fraction:
        d = Fraction(1)
        while self.peek() == "slash":
            self.take()
            tok = self.expect("num", "a divisor")
            n = int(tok[1])
            if n == 0:
                raise ExprParseError("division by zero", tok[2])
            d *= n
        return d

    def term(self) -> Expr:
        coeff = Fraction(1)
        if self.peek() == "num":
            tok = self.toks[self.i]
            coeff = self.rational()
            if coeff == 0:
                raise ExprParseError("zero coefficient", tok[2])
        f = self.factor()
        coeff /= self.divisors()
        return f if coeff == 1 else Scale(coeff, f)

    def expr(self) -> Expr:
        neg = False
        if self.peek() in ("plus", "minus"):
            neg = self.take()[0] == "minus"
        node = self.term()
        if neg:
            node = Neg(node)
        while self.peek() in ("plus", "minus"):
            op = self.take()[0]
            rhs = self.term()
            node = Sum(node, Neg(rhs) if op == "minus" else rhs)
        return node

    def parse(self) -> Expr:
        if not self.toks:
            raise ExprParseError("empty expression", 0)
        node = self.expr()
        if self.i != len(self.toks):
            raise ExprParseError("trailing input", self.pos())
        return node


def parse(text: str) -> Expr:
    """Parse the concrete syntax; raises ExprParseError with a position."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# rendering


def _strip(n: Expr) -> tuple[Fraction, Expr]:
    """Fold nested Neg/Scale into a single rational prefactor."""
    coeff = Fraction(1)
    while True:
        if isinstance(n, Neg):
            coeff = -coeff
            n = n.child
        elif isinstance(n, Scale):
            coeff *= n.coeff
            n = n.child
        else:
            return coeff, n


def _atom_str(n: Expr) -> str:
    if isinstance(n, Gen):
        return n.which
    if isinstance(n, Bracket):
        return f"[{render(n.left)}, {render(n.right)}]"
    return f"({render(n)})"


def render(e: Expr) -> str:
    """Concrete syntax that parses back to a semantically equal tree.

    >>> render(Sum(Scale(Fraction(1, 2), GEN_A), Neg(Bracket(GEN_A, GEN_B))))
    '1/2 A - [A, B]'
    """
    terms: list[tuple[Fraction, Expr]] = []

    def collect(n: Expr, sign: int):
        if isinstance(n, Sum):
            collect(n.left, sign)
            collect(n.right, sign)
        else:
            coeff, core = _strip(n)
            terms.append((coeff * sign, core))

    collect(e, 1)
    out = []
    for k, (coeff, core) in enumerate(terms):
        mag = abs(coeff)
        body = _atom_str(core) if mag == 1 else f"{mag} {_atom_str(core)}"
        if k == 0:
            out.append(("-" if coeff < 0 else "") + body)
        else:
            out.append((" - " if coeff < 0 else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# JSON form


def expr_to_json(e: Expr) -> dict:
    if isinstance(e, Gen):
        return {"op": "gen", "which": e.which}
    if isinstance(e, Neg):
        return {"op": "neg", "child": expr_to_json(e.child)}
    if isinstance(e, Scale):
        return {"op": "scale", "coeff": str(e.coeff), "child": expr_to_json(e.child)}
    if isinstance(e, Sum):
        return {"op": "sum", "left": expr_to_json(e.left), "right": expr_to_json(e.right)}
    if isinstance(e, Bracket):
        return {"op": "bracket", "left": expr_to_json(e.left), "right": expr_to_json(e.right)}
    raise TypeError(f"not an expression node: {e!r}")


def expr_from_json(d: dict) -> Expr:
    op = d["op"]
    if op == "gen":
        return GEN_A if d["which"] == "A" else GEN_B
    if op == "neg":
        return Neg(expr_from_json(d["child"]))
    if op == "scale":
        return Scale(Fraction(d["coeff"]), expr_from_json(d["child"]))
    if op == "sum":
        return Sum(expr_from_json(d["left"]), expr_from_json(d["right"]))
    if op == "bracket":
        return Bracket(expr_from_json(d["left"]), expr_from_json(d["right"]))
    raise ValueError(f"unknown expression op {op!r}")
