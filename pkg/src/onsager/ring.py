"""Exact arithmetic in the coefficient ring Q[t, 1/t, 1/(t-1)].

An element is kept as a fraction  num / (t^tpow * (t-1)^upow)  where num is a
polynomial over Q.  The representation is canonical: the numerator shares no
factor of t or t-1 with the denominator, and zero is stored as 0/(t^0 (t-1)^0).
Equality is therefore structural.

The ring carries three substitution automorphisms used throughout the package:

    phi  : t -> (t-1)/t      (order 3; phi applied twice gives phi2)
    phi2 : t -> 1/(1-t)
    tauA : t -> 1-t          (order 2)

>>> str(T_PRIME)
'(-1 + t) / t'
>>> ring_aut("phi", T) == T_PRIME
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import re


def _fr(c) -> Fraction:
    return c if type(c) is Fraction else Fraction(c)


_F0 = Fraction(0)
_F1 = Fraction(1)


class Poly:
    """Dense univariate polynomial over Q, coefficients in ascending order.

    >>> Poly([1, 2])(Fraction(3))
    Fraction(7, 1)
    >>> (Poly([0, 1]) * Poly([0, 1])).coeffs
    (Fraction(0, 1), Fraction(0, 1), Fraction(1, 1))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_fr(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _make(cls, cs: list) -> "Poly":
        # trusted path: cs already holds Fractions
        while cs and cs[-1] == 0:
            cs.pop()
        p = cls.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(cs))
        return p

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial given degree -1."""
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._make(out)

    def __neg__(self) -> "Poly":
        return Poly._make([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return P_ZERO
            out = [_F0] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        if cb:
                            out[i + j] += ca * cb
            return Poly._make(out)
        if isinstance(other, (int, Fraction)):
            q = _fr(other)
            if q == 0:
                return P_ZERO
            return Poly._make([c * q for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = P_ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, point) -> Fraction:
        acc = _F0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def shift_up(self, k: int) -> "Poly":
        """Multiply by t^k."""
        if self.is_zero or k == 0:
            return self
        return Poly._make([_F0] * k + list(self.coeffs))

    def exact_div_t(self, k: int = 1) -> "Poly":
        """Divide by t^k; the low k coefficients must vanish."""
        if self.is_zero:
            return self
        if any(c for c in self.coeffs[:k]):
            raise ValueError("polynomial is not divisible by t^%d" % k)
        return Poly._make(list(self.coeffs[k:]))

    def exact_div_tm1(self, k: int = 1) -> "Poly":
        """Divide by (t-1)^k; 1 must be a root of that multiplicity."""
        p = self
        for _ in range(k):
            cs = p.coeffs
            if not cs:
                return p
            # synthetic division by (t - 1), remainder must be zero
            out = [_F0] * (len(cs) - 1)
            acc = _F0
            for i in range(len(cs) - 1, 0, -1):
                acc = acc + cs[i]
                out[i - 1] = acc
            if acc + cs[0] != 0:
                raise ValueError("polynomial is not divisible by (t-1)^%d" % k)
            p = Poly._make(out)
        return p


P_ZERO = Poly()
P_ONE = Poly([1])
P_T = Poly([0, 1])
P_TM1 = Poly([-1, 1])


@lru_cache(maxsize=256)
def _tm1_pow(k: int) -> Poly:
    return P_TM1 ** k


@lru_cache(maxsize=256)
def _neg_t_pow(k: int) -> Poly:
    cs = [_F0] * k + [_F1 if k % 2 == 0 else -_F1]
    return Poly._make(cs)


def shift_coords(p: Poly, center: str) -> list[Fraction]:
    """Coefficients of p expanded in powers of (t-1) or of (-t).

    center is "t_minus_1" or "neg_t".  The list satisfies
    p = sum(c[i] * base^i) and carries no trailing zeros.

    >>> shift_coords(Poly([0, 1]), "t_minus_1")  # t = 1 + (t-1)
    [Fraction(1, 1), Fraction(1, 1)]
    """
    if center == "t_minus_1":
        work = list(p.coeffs)
        out = []
        # repeated synthetic division by (t - 1); remainders are the coords
        for _ in range(len(work)):
            acc = _F0
            for i in range(len(work) - 1, -1, -1):
                acc = acc + work[i]
                work[i] = acc
            out.append(work[0])
            work = work[1:]
        return out
    if center == "neg_t":
        return [c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)]
    raise ValueError(f"unknown expansion center {center!r}")


def poly_from_shift(coords: Sequence, center: str) -> Poly:
    """Inverse of shift_coords."""
    if center == "t_minus_1":
        acc = P_ZERO
        for c in reversed([_fr(c) for c in coords]):
            acc = acc * P_TM1 + Poly([c])
        return acc
    if center == "neg_t":
        return Poly([c if i % 2 == 0 else -_fr(c) for i, c in enumerate(coords)])
    raise ValueError(f"unknown expansion center {center!r}")


class RingElem:
    """Element of Q[t, 1/t, 1/(t-1)] in canonical fraction form.

    Construction cancels any factor of t or t-1 between numerator and
    denominator, so distinct (num, tpow, upow) triples are distinct elements.

    >>> RingElem(Poly([0, -1, 1]), 1, 0) == TM1   # (t^2 - t)/t
    True
    >>> RingElem(Poly([1, -2, 1]), 0, 1) == TM1   # (t-1)^2/(t-1)
    True
    """

    __slots__ = ("num", "tpow", "upow")

    def __init__(self, num=P_ZERO, tpow: int = 0, upow: int = 0):
        if isinstance(num, (int, Fraction)):
            num = Poly([num]) if num else P_ZERO
        if not isinstance(num, Poly):
            raise TypeError(f"numerator must be Poly or rational, got {type(num).__name__}")
        if tpow < 0 or upow < 0:
            raise ValueError("denominator exponents must be nonnegative")
        if num.is_zero:
            tpow = upow = 0
        else:
            while tpow and num.coeffs[0] == 0:
                num = num.exact_div_t()
                tpow -= 1
            while upow and num(1) == 0:
                num = num.exact_div_tm1()
                upow -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "tpow", tpow)
        object.__setattr__(self, "upow", upow)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        return (self.tpow == other.tpow and self.upow == other.upow
                and self.num == other.num)

    def __hash__(self):
        return hash((self.num, self.tpow, self.upow))

    def __repr__(self):
        return f"RingElem({ring_to_str(self)!r})"

    def __str__(self):
        return ring_to_str(self)

    def __add__(self, other: "RingElem") -> "RingElem":
        if not isinstance(other, RingElem):
            return NotImplemented
        tp = max(self.tpow, other.tpow)
        up = max(self.upow, other.upow)
        a = self.num.shift_up(tp - self.tpow) * _tm1_pow(up - self.upow)
        b = other.num.shift_up(tp - other.tpow) * _tm1_pow(up - other.upow)
        return RingElem(a + b, tp, up)

    def __neg__(self) -> "RingElem":
        r = RingElem.__new__(RingElem)
        object.__setattr__(r, "num", -self.num)
        object.__setattr__(r, "tpow", self.tpow)
        object.__setattr__(r, "upow", self.upow)
        return r

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RingElem):
            return RingElem(self.num * other.num, self.tpow + other.tpow,
                            self.upow + other.upow)
        if isinstance(other, (int, Fraction)):
            return RingElem(self.num * other, self.tpow, self.upow)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElem":
        if n < 0:
            raise ValueError("negative powers are only defined for units; use the explicit inverses")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def as_poly(self) -> Poly:
        """The numerator, when the element has no denominator."""
        if self.tpow or self.upow:
            raise ValueError("element is not a polynomial")
        return self.num


ZERO = RingElem()
ONE = RingElem(P_ONE)
T = RingElem(P_T)
TM1 = RingElem(P_TM1)
INV_T = RingElem(P_ONE, 1, 0)
INV_TM1 = RingElem(P_ONE, 0, 1)
T_PRIME = RingElem(P_TM1, 1, 0)              # 1 - 1/t
T_DPRIME = RingElem(Poly([-1]), 0, 1)        # 1/(1-t)

# For each automorphism: (image of t, inverse of image, inverse of image-1).
# The two inverses let denominators map through without leaving the ring.
_AUT_TABLE = {
    "phi": (T_PRIME, RingElem(P_T, 0, 1), RingElem(Poly([0, -1]))),
    "phi2": (T_DPRIME, RingElem(Poly([1, -1])), RingElem(Poly([1, -1]), 1, 0)),
    "tauA": (RingElem(Poly([1, -1])), RingElem(Poly([-1]), 0, 1),
             RingElem(Poly([-1]), 1, 0)),
}

AUT_NAMES = tuple(_AUT_TABLE)


def ring_aut(which: str, a: RingElem) -> RingElem:
    """Apply one of the substitution automorphisms phi, phi2, tauA."""
    try:
        r, r_inv, rm1_inv = _AUT_TABLE[which]
    except KeyError:
        raise ValueError(f"unknown ring automorphism {which!r}") from None
    acc = ZERO
    for c in reversed(a.num.coeffs):
        acc = acc * r + RingElem(c)
    return acc * r_inv ** a.tpow * rm1_inv ** a.upow


def ring_subset(a: RingElem, which: str) -> bool:
    """Membership in Q[t] ("poly"), t*Q[t] ("t_poly") or (t-1)*Q[t] ("tm1_poly")."""
    if which not in ("poly", "t_poly", "tm1_poly"):
        raise ValueError(f"unknown subset {which!r}")
    if a.tpow or a.upow:
        return False
    if a.is_zero:
        return True
    if which == "t_poly":
        return a.num.coeffs[0] == 0
    if which == "tm1_poly":
        return a.num(1) == 0
    return True


# ---------------------------------------------------------------------------
# text and JSON forms


def _coeff_str(q: Fraction) -> str:
    return str(q)


def _poly_terms(p: Poly) -> list[tuple[int, str]]:
    """Render terms in ascending power order as (sign, body) pairs."""
    terms = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        sign = 1 if c > 0 else -1
        mag = abs(c)
        if i == 0:
            body = _coeff_str(mag)
        else:
            tp = "t" if i == 1 else f"t^{i}"
            body = tp if mag == 1 else f"{_coeff_str(mag)}{tp}"
        terms.append((sign, body))
    return terms


def ring_to_str(a: RingElem) -> str:
    """Canonical text form: ascending numerator, then "/ t^a / (t-1)^b".

    >>> ring_to_str(RingElem(Poly([-1, 1]), 1, 0))
    '(-1 + t) / t'
    """
    if a.is_zero:
        return "0"
    terms = _poly_terms(a.num)
    parts = []
    for k, (sign, body) in enumerate(terms):
        if k == 0:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append((" - " if sign < 0 else " + ") + body)
    numer = "".join(parts)
    if not a.tpow and not a.upow:
        return numer
    if len(terms) > 1:
        numer = f"({numer})"
    out = [numer]
    if a.tpow:
        out.append("t" if a.tpow == 1 else f"t^{a.tpow}")
    if a.upow:
        out.append("(t-1)" if a.upow == 1 else f"(t-1)^{a.upow}")
    return " / ".join(out)


_RING_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(\^)|(\+)|(-)|(/)|(\()|(\)))")


def _tokenize_ring(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _RING_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"bad character in ring element at position {pos}: {text[pos:]!r}")
            break
        pos = m.end()
        kinds = ("num", "t", "pow", "plus", "minus", "slash", "lpar", "rpar")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                toks.append((kind, val, m.start()))
                break
    return toks


class _RingParser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize_ring(text)
        self.i = 0

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j][0] if j < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ValueError(f"unexpected end of ring element {self.text!r}")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind} at position {tok[2]} in {self.text!r}")
        self.i += 1
        return tok

    def rational(self) -> Fraction:
        n = int(self.take("num")[1])
        if self.peek() == "slash" and self.peek(1) == "num":
            self.take()
            d = int(self.take("num")[1])
            return Fraction(n, d)
        return Fraction(n)

    def power_suffix(self) -> int:
        if self.peek() == "pow":
            self.take()
            return int(self.take("num")[1])
        return 1

    def term(self) -> Poly:
        if self.peek() == "num":
            q = self.rational()
            if self.peek() == "t":
                self.take()
                return Poly([0] * self.power_suffix() + [q])
            return Poly([q])
        if self.peek() == "t":
            self.take()
            return Poly([0] * self.power_suffix() + [1])
        tok = self.toks[self.i] if self.i < len(self.toks) else ("end", "", len(self.text))
        raise ValueError(f"expected a term at position {tok[2]} in {self.text!r}")

    def poly_sum(self) -> Poly:
        neg = False
        if self.peek() in ("plus", "minus"):
            neg = self.take()[0] == "minus"
        p = self.term()
        if neg:
            p = -p
        while self.peek() in ("plus", "minus"):
            op = self.take()[0]
            q = self.term()
            p = p - q if op == "minus" else p + q
        return p

    def numerator(self) -> Poly:
        if self.peek() == "lpar":
            self.take()
            p = self.poly_sum()
            self.take("rpar")
            return p
        return self.poly_sum()

    def denominator_factor(self) -> tuple[int, int]:
        """Returns (tpow, upow) contribution of one '/ ...' factor."""
        if self.peek() == "t":
            self.take()
            return self.power_suffix(), 0
        if self.peek() == "lpar":
            self.take()
            self.take("t")
            self.take("minus")
            one = self.take("num")
            if one[1] != "1":
                raise ValueError(f"expected (t-1) at position {one[2]} in {self.text!r}")
            self.take("rpar")
            return 0, self.power_suffix()
        tok = self.toks[self.i] if self.i < len(self.toks) else ("end", "", len(self.text))
        raise ValueError(f"expected t or (t-1) in denominator at position {tok[2]} in {self.text!r}")

    def parse(self) -> RingElem:
        num = self.numerator()
        tpow = upow = 0
        while self.peek() == "slash":
            self.take()
            dt, du = self.denominator_factor()
            tpow += dt
            upow += du
        if self.i != len(self.toks):
            tok = self.toks[self.i]
            raise ValueError(f"trailing input at position {tok[2]} in {self.text!r}")
        return RingElem(num, tpow, upow)


def ring_from_str(text: str) -> RingElem:
    """Parse the output of ring_to_str (used mainly by test fixtures)."""
    if not text.strip():
        raise ValueError("empty ring element")
    return _RingParser(text).parse()


def ring_to_json(a: RingElem) -> dict:
    return {"num": [str(c) for c in a.num.coeffs], "tpow": a.tpow, "upow": a.upow}


def ring_from_json(d: dict) -> RingElem:
    return RingElem(Poly([Fraction(s) for s in d["num"]]),
                    int(d.get("tpow", 0)), int(d.get("upow", 0)))
