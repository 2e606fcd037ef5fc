"""The three-point sl2 loop algebra and its Onsager subalgebra.

Elements are written over the equitable basis x, y, z of sl2, which satisfies

    [x, y] = 2x + 2y      [y, z] = 2y + 2z      [z, x] = 2z + 2x,

tensored with the coefficient ring Q[t, 1/t, 1/(t-1)].  A LoopElem stores the
three ring coefficients (px, py, pz).  The algebra is also a right module over
the coefficient ring via scale().

std_gen(i, j) gives the twelve generators indexed by ordered pairs of distinct
points in {0, 1, 2, 3}; they satisfy the tetrahedron relations, and the pair
A = std_gen(1, 2), B = std_gen(0, 3) generates a copy of the Onsager algebra
characterized by in_onsager().
"""

from __future__ import annotations

from fractions import Fraction

from .ring import (
    INV_T,
    ONE,
    P_T,
    P_TM1,
    Poly,
    RingElem,
    T,
    TM1,
    ZERO,
    ring_from_json,
    ring_subset,
    ring_to_json,
    ring_to_str,
)


class LoopElem:
    """x (x) px + y (x) py + z (x) pz with ring coefficients."""

    __slots__ = ("px", "py", "pz")

    def __init__(self, px: RingElem = ZERO, py: RingElem = ZERO, pz: RingElem = ZERO):
        for name, val in (("px", px), ("py", py), ("pz", pz)):
            if not isinstance(val, RingElem):
                raise TypeError(f"{name} must be a RingElem")
        object.__setattr__(self, "px", px)
        object.__setattr__(self, "py", py)
        object.__setattr__(self, "pz", pz)

    def __setattr__(self, name, value):
        raise AttributeError("LoopElem is immutable")

    @property
    def is_zero(self) -> bool:
        return self.px.is_zero and self.py.is_zero and self.pz.is_zero

    def __eq__(self, other):
        if not isinstance(other, LoopElem):
            return NotImplemented
        return self.px == other.px and self.py == other.py and self.pz == other.pz

    def __hash__(self):
        return hash((self.px, self.py, self.pz))

    def __repr__(self):
        return f"LoopElem({loop_to_str(self)!r})"

    def __str__(self):
        return loop_to_str(self)

    def __add__(self, other: "LoopElem") -> "LoopElem":
        if not isinstance(other, LoopElem):
            return NotImplemented
        return LoopElem(self.px + other.px, self.py + other.py, self.pz + other.pz)

    def __sub__(self, other: "LoopElem") -> "LoopElem":
        if not isinstance(other, LoopElem):
            return NotImplemented
        return LoopElem(self.px - other.px, self.py - other.py, self.pz - other.pz)

    def __neg__(self) -> "LoopElem":
        return LoopElem(-self.px, -self.py, -self.pz)

    def __mul__(self, other):
        # scalar multiple; the module action by ring elements is scale()
        if isinstance(other, (int, Fraction)):
            return LoopElem(self.px * other, self.py * other, self.pz * other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, a: RingElem) -> "LoopElem":
        """Right module action: (u)a multiplies every coefficient by a."""
        if not isinstance(a, RingElem):
            raise TypeError("scale expects a RingElem")
        return LoopElem(self.px * a, self.py * a, self.pz * a)


L_ZERO = LoopElem()


def bracket(u: LoopElem, v: LoopElem) -> LoopElem:
    """Lie bracket, bilinear over the coefficient ring.

    Expanding over the equitable relations gives, with
    P = px(u)py(v) - px(v)py(u), Q = py(u)pz(v) - py(v)pz(u),
    R = pz(u)px(v) - pz(v)px(u):

        [u, v] = x (x) (2P + 2R) + y (x) (2P + 2Q) + z (x) (2Q + 2R)
    """
    p = u.px * v.py - v.px * u.py
    q = u.py * v.pz - v.py * u.pz
    r = u.pz * v.px - v.pz * u.px
    two = 2
    return LoopElem((p + r) * two, (p + q) * two, (q + r) * two)


# the six independent generators; the other six are the negatives
_GEN_TABLE = {
    (1, 2): LoopElem(ONE, ZERO, ZERO),
    (2, 3): LoopElem(ZERO, ONE, ZERO),
    (3, 1): LoopElem(ZERO, ZERO, ONE),
    (0, 3): LoopElem(ZERO, T, TM1),
    (0, 1): LoopElem(RingElem(Poly([-1]), 1, 0), ZERO, RingElem(P_TM1, 1, 0)),
    (0, 2): LoopElem(RingElem(Poly([-1]), 0, 1), RingElem(Poly([0, -1]), 0, 1), ZERO),
}


def std_gen(i: int, j: int) -> LoopElem:
    """Generator for the ordered pair (i, j) of distinct points in {0,1,2,3}."""
    if i == j or not (0 <= i <= 3 and 0 <= j <= 3):
        raise ValueError(f"generator label ({i}, {j}) must be a pair of distinct points in 0..3")
    if (i, j) in _GEN_TABLE:
        return _GEN_TABLE[i, j]
    return -_GEN_TABLE[j, i]


ONSAGER_A = std_gen(1, 2)
ONSAGER_B = std_gen(0, 3)


def dolan_grady_holds(u: LoopElem, v: LoopElem) -> bool:
    """Whether [u, [u, [u, v]]] = 4[u, v] holds exactly."""
    first = bracket(u, v)
    lhs = bracket(u, bracket(u, first))
    return lhs == first * 4


def in_onsager(u: LoopElem) -> bool:
    """Membership in x(x)Q[t] + y(x)tQ[t] + z(x)(t-1)Q[t]."""
    return (ring_subset(u.px, "poly")
            and ring_subset(u.py, "t_poly")
            and ring_subset(u.pz, "tm1_poly"))


# ---------------------------------------------------------------------------
# text and JSON forms


def _component_str(letter: str, a: RingElem, tensor: str) -> tuple[int, str]:
    """(sign, text) with the sign hoisted out of single-term coefficients."""
    s = ring_to_str(a)
    sign = 1
    if s.startswith("-"):
        sign = -1
        s = s[1:]
    if "+" in s or " - " in s or "/" in s:
        if sign < 0:
            # keep the sign inside multi-part coefficients untouched
            sign = 1
            body = f"(-{s})"
        else:
            body = f"({s})"
    else:
        body = s
    return sign, f"{letter}{tensor}{body}"


def loop_to_str(u: LoopElem, tensor: str = "⊗") -> str:
    if u.is_zero:
        return "0"
    parts = []
    for letter, a in (("x", u.px), ("y", u.py), ("z", u.pz)):
        if a.is_zero:
            continue
        parts.append(_component_str(letter, a, tensor))
    out = []
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


def loop_to_json(u: LoopElem) -> dict:
    return {"x": ring_to_json(u.px), "y": ring_to_json(u.py), "z": ring_to_json(u.pz)}


def loop_from_json(d: dict) -> LoopElem:
    return LoopElem(ring_from_json(d["x"]), ring_from_json(d["y"]), ring_from_json(d["z"]))
