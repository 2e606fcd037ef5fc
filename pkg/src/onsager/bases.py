"""Four bases of the Onsager subalgebra indexed by arrow pairs.

Each basis lists A_0, B_0, psi_1, A_1, B_1, psi_2, ... and is named either by
its arrow code or by the path of points whose consecutive pairs give the slots
the three families live in:

    uu = [0312]    dd = [3021]    du = [0321]    ud = [3012]

Closed forms (A, B here are the standard generators x(x)1 and
y(x)t + z(x)(t-1); the psi family starts at index 1):

    uu: A_i =  x (x) (t-1)^i      B_i =  B (t-1)^i   psi_i =  z (x) (t-1)^i
    dd: A_i = -x (x) (t-1)^i      B_i = -B (t-1)^i   psi_i = (-x(x)1 - y(x)t)(t-1)^(i-1)
    du: A_i = -x (x) (-t)^i       B_i =  B (-t)^i    psi_i = -y (x) (-t)^i
    ud: A_i =  x (x) (-t)^i       B_i = -B (-t)^i    psi_i = (x(x)1 - z(x)(t-1))(-t)^(i-1)

All four share one bracket table (indices add; same family commutes):

    [psi_i, A_j] = 2 psi_{i+j} + 2 A_{i+j}
    [B_i, psi_j] = 2 B_{i+j} + 2 psi_{i+j}
    [A_i, B_j]   = 2 A_{i+j} + 2 B_{i+j} - 4 psi_{i+j+1}

and one recursion shape from the seeds (A_0, B_0), differing only in three
signs (s_psi, s_a, s_b) per basis:

    psi_i = A_{i-1}/2 + B_{i-1}/2 + s_psi [A_{i-1}, B]/4
    A_i   = s_a [psi_i, A]/2 - psi_i
    B_i   = s_b [B, psi_i]/2 - psi_i
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .ring import Poly, RingElem, _neg_t_pow, _tm1_pow, shift_coords
from .loop import L_ZERO, LoopElem, ONSAGER_A, ONSAGER_B, in_onsager
from . import expressions as ex


class BasisId(Enum):
    """One of the four bases, valued by its path label."""

    UU = "0312"
    DD = "3021"
    DU = "0321"
    UD = "3012"

    @property
    def arrows(self) -> str:
        return _ARROWS[self]

    @property
    def path(self) -> tuple[int, int, int, int]:
        return tuple(int(c) for c in self.value)

    @property
    def slots(self) -> dict[str, tuple[int, int]]:
        """Generator pair labelling the slot each family spans."""
        k, h, i, j = self.path
        return {"B": (k, h), "psi": (h, i), "A": (i, j)}

    @classmethod
    def parse(cls, text) -> "BasisId":
        if isinstance(text, BasisId):
            return text
        s = str(text).strip().strip("[]")
        for b in cls:
            if s == b.value or s.lower() == b.arrows:
                return b
        raise ValueError(f"unknown basis {text!r}; use uu/dd/du/ud or 0312/3021/0321/3012")

    def __str__(self):
        return self.arrows


_ARROWS = {BasisId.UU: "uu", BasisId.DD: "dd", BasisId.DU: "du", BasisId.UD: "ud"}

FAMILIES = ("A", "B", "psi")
_FAMILY_RANK = {"A": 0, "B": 1, "psi": 2}


@dataclass(frozen=True)
class BasisVector:
    """A named basis element such as A^uu_3 or psi^du_2."""

    basis: BasisId
    family: str
    index: int

    def __post_init__(self):
        if not isinstance(self.basis, BasisId):
            object.__setattr__(self, "basis", BasisId.parse(self.basis))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; use A, B or psi")
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"index must be a nonnegative integer, got {self.index!r}")
        if self.family == "psi" and self.index < 1:
            raise ValueError("the psi family starts at index 1")

    def __str__(self):
        return f"{self.family}^{self.basis.arrows}_{self.index}"


# seed signs: (A_0, B_0) as multiples of the standard generators
_SEED_SIGNS = {
    BasisId.UU: (1, 1),
    BasisId.DD: (-1, -1),
    BasisId.DU: (-1, 1),
    BasisId.UD: (1, -1),
}

# recursion signs (s_psi, s_a, s_b)
_REC_SIGNS = {
    BasisId.UU: (-1, 1, 1),
    BasisId.DD: (1, -1, -1),
    BasisId.DU: (-1, -1, 1),
    BasisId.UD: (1, 1, -1),
}


def basis_seeds(basis: BasisId) -> tuple[LoopElem, LoopElem]:
    """The pair (A_0, B_0) for the basis."""
    basis = BasisId.parse(basis)
    sa, sb = _SEED_SIGNS[basis]
    return ONSAGER_A * sa, ONSAGER_B * sb


def _center_pow(basis: BasisId, i: int) -> RingElem:
    if basis in (BasisId.UU, BasisId.DD):
        return RingElem(_tm1_pow(i))
    return RingElem(_neg_t_pow(i))


_X1 = LoopElem(RingElem(Poly([1])))
_PSI_PREFACTOR = {
    # for dd and ud the psi family is a prefactor times center^(i-1)
    BasisId.DD: LoopElem(RingElem(Poly([-1])), RingElem(Poly([0, -1]))),
    BasisId.UD: LoopElem(RingElem(Poly([1])), RingElem(), RingElem(Poly([1, -1]))),
}


def basis_elem(v: BasisVector) -> LoopElem:
    """Closed form of a basis vector as a loop algebra element."""
    b, fam, i = v.basis, v.family, v.index
    sa, sb = _SEED_SIGNS[b]
    if fam == "A":
        return (ONSAGER_A * sa).scale(_center_pow(b, i))
    if fam == "B":
        return (ONSAGER_B * sb).scale(_center_pow(b, i))
    if b is BasisId.UU:
        return LoopElem(RingElem(), RingElem(), _center_pow(b, i))
    if b is BasisId.DU:
        return LoopElem(RingElem(), -_center_pow(b, i), RingElem())
    return _PSI_PREFACTOR[b].scale(_center_pow(b, i - 1))


def basis_elem_recursive(v: BasisVector) -> ex.Expr:
    """The same vector as a bracket expression over the seeds.

    The returned tree shares subtrees, so its value is cheap to evaluate even
    though the printed form roughly triples in size per index step.
    Builds the chain afresh on every call; RecursionTable memoizes.
    """
    return RecursionTable(v.basis).expr(v.family, v.index)


class RecursionTable:
    """Memoized recursive construction for one basis.

    Not thread-safe; share one table per thread or use basis_elem_recursive.
    """

    def __init__(self, basis: BasisId):
        self.basis = BasisId.parse(basis)
        sa, sb = _SEED_SIGNS[self.basis]
        self._memo: dict[tuple[str, int], ex.Expr] = {
            ("A", 0): ex.GEN_A if sa > 0 else ex.Neg(ex.GEN_A),
            ("B", 0): ex.GEN_B if sb > 0 else ex.Neg(ex.GEN_B),
        }
        self._top = 0  # indices filled through this level

    def expr(self, family: str, index: int) -> ex.Expr:
        key = (family, index)
        if key not in self._memo:
            # validate through the vector type, then extend the chain
            BasisVector(self.basis, family, index)
            self._extend(index)
        return self._memo[key]

    def _extend(self, upto: int):
        s_psi, s_a, s_b = _REC_SIGNS[self.basis]
        half = Fraction(1, 2)
        quarter = Fraction(1, 4)
        memo = self._memo
        for i in range(self._top + 1, upto + 1):
            a_prev = memo["A", i - 1]
            b_prev = memo["B", i - 1]
            lead = ex.Sum(ex.Scale(half, a_prev), ex.Scale(half, b_prev))
            br = ex.Scale(quarter, ex.Bracket(a_prev, ex.GEN_B))
            psi = ex.Sum(lead, br if s_psi > 0 else ex.Neg(br))
            memo["psi", i] = psi
            bra = ex.Scale(half, ex.Bracket(psi, ex.GEN_A))
            memo["A", i] = ex.Sum(bra if s_a > 0 else ex.Neg(bra), ex.Neg(psi))
            brb = ex.Scale(half, ex.Bracket(ex.GEN_B, psi))
            memo["B", i] = ex.Sum(brb if s_b > 0 else ex.Neg(brb), ex.Neg(psi))
        self._top = max(self._top, upto)


# ---------------------------------------------------------------------------
# coordinates


class OCoords:
    """Finitely supported rational coordinates over one basis.

    Keys are (family, index) pairs; zero coefficients are dropped, so equal
    coordinate vectors compare equal.
    """

    __slots__ = ("basis", "_c")

    def __init__(self, basis: BasisId, items: Union[Mapping, Iterable] = ()):
        basis = BasisId.parse(basis)
        data = {}
        pairs = items.items() if isinstance(items, Mapping) else items
        for (family, index), coeff in pairs:
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            BasisVector(basis, family, index)
            key = (family, index)
            if key in data:
                raise ValueError(f"duplicate coordinate {key}")
            data[key] = coeff
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_c", data)

    def __setattr__(self, name, value):
        raise AttributeError("OCoords is immutable")

    def get(self, family: str, index: int) -> Fraction:
        return self._c.get((family, index), Fraction(0))

    def items(self) -> list[tuple[tuple[str, int], Fraction]]:
        return sorted(self._c.items(),
                      key=lambda kv: (_FAMILY_RANK[kv[0][0]], kv[0][1]))

    def vectors(self) -> list[tuple[BasisVector, Fraction]]:
        return [(BasisVector(self.basis, f, i), c) for (f, i), c in self.items()]

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, OCoords):
            return NotImplemented
        return self.basis is other.basis and self._c == other._c

    def __hash__(self):
        return hash((self.basis, frozenset(self._c.items())))

    def __repr__(self):
        return f"OCoords({self.basis.arrows!r}, {dict(self.items())!r})"

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for k, ((family, index), coeff) in enumerate(self.items()):
            name = str(BasisVector(self.basis, family, index))
            body = name if coeff == 1 else f"{abs(coeff)} {name}"
            if k == 0:
                out.append(("-" if coeff < 0 else "") + body)
            else:
                out.append((" - " if coeff < 0 else " + ") + body)
        return "".join(out)

    def plus(self, other: "OCoords") -> "OCoords":
        if other.basis is not self.basis:
            raise ValueError("coordinate vectors over different bases")
        data = dict(self._c)
        for key, c in other._c.items():
            data[key] = data.get(key, Fraction(0)) + c
        return OCoords(self.basis, data)

    def scaled(self, q) -> "OCoords":
        q = Fraction(q)
        return OCoords(self.basis, {k: c * q for k, c in self._c.items()})

    def to_elem(self) -> LoopElem:
        """Recombine into the loop algebra."""
        acc = L_ZERO
        for (family, index), coeff in self._c.items():
            acc = acc + basis_elem(BasisVector(self.basis, family, index)) * coeff
        return acc

    def to_json(self) -> dict:
        return {"basis": self.basis.arrows,
                "terms": [{"family": f, "index": i, "coeff": str(c)}
                          for (f, i), c in self.items()]}

    @classmethod
    def from_json(cls, d: dict) -> "OCoords":
        return cls(BasisId.parse(d["basis"]),
                   [((t["family"], int(t["index"])), Fraction(t["coeff"]))
                    for t in d["terms"]])


def _cf(lst: list[Fraction], i: int) -> Fraction:
    return lst[i] if 0 <= i < len(lst) else Fraction(0)


def coords(u: LoopElem, basis: BasisId) -> OCoords:
    """Coordinates of an Onsager element in the given basis.

    Each basis is triangular with respect to one expansion center, so the
    extraction is direct: peel the family determined by a single component,
    then correct the remaining components.  Rejects elements outside the
    Onsager subalgebra.
    """
    basis = BasisId.parse(basis)
    if not in_onsager(u):
        raise ValueError("element is not in the Onsager subalgebra")
    px = u.px.as_poly()
    py = u.py.as_poly()
    pz = u.pz.as_poly()
    if basis in (BasisId.UU, BasisId.DD):
        center = "t_minus_1"
    else:
        center = "neg_t"
    xc = shift_coords(px, center)
    yc = shift_coords(py.exact_div_t(), center)   # py/t, exact on Onsager elements
    if basis in (BasisId.DU, BasisId.UD):
        zc = shift_coords(pz.exact_div_tm1(), center)
    else:
        zc = shift_coords(pz, center)
    n = max(len(xc), len(yc), len(zc)) + 1
    data = {}

    if basis is BasisId.UU:
        # x carries A, y/t carries B, z carries psi above the B echo
        for i in range(n):
            data["A", i] = _cf(xc, i)
            data["B", i] = _cf(yc, i)
        for k in range(1, n + 1):
            data["psi", k] = _cf(zc, k) - _cf(yc, k - 1)
    elif basis is BasisId.DD:
        # z determines B, then y/t gives psi, then x gives A
        b = [-_cf(zc, i + 1) for i in range(n)]
        psi = [-_cf(yc, i) - b[i] for i in range(n)]
        for i in range(n):
            data["B", i] = b[i]
            data["psi", i + 1] = psi[i]
            data["A", i] = -_cf(xc, i) - psi[i]
    elif basis is BasisId.DU:
        # z/(t-1) determines B, then y/t gives psi, then x gives A
        b = [_cf(zc, i) for i in range(n)]
        for i in range(n):
            data["A", i] = -_cf(xc, i)
            data["B", i] = b[i]
            data["psi", i + 1] = _cf(yc, i) - b[i]
    else:
        # y/t determines B, then z/(t-1) gives psi, then x gives A
        b = [-_cf(yc, i) for i in range(n)]
        psi = [-_cf(zc, i) - b[i] for i in range(n)]
        for i in range(n):
            data["B", i] = b[i]
            data["psi", i + 1] = psi[i]
            data["A", i] = _cf(xc, i) - psi[i]
    return OCoords(basis, data)


# structure constants shared by all four bases, keyed by family pair in
# canonical order; values build (family, index, coefficient) from (i, j)
def _bracket_table(f1: str, i: int, f2: str, j: int):
    if f1 == f2:
        return []
    if (f1, f2) == ("psi", "A"):
        return [("psi", i + j, 2), ("A", i + j, 2)]
    if (f1, f2) == ("B", "psi"):
        return [("B", i + j, 2), ("psi", i + j, 2)]
    if (f1, f2) == ("A", "B"):
        return [("A", i + j, 2), ("B", i + j, 2), ("psi", i + j + 1, -4)]
    flipped = _bracket_table(f2, j, f1, i)
    return [(f, k, -c) for f, k, c in flipped]


def bracket_coords(basis: BasisId, v1: BasisVector, v2: BasisVector) -> OCoords:
    """Structure constants: the bracket [v1, v2] as coordinates."""
    basis = BasisId.parse(basis)
    if v1.basis is not basis or v2.basis is not basis:
        raise ValueError("bracket_coords needs both vectors in the stated basis")
    table = _bracket_table(v1.family, v1.index, v2.family, v2.index)
    return OCoords(basis, [((f, k), c) for f, k, c in table])
