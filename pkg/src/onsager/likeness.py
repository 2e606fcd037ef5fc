"""Generator-like elements and path-shaped decompositions.

An element u is like the generator for the pair (i, j) when it commutes with
that generator and satisfies the Dolan-Grady relation against the generator
for the opposite edge (k, h).  The set of such elements is exactly
std_gen(i, j) times the coefficient ring, which is the span computed by
like_basis_elem.

Walking a path k -> h -> i -> j through all four points splits both the full
loop algebra and its Onsager subalgebra into three such spans; the supported
paths are the four basis labels.  decompose_canonical splits an arbitrary
element along the path 0-3-1-2, and decompose_onsager splits an Onsager
element along any of the four paths through that basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import INV_T, RingElem, T, TM1, T_DPRIME, T_PRIME, ONE, ZERO
from .loop import (
    LoopElem,
    L_ZERO,
    ONSAGER_B,
    bracket,
    dolan_grady_holds,
    in_onsager,
    loop_to_json,
    std_gen,
)
from .bases import BasisId, BasisVector, basis_elem, coords

POINTS = frozenset((0, 1, 2, 3))


def _check_pair(pair) -> tuple[int, int]:
    i, j = pair
    if i == j or not {i, j} <= POINTS:
        raise ValueError(f"({i}, {j}) must be a pair of distinct points in 0..3")
    return i, j


def is_like(pair, u: LoopElem) -> bool:
    """Whether u commutes with std_gen(*pair) and is Dolan-Grady against the
    opposite edge.  The opposite edge can be taken in either order: flipping
    it negates both sides of the relation."""
    i, j = _check_pair(pair)
    k, h = sorted(POINTS - {i, j})
    if not bracket(std_gen(i, j), u).is_zero:
        return False
    return dolan_grady_holds(std_gen(k, h), u)


_KINDS = {"one": ONE, "t_pow": T, "tp_pow": T_PRIME, "tpp_pow": T_DPRIME}


def like_basis_elem(pair, kind: str, n: int = 0) -> LoopElem:
    """Basis of the like-span for a pair: the generator times 1, t^n, (t')^n
    or (t'')^n with t' = (t-1)/t and t'' = 1/(1-t)."""
    i, j = _check_pair(pair)
    if kind not in _KINDS:
        raise ValueError(f"unknown kind {kind!r}; use one, t_pow, tp_pow or tpp_pow")
    if kind == "one":
        if n != 0:
            raise ValueError("kind 'one' takes index 0")
        return std_gen(i, j)
    if n < 1:
        raise ValueError(f"kind {kind!r} needs a positive power")
    return std_gen(i, j).scale(_KINDS[kind] ** n)


@dataclass(frozen=True)
class PathParts:
    """The three summands of a path-shaped decomposition, in path order."""

    label: BasisId
    kh: LoopElem
    hi: LoopElem
    ij: LoopElem

    def total(self) -> LoopElem:
        return self.kh + self.hi + self.ij

    def to_json(self) -> dict:
        return {"label": self.label.value,
                "kh": loop_to_json(self.kh),
                "hi": loop_to_json(self.hi),
                "ij": loop_to_json(self.ij)}


def decompose_canonical(u: LoopElem) -> PathParts:
    """Split any loop algebra element along the path 0-3-1-2.

    The 0-3 part is the generator span through y, the 3-1 part is what is left
    on z, and the 1-2 part is the x component.
    """
    py_over_t = u.py * INV_T
    part_kh = ONSAGER_B.scale(py_over_t)
    part_hi = LoopElem(ZERO, ZERO, u.pz - TM1 * py_over_t)
    part_ij = LoopElem(u.px, ZERO, ZERO)
    return PathParts(BasisId.UU, part_kh, part_hi, part_ij)


def decompose_onsager(label, u: LoopElem) -> PathParts:
    """Split an Onsager element along one of the four paths.

    The slots follow the path: the B family spans the k-h slot, psi the h-i
    slot and A the i-j slot of the basis named by the label.
    """
    basis = BasisId.parse(label)
    if not in_onsager(u):
        raise ValueError("element is not in the Onsager subalgebra")
    c = coords(u, basis)
    parts = {"B": L_ZERO, "psi": L_ZERO, "A": L_ZERO}
    for (family, index), coeff in c.items():
        vec = basis_elem(BasisVector(basis, family, index))
        parts[family] = parts[family] + vec * coeff
    return PathParts(basis, parts["B"], parts["psi"], parts["A"])
