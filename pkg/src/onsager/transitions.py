"""Moving basis vectors between the four bases.

aut_image(g, v) names the image of a basis vector under rho or tau: both
swap bases in pairs (rho: uu<->dd, du<->ud; tau: uu<->du, dd<->ud) keeping
family and index.

transition(src, dst, v) expands the dst-basis vector named by v's family and
index over the src basis.  Convention: the result is coordinates over src of
basis_elem(BasisVector(dst, v.family, v.index)), so

    basis_elem((dst, f, n)) == transition(src, dst, (src, f, n)).to_elem()

with to_elem() taken over src.  Adjacent pairs (one swap apart) have sparse
closed forms; opposite pairs compose the two.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .bases import BasisId, BasisVector, OCoords

_RHO_SWAP = {BasisId.UU: BasisId.DD, BasisId.DD: BasisId.UU,
             BasisId.DU: BasisId.UD, BasisId.UD: BasisId.DU}
_TAU_SWAP = {BasisId.UU: BasisId.DU, BasisId.DU: BasisId.UU,
             BasisId.DD: BasisId.UD, BasisId.UD: BasisId.DD}
_SWAPS = {"rho": _RHO_SWAP, "tau": _TAU_SWAP}


def aut_image(g: str, v: BasisVector) -> BasisVector:
    """Where rho or tau sends a basis vector: same family and index, paired
    basis."""
    if g not in _SWAPS:
        raise ValueError(f"unknown automorphism {g!r}; use rho or tau")
    return BasisVector(_SWAPS[g][v.basis], v.family, v.index)


def _rho_edge(src: BasisId, family: str, n: int) -> OCoords:
    # A and B flip sign; psi_n picks up the previous A and B
    if family == "A" or family == "B":
        return OCoords(src, {(family, n): -1})
    return OCoords(src, {("A", n - 1): -1, ("B", n - 1): -1, ("psi", n): 1})


def _tau_edge(src: BasisId, family: str, n: int) -> OCoords:
    # binomial shear in the index with alternating sign
    if family == "A":
        s = (-1) ** (n + 1)
        return OCoords(src, {("A", j): s * comb(n, j) for j in range(n + 1)})
    if family == "B":
        s = (-1) ** n
        return OCoords(src, {("B", j): s * comb(n, j) for j in range(n + 1)})
    i = n - 1
    data = {("B", j): (-1) ** i * comb(i, j) for j in range(i + 1)}
    for j in range(i + 1):
        data["psi", j + 1] = (-1) ** (i + 1) * comb(i, j)
    return OCoords(src, data)


def transition(src, dst, v: BasisVector) -> OCoords:
    """Expand the dst vector with v's family and index over the src basis."""
    src = BasisId.parse(src)
    dst = BasisId.parse(dst)
    if v.basis is not src:
        raise ValueError(f"vector {v} does not belong to the source basis "
                         f"{src.arrows}")
    family, n = v.family, v.index
    if src is dst:
        return OCoords(src, {(family, n): 1})
    if _RHO_SWAP[src] is dst:
        return _rho_edge(src, family, n)
    if _TAU_SWAP[src] is dst:
        return _tau_edge(src, family, n)
    # opposite corner: go through the rho partner, which is tau-adjacent to dst
    mid = _RHO_SWAP[src]
    over_mid = transition(mid, dst, BasisVector(mid, family, n))
    acc = OCoords(src, {})
    for (f2, i2), c in over_mid.items():
        acc = acc.plus(transition(src, mid, BasisVector(src, f2, i2)).scaled(c))
    return acc
