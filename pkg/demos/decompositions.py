"""
Direct-sum decompositions along generator slots
===============================================

An element u is "like" the edge (i, j) when it commutes with x_ij and
satisfies Dolan-Grady against the opposite edge.  The loop algebra splits
along the path 0 -> 3 -> 1 -> 2, and the Onsager subalgebra splits along
each of its four path labels.
"""

from fractions import Fraction

from onsager import (
    BasisId, INV_T, LoopElem, ONSAGER_A, ONSAGER_B, Poly, RingElem,
    bracket, decompose_canonical, decompose_onsager, is_like, like_basis_elem,
    loop_to_str,
)

# likeness of the generators themselves, and of module multiples
print("A is x_12-like:", is_like((1, 2), ONSAGER_A))
print("A.(1/t) is x_12-like:", is_like((1, 2), ONSAGER_A.scale(INV_T)))
print("A is x_03-like:", is_like((0, 3), ONSAGER_A))

# spanning elements of each slot come in four kinds
print()
for kind, n in (("one", 0), ("t_pow", 2), ("tp_pow", 1), ("tpp_pow", 1)):
    u = like_basis_elem((0, 1), kind, n)
    print(f"slot (0,1) {kind:<7} n={n}: {loop_to_str(u)}")

# the canonical decomposition covers the whole loop algebra
print()
u = LoopElem(RingElem(Poly([1, 2]), 1, 0),
             RingElem(Poly([0, Fraction(1, 2)])),
             RingElem(Poly([3]), 0, 1))
parts = decompose_canonical(u)
print("element:   ", loop_to_str(u))
print("x_03 part: ", loop_to_str(parts.kh))
print("x_31 part: ", loop_to_str(parts.hi))
print("x_12 part: ", loop_to_str(parts.ij))
print("recomposes:", parts.total() == u)

# inside the subalgebra there is one decomposition per basis label, and the
# three parts collect the B, psi and A families respectively
print()
w = bracket(ONSAGER_A, ONSAGER_B)
print("element:", loop_to_str(w))
for label in BasisId:
    parts = decompose_onsager(label, w)
    k, h, i, j = label.path
    print(f"  {label.arrows}: x_{k}{h} part {loop_to_str(parts.kh):<24} "
          f"x_{h}{i} part {loop_to_str(parts.hi):<24} "
          f"x_{i}{j} part {loop_to_str(parts.ij)}")
