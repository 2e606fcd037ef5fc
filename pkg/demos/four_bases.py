"""
Four bases of the Onsager subalgebra
====================================

Each basis lists A_i, B_i (i >= 0) and psi_i (i >= 1), built from signed
copies of the standard generators by one shared recursion; the closed forms
scale by powers of t-1 or -t.
"""

from onsager import (
    BasisId, BasisVector, FAMILIES,
    basis_elem, basis_elem_recursive, bracket, bracket_coords, coords,
    evaluate, loop_to_str, render,
)

# closed forms of the first few vectors of each basis
for b in BasisId:
    row = []
    for family, index in (("A", 0), ("B", 0), ("psi", 1), ("A", 1)):
        v = BasisVector(b, family, index)
        row.append(f"{v} = {loop_to_str(basis_elem(v))}")
    print(f"[{b.value}] ({b.arrows}):  " + ";  ".join(row))

# the recursion produces the same vectors as bracket expressions in A and B
print()
v = BasisVector(BasisId.UU, "psi", 1)
tree = basis_elem_recursive(v)
print(f"{v} as an expression:", render(tree))
print("evaluates to the closed form:", evaluate(tree) == basis_elem(v))

v = BasisVector(BasisId.UU, "A", 1)
tree = basis_elem_recursive(v)
print(f"{v} as an expression:", render(tree))
print("evaluates to the closed form:", evaluate(tree) == basis_elem(v))

# all four bases share one bracket table: indices add, equal families
# commute, and [A_i, B_j] also picks up -4 psi_{i+j+1}
print()
for b in (BasisId.UU, BasisId.UD):
    lhs = bracket_coords(b, BasisVector(b, "psi", 2), BasisVector(b, "A", 3))
    print(f"[psi^{b.arrows}_2, A^{b.arrows}_3] = {lhs}")
    lhs = bracket_coords(b, BasisVector(b, "A", 1), BasisVector(b, "B", 2))
    print(f"[A^{b.arrows}_1, B^{b.arrows}_2] = {lhs}")

# any subalgebra element has exact coordinates in every basis
print()
u = bracket(basis_elem(BasisVector(BasisId.UU, "A", 1)),
            basis_elem(BasisVector(BasisId.UU, "B", 0)))
print("element:", loop_to_str(u))
for b in BasisId:
    c = coords(u, b)
    print(f"  over {b.arrows}: {c}   (recombines: {c.to_elem() == u})")
