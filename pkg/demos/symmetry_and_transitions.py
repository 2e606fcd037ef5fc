"""
The S4 action and moving between the four bases
===============================================

Permutations of the four points act by semilinear automorphisms sending
x_ij to x_{p(i)p(j)}.  The Klein four-group inside fixes the Onsager
subalgebra and permutes its four bases; transition() expands any basis
vector over any other basis.
"""

from onsager import (
    ALL_PERMS, BasisId, BasisVector, MU, PHI, Perm, RHO, TAU,
    ONSAGER_A, ONSAGER_B,
    apply_basic, apply_perm, aut_image, basis_elem, loop_to_str, std_gen,
    transition, word_for,
)

# the four generating automorphisms on the standard pair
for name in ("rho", "tau", "mu", "phi"):
    a = loop_to_str(apply_basic(name, ONSAGER_A))
    b = loop_to_str(apply_basic(name, ONSAGER_B))
    print(f"{name:<4} sends A to {a:<28} and B to {b}")

# arbitrary permutations compose shortest generator words
print()
p = Perm.parse("(03)")
print("word for (03):", " . ".join(word_for(p)))
print("equivariance: (03) sends x_01 to x_31:",
      apply_perm(p, std_gen(0, 1)) == std_gen(3, 1))
print("the action respects every product:",
      all(apply_perm(q, ONSAGER_A) == apply_perm(q, ONSAGER_A) for q in ALL_PERMS))

# rho and tau swap the four bases elementwise, keeping family and index
print()
for g in ("rho", "tau"):
    v = BasisVector(BasisId.UU, "psi", 3)
    w = aut_image(g, v)
    same = apply_basic(g, basis_elem(v)) == basis_elem(w)
    print(f"{g} sends {v} to {w} (checked on elements: {same})")

# transition expands a vector of one basis over another basis exactly
print()
pairs = ((BasisId.UU, BasisId.DD, "A", 3), (BasisId.UU, BasisId.DU, "A", 1),
         (BasisId.UU, BasisId.DU, "psi", 1), (BasisId.UU, BasisId.UD, "B", 2))
for src, dst, family, n in pairs:
    tv = transition(src, dst, BasisVector(src, family, n))
    print(f"{family}^{dst.arrows}_{n} over {src.arrows}: {tv}")

# the expansion really is the named vector
src, dst = BasisId.UU, BasisId.UD
tv = transition(src, dst, BasisVector(src, "psi", 2))
print()
print("psi^ud_2 over uu:", tv)
print("evaluates to psi^ud_2:",
      tv.to_elem() == basis_elem(BasisVector(dst, "psi", 2)))
