"""
The three-point loop algebra and its standard generators
========================================================

Elements are x(x)a + y(x)b + z(x)c with a, b, c in the ring of rational
polynomials in t with denominators only at t and t-1.  The bracket follows
the equitable table [x,y] = 2x+2y, [y,z] = 2y+2z, [z,x] = 2z+2x.
"""

from fractions import Fraction

from onsager import (
    LoopElem, ONE, ONSAGER_A, ONSAGER_B, ZERO,
    bracket, dolan_grady_holds, in_onsager, loop_to_str, ring_from_str, std_gen,
)

show = lambda u: loop_to_str(u)

# the standard generator pair: A = x(x)1 and B = y(x)t + z(x)(t-1)
print("A          =", show(ONSAGER_A))
print("B          =", show(ONSAGER_B))
print("[A, B]     =", show(bracket(ONSAGER_A, ONSAGER_B)))

# the defining Dolan-Grady relations hold exactly
print("Dolan-Grady A over B:", dolan_grady_holds(ONSAGER_A, ONSAGER_B))
print("Dolan-Grady B over A:", dolan_grady_holds(ONSAGER_B, ONSAGER_A))

# twelve generators x_ij, one per ordered pair of the four points;
# opposite orders are negatives and adjacent pairs bracket to their sum
print()
for i, j in ((0, 1), (0, 2), (1, 2), (0, 3)):
    print(f"x_{i}{j}       =", show(std_gen(i, j)))
lhs = bracket(std_gen(0, 1), std_gen(1, 2))
rhs = std_gen(0, 1) * 2 + std_gen(1, 2) * 2
print("[x_01, x_12] == 2x_01 + 2x_12:", lhs == rhs)

# coefficients live in a localized ring; arithmetic cancels automatically
a = ring_from_str("(t^2 - t) / t")
print()
print("(t^2 - t)/t simplifies to:", a)

# scaling by ring elements is the module action
u = ONSAGER_A.scale(a) + ONSAGER_B.scale(ONE * Fraction(1, 2))
print("A.(t-1) + B/2 =", show(u))

# the subalgebra generated by A and B: x-part polynomial, y-part divisible
# by t, z-part divisible by t-1
print()
print("u in the subalgebra:", in_onsager(u))
print("[u, B] stays inside:", in_onsager(bracket(u, ONSAGER_B)))
print("y(x)1 in the subalgebra:", in_onsager(LoopElem(ZERO, ONE, ZERO)))
