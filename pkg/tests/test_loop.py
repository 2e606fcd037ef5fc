"""Loop algebra with the equitable basis and the twelve edge generators.

The bracket oracle here expands all nine monomial pairs through the defining
table [x,y] = 2x + 2y, [y,z] = 2y + 2z, [z,x] = 2z + 2x, independently of the
closed form the library computes with.
"""

from itertools import permutations

import pytest
from hypothesis import given, settings

from onsager import (
    INV_T,
    L_ZERO,
    LoopElem,
    ONE as RING_ONE,
    ONSAGER_A,
    ONSAGER_B,
    T,
    TM1,
    ZERO,
    bracket,
    dolan_grady_holds,
    in_onsager,
    loop_from_json,
    loop_to_json,
    loop_to_str,
    std_gen,
)
from conftest import loop_elems, onsager_elems, ring_elems

_TABLE = {
    ("x", "y"): (("x", 2), ("y", 2)),
    ("y", "z"): (("y", 2), ("z", 2)),
    ("z", "x"): (("z", 2), ("x", 2)),
}


def bracket_oracle(u: LoopElem, v: LoopElem) -> LoopElem:
    cu = {"x": u.px, "y": u.py, "z": u.pz}
    cv = {"x": v.px, "y": v.py, "z": v.pz}
    acc = {"x": ZERO, "y": ZERO, "z": ZERO}
    for a in "xyz":
        for b in "xyz":
            if a == b:
                continue
            coeff = cu[a] * cv[b]
            if (a, b) in _TABLE:
                terms, sign = _TABLE[a, b], 1
            else:
                terms, sign = _TABLE[b, a], -1
            for letter, mult in terms:
                acc[letter] = acc[letter] + coeff * (sign * mult)
    return LoopElem(acc["x"], acc["y"], acc["z"])


# ---------------------------------------------------------------------------
# vector space structure


class TestLoopElem:
    @given(loop_elems, loop_elems)
    def test_add_componentwise(self, u, v):
        w = u + v
        assert (w.px, w.py, w.pz) == (u.px + v.px, u.py + v.py, u.pz + v.pz)
        assert u - v == u + (-v)

    @given(loop_elems, ring_elems)
    def test_scale(self, u, a):
        w = u.scale(a)
        assert (w.px, w.py, w.pz) == (u.px * a, u.py * a, u.pz * a)

    @given(loop_elems)
    def test_int_mul(self, u):
        assert u * 2 == u + u
        assert u * 0 == L_ZERO

    def test_mul_rejects_ring_elements(self):
        with pytest.raises(TypeError):
            ONSAGER_A * T  # module action must go through scale()

    @given(loop_elems)
    def test_json_roundtrip(self, u):
        assert loop_from_json(loop_to_json(u)) == u


# ---------------------------------------------------------------------------
# the bracket


class TestBracket:
    @settings(max_examples=250)
    @given(loop_elems, loop_elems)
    def test_matches_table_oracle(self, u, v):
        assert bracket(u, v) == bracket_oracle(u, v)

    @given(loop_elems, loop_elems)
    def test_antisymmetry(self, u, v):
        assert bracket(u, v) == -bracket(v, u)
        assert bracket(u, u).is_zero

    @given(loop_elems, loop_elems, loop_elems)
    def test_jacobi(self, u, v, w):
        total = (bracket(u, bracket(v, w)) + bracket(v, bracket(w, u))
                 + bracket(w, bracket(u, v)))
        assert total.is_zero

    @given(loop_elems, loop_elems, ring_elems)
    def test_bilinear_over_ring(self, u, v, a):
        assert bracket(u.scale(a), v) == bracket(u, v).scale(a)
        assert bracket(u, v.scale(a)) == bracket(u, v).scale(a)

    def test_equitable_table(self):
        x = LoopElem(RING_ONE, ZERO, ZERO)
        y = LoopElem(ZERO, RING_ONE, ZERO)
        z = LoopElem(ZERO, ZERO, RING_ONE)
        assert bracket(x, y) == x * 2 + y * 2
        assert bracket(y, z) == y * 2 + z * 2
        assert bracket(z, x) == z * 2 + x * 2


# ---------------------------------------------------------------------------
# edge generators and their relations


class TestGenerators:
    def test_opposite_edges_negate(self):
        for i, j in permutations(range(4), 2):
            assert std_gen(i, j) == -std_gen(j, i)

    def test_adjacent_edge_brackets(self):
        for i, j, k in permutations(range(4), 3):
            lhs = bracket(std_gen(i, j), std_gen(j, k))
            assert lhs == std_gen(i, j) * 2 + std_gen(j, k) * 2

    def test_opposite_edge_dolan_grady(self):
        for i, j, k, h in permutations(range(4), 4):
            assert dolan_grady_holds(std_gen(i, j), std_gen(k, h))

    def test_bad_edge_rejected(self):
        with pytest.raises(ValueError):
            std_gen(1, 1)
        with pytest.raises(ValueError):
            std_gen(0, 4)

    def test_standard_pair(self):
        assert ONSAGER_A == std_gen(1, 2)
        assert ONSAGER_B == std_gen(0, 3)
        assert loop_to_str(ONSAGER_A) == "x⊗1"
        assert loop_to_str(ONSAGER_B) == "y⊗t + z⊗(-1 + t)"
        assert dolan_grady_holds(ONSAGER_A, ONSAGER_B)
        assert dolan_grady_holds(ONSAGER_B, ONSAGER_A)

    def test_dolan_grady_fails_off_relation(self):
        # the triple bracket against x(x)t carries t^3 where the right side
        # has a bare t, so the relation must fail
        xt = LoopElem(T, ZERO, ZERO)
        y = LoopElem(ZERO, RING_ONE, ZERO)
        assert not dolan_grady_holds(xt, y)


# ---------------------------------------------------------------------------
# the distinguished subalgebra


class TestOnsagerSubspace:
    @given(onsager_elems(), onsager_elems())
    def test_closed_under_bracket(self, u, v):
        assert in_onsager(u) and in_onsager(v)
        assert in_onsager(bracket(u, v))
        assert in_onsager(u + v)

    def test_membership_boundaries(self):
        assert in_onsager(ONSAGER_A)
        assert in_onsager(ONSAGER_B)
        assert in_onsager(L_ZERO)
        assert not in_onsager(LoopElem(ZERO, RING_ONE, ZERO))      # y needs a t
        assert not in_onsager(LoopElem(ZERO, ZERO, RING_ONE))      # z needs t-1
        assert not in_onsager(LoopElem(INV_T, ZERO, ZERO))         # no denominators


# ---------------------------------------------------------------------------
# rendering


class TestLoopText:
    def test_zero(self):
        assert loop_to_str(L_ZERO) == "0"

    def test_sign_hoisting(self):
        u = LoopElem(-RING_ONE, ZERO, ZERO)
        assert loop_to_str(u) == "-x⊗1"
        v = LoopElem(ZERO, TM1 * -2, T * 2)
        assert loop_to_str(v) == "y⊗(2 - 2t) + z⊗2t"

    def test_ascii_tensor(self):
        assert loop_to_str(ONSAGER_A, tensor="(x)") == "x(x)1"

    def test_multipart_coefficients_parenthesized(self):
        u = LoopElem(TM1 * -1, ZERO, ZERO)
        assert loop_to_str(u) == "x⊗(1 - t)"
