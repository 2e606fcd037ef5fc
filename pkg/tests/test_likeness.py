"""Edge-likeness and the two direct-sum decompositions.

One deliberate regression test: the likeness predicate must not depend on
which order the opposite edge is taken in, since flipping that edge negates
both sides of its defining relation.
"""

from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from onsager import (
    BasisId,
    BasisVector,
    FAMILIES,
    INV_T,
    L_ZERO,
    LoopElem,
    ONE,
    ONSAGER_A,
    ONSAGER_B,
    RHO,
    TAU,
    ZERO,
    apply_perm,
    basis_elem,
    bracket,
    decompose_canonical,
    decompose_onsager,
    dolan_grady_holds,
    is_like,
    like_basis_elem,
    std_gen,
)
from conftest import loop_elems, onsager_elems, ring_elems

EDGES = tuple(permutations(range(4), 2))
edges = st.sampled_from(EDGES)


# ---------------------------------------------------------------------------
# the likeness predicate


class TestIsLike:
    def test_generators_are_self_like(self):
        for pair in EDGES:
            assert is_like(pair, std_gen(*pair))
            assert is_like(pair, L_ZERO)

    def test_scaled_generators(self):
        assert is_like((1, 2), ONSAGER_A.scale(INV_T))
        assert not is_like((1, 2), ONSAGER_B)
        assert not is_like((0, 3), ONSAGER_A)

    @given(edges, loop_elems)
    def test_opposite_edge_order_is_irrelevant(self, pair, u):
        i, j = pair
        k, h = sorted({0, 1, 2, 3} - {i, j})
        one_way = (bracket(std_gen(i, j), u).is_zero
                   and dolan_grady_holds(std_gen(k, h), u))
        other = (bracket(std_gen(i, j), u).is_zero
                 and dolan_grady_holds(std_gen(h, k), u))
        assert one_way == other
        assert is_like(pair, u) == one_way

    @given(edges, ring_elems)
    def test_likeness_is_a_module_property(self, pair, a):
        assert is_like(pair, std_gen(*pair).scale(a))

    def test_rejects_bad_pair(self):
        with pytest.raises(ValueError):
            is_like((1, 1), ONSAGER_A)
        with pytest.raises(ValueError):
            is_like((0, 5), ONSAGER_A)


class TestLikeBasis:
    def test_kinds(self):
        for pair in EDGES:
            assert like_basis_elem(pair, "one") == std_gen(*pair)
            for n in range(1, 5):
                for kind in ("t_pow", "tp_pow", "tpp_pow"):
                    u = like_basis_elem(pair, kind, n)
                    assert is_like(pair, u)

    def test_kind_index_constraints(self):
        with pytest.raises(ValueError):
            like_basis_elem((0, 1), "one", 1)
        with pytest.raises(ValueError):
            like_basis_elem((0, 1), "t_pow", 0)
        with pytest.raises(ValueError):
            like_basis_elem((0, 1), "cos", 1)


# ---------------------------------------------------------------------------
# decomposition of the whole loop algebra along 0 -> 3 -> 1 -> 2


class TestCanonical:
    @settings(max_examples=120)
    @given(loop_elems)
    def test_recompose_and_slots(self, u):
        parts = decompose_canonical(u)
        assert parts.total() == u
        assert is_like((0, 3), parts.kh)
        assert is_like((3, 1), parts.hi)
        assert is_like((1, 2), parts.ij)

    @given(loop_elems, loop_elems)
    def test_linearity(self, u, v):
        pu, pv, ps = (decompose_canonical(w) for w in (u, v, u + v))
        assert ps.kh == pu.kh + pv.kh
        assert ps.hi == pu.hi + pv.hi
        assert ps.ij == pu.ij + pv.ij

    def test_pure_slots_pass_through(self):
        parts = decompose_canonical(ONSAGER_B)
        assert parts.kh == ONSAGER_B
        assert parts.hi.is_zero and parts.ij.is_zero
        parts = decompose_canonical(ONSAGER_A.scale(INV_T))
        assert parts.ij == ONSAGER_A.scale(INV_T)
        assert parts.kh.is_zero and parts.hi.is_zero

    def test_json_keys(self):
        d = decompose_canonical(ONSAGER_A).to_json()
        assert set(d) == {"label", "kh", "hi", "ij"}


# ---------------------------------------------------------------------------
# decompositions of the subalgebra, one per path label


class TestOnsagerDecomposition:
    @settings(max_examples=60)
    @given(onsager_elems(), st.sampled_from(tuple(BasisId)))
    def test_recompose_and_slots(self, u, label):
        parts = decompose_onsager(label, u)
        k, h, i, j = label.path
        assert parts.total() == u
        assert is_like((k, h), parts.kh)
        assert is_like((h, i), parts.hi)
        assert is_like((i, j), parts.ij)

    def test_slots_collect_families(self):
        for label in BasisId:
            for family, part_name in (("B", "kh"), ("psi", "hi"), ("A", "ij")):
                idx = 1 if family == "psi" else 0
                u = basis_elem(BasisVector(label, family, idx))
                parts = decompose_onsager(label, u)
                assert getattr(parts, part_name) == u
                others = {"kh", "hi", "ij"} - {part_name}
                assert all(getattr(parts, o).is_zero for o in others)

    def test_rejects_outsiders(self):
        with pytest.raises(ValueError):
            decompose_onsager(BasisId.UU, LoopElem(ZERO, ONE, ZERO))

    def test_label_parse(self):
        u = basis_elem(BasisVector(BasisId.DU, "A", 2))
        assert decompose_onsager("0321", u) == decompose_onsager(BasisId.DU, u)

    @given(onsager_elems())
    def test_transported_by_the_klein_action(self, u):
        base = decompose_onsager(BasisId.UU, u)
        moves = ((RHO, BasisId.DD), (TAU, BasisId.DU), (RHO * TAU, BasisId.UD))
        for p, label in moves:
            moved = decompose_onsager(label, apply_perm(p, u))
            assert moved.kh == apply_perm(p, base.kh)
            assert moved.hi == apply_perm(p, base.hi)
            assert moved.ij == apply_perm(p, base.ij)
