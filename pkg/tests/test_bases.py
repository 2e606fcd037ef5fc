"""The four distinguished bases: closed forms, recursion, coordinates,
structure constants."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from onsager import (
    BasisId,
    BasisVector,
    FAMILIES,
    LoopElem,
    OCoords,
    ONE,
    ONSAGER_A,
    ONSAGER_B,
    T,
    TM1,
    ZERO,
    basis_elem,
    basis_elem_recursive,
    basis_seeds,
    bracket,
    bracket_coords,
    coords,
    evaluate,
    in_onsager,
    loop_to_str,
)
from conftest import onsager_elems

basis_ids = st.sampled_from(tuple(BasisId))


def fam_range(family: str, top: int):
    return range(1 if family == "psi" else 0, top + 1)


# ---------------------------------------------------------------------------
# naming


class TestBasisId:
    def test_parse_variants(self):
        assert BasisId.parse("uu") is BasisId.UU
        assert BasisId.parse("UD") is BasisId.UD
        assert BasisId.parse("0312") is BasisId.UU
        assert BasisId.parse("[3021]") is BasisId.DD
        assert BasisId.parse(BasisId.DU) is BasisId.DU

    def test_parse_rejects(self):
        for bad in ("u", "xx", "0123", "[united]"):
            with pytest.raises(ValueError):
                BasisId.parse(bad)

    def test_paths_and_slots(self):
        assert BasisId.UU.path == (0, 3, 1, 2)
        assert BasisId.DD.path == (3, 0, 2, 1)
        assert BasisId.DU.path == (0, 3, 2, 1)
        assert BasisId.UD.path == (3, 0, 1, 2)
        assert BasisId.UU.slots == {"B": (0, 3), "psi": (3, 1), "A": (1, 2)}
        assert str(BasisId.UD) == "ud"

    def test_vector_validation(self):
        v = BasisVector(BasisId.UU, "A", 3)
        assert str(v) == "A^uu_3"
        assert BasisVector("du", "psi", 1).basis is BasisId.DU
        with pytest.raises(ValueError):
            BasisVector(BasisId.UU, "psi", 0)
        with pytest.raises(ValueError):
            BasisVector(BasisId.UU, "C", 1)
        with pytest.raises(ValueError):
            BasisVector(BasisId.UU, "A", -1)


# ---------------------------------------------------------------------------
# closed forms


class TestClosedForms:
    def test_seeds_are_signed_generators(self):
        want = {
            BasisId.UU: (ONSAGER_A, ONSAGER_B),
            BasisId.DD: (-ONSAGER_A, -ONSAGER_B),
            BasisId.DU: (-ONSAGER_A, ONSAGER_B),
            BasisId.UD: (ONSAGER_A, -ONSAGER_B),
        }
        for b, (a0, b0) in want.items():
            assert basis_seeds(b) == (a0, b0)
            assert basis_elem(BasisVector(b, "A", 0)) == a0
            assert basis_elem(BasisVector(b, "B", 0)) == b0

    def test_golden_elements(self):
        assert loop_to_str(basis_elem(BasisVector(BasisId.UU, "A", 2))) \
            == "x⊗(1 - 2t + t^2)"
        assert loop_to_str(basis_elem(BasisVector(BasisId.UU, "psi", 1))) \
            == "z⊗(-1 + t)"
        assert loop_to_str(basis_elem(BasisVector(BasisId.DU, "psi", 1))) == "y⊗t"
        assert loop_to_str(basis_elem(BasisVector(BasisId.DU, "A", 0))) == "-x⊗1"

    def test_center_powers(self):
        # multiplying by the center factor steps the index for A and B
        for b in BasisId:
            center = TM1 if b in (BasisId.UU, BasisId.DD) else -T
            for family in ("A", "B"):
                for i in range(4):
                    stepped = basis_elem(BasisVector(b, family, i)).scale(center)
                    assert stepped == basis_elem(BasisVector(b, family, i + 1))

    def test_all_land_in_subalgebra(self):
        for b, family in product(BasisId, FAMILIES):
            for i in fam_range(family, 8):
                assert in_onsager(basis_elem(BasisVector(b, family, i)))


# ---------------------------------------------------------------------------
# recursion


class TestRecursion:
    def test_matches_closed_forms(self):
        for b, family in product(BasisId, FAMILIES):
            for i in fam_range(family, 5):
                v = BasisVector(b, family, i)
                assert evaluate(basis_elem_recursive(v)) == basis_elem(v)

    def test_seed_expressions_are_leaves(self):
        from onsager import render
        assert render(basis_elem_recursive(BasisVector(BasisId.UU, "A", 0))) == "A"
        assert render(basis_elem_recursive(BasisVector(BasisId.DD, "B", 0))) == "-B"

    def test_first_step_rendering(self):
        from onsager import render
        got = render(basis_elem_recursive(BasisVector(BasisId.UU, "psi", 1)))
        assert got == "1/2 A + 1/2 B - 1/4 [A, B]"


# ---------------------------------------------------------------------------
# coordinates


class TestCoords:
    @settings(max_examples=40)
    @given(onsager_elems(), basis_ids)
    def test_roundtrip(self, u, b):
        assert coords(u, b).to_elem() == u

    @given(basis_ids)
    def test_basis_vectors_have_unit_coords(self, b):
        for family in FAMILIES:
            for i in fam_range(family, 5):
                c = coords(basis_elem(BasisVector(b, family, i)), b)
                assert c == OCoords(b, {(family, i): 1})

    def test_rejects_outsiders(self):
        with pytest.raises(ValueError):
            coords(LoopElem(ZERO, ONE, ZERO), BasisId.UU)

    def test_golden(self):
        assert str(coords(ONSAGER_A, BasisId.UU)) == "A^uu_0"
        assert str(coords(LoopElem(T, ZERO, ZERO), BasisId.UU)) == "A^uu_0 + A^uu_1"
        assert str(coords(LoopElem(ZERO, ZERO, TM1), BasisId.UU)) == "psi^uu_1"


class TestOCoords:
    def test_zero_and_duplicates(self):
        c = OCoords(BasisId.UU, {("A", 0): Fraction(0), ("B", 1): 2})
        assert c.get("A", 0) == 0
        assert c.items() == [(("B", 1), Fraction(2))]
        with pytest.raises(ValueError):
            OCoords(BasisId.UU, [(("A", 0), 1), (("A", 0), 2)])

    def test_algebra(self):
        c1 = OCoords(BasisId.UU, {("A", 0): 1})
        c2 = OCoords(BasisId.UU, {("A", 0): -1, ("B", 2): Fraction(1, 2)})
        s = c1.plus(c2)
        assert s == OCoords(BasisId.UU, {("B", 2): Fraction(1, 2)})
        assert s.scaled(4) == OCoords(BasisId.UU, {("B", 2): 2})

    def test_mixed_basis_rejected(self):
        c1 = OCoords(BasisId.UU, {("A", 0): 1})
        c2 = OCoords(BasisId.DD, {("A", 0): 1})
        with pytest.raises(ValueError):
            c1.plus(c2)

    def test_str(self):
        assert str(OCoords(BasisId.UU, {})) == "0"
        assert str(OCoords(BasisId.UU, {("A", 3): -1})) == "-1 A^uu_3"
        assert str(OCoords(BasisId.UU, {("B", 0): 1, ("psi", 1): -1})) \
            == "B^uu_0 - 1 psi^uu_1"
        assert str(OCoords(BasisId.UU, {("A", 1): Fraction(3, 2)})) == "3/2 A^uu_1"

    def test_json_roundtrip(self):
        c = OCoords(BasisId.DU, {("A", 2): Fraction(-5, 3), ("psi", 1): 1})
        assert OCoords.from_json(c.to_json()) == c

    def test_sorted_by_family_then_index(self):
        c = OCoords(BasisId.UU, {("psi", 1): 1, ("A", 2): 1, ("A", 0): 1, ("B", 1): 1})
        assert [k for k, _ in c.items()] == [("A", 0), ("A", 2), ("B", 1), ("psi", 1)]


# ---------------------------------------------------------------------------
# structure constants


class TestBracketTable:
    def test_same_family_commutes(self):
        for b in BasisId:
            for family in FAMILIES:
                for i in fam_range(family, 4):
                    for j in fam_range(family, 4):
                        v1, v2 = BasisVector(b, family, i), BasisVector(b, family, j)
                        assert bracket_coords(b, v1, v2).items() == []
                        assert bracket(basis_elem(v1), basis_elem(v2)).is_zero

    def test_cross_family_equations(self):
        for b in BasisId:
            for i in range(1, 5):
                for j in range(0, 4):
                    psi_i = BasisVector(b, "psi", i)
                    a_j = BasisVector(b, "A", j)
                    b_j = BasisVector(b, "B", j)
                    got = bracket_coords(b, psi_i, a_j)
                    assert got == OCoords(b, {("psi", i + j): 2, ("A", i + j): 2})
                    got = bracket_coords(b, b_j, psi_i)
                    assert got == OCoords(b, {("B", i + j): 2, ("psi", i + j): 2})

    def test_a_b_equation(self):
        for b in BasisId:
            for i in range(0, 4):
                for j in range(0, 4):
                    got = bracket_coords(b, BasisVector(b, "A", i),
                                         BasisVector(b, "B", j))
                    assert got == OCoords(b, {("A", i + j): 2, ("B", i + j): 2,
                                              ("psi", i + j + 1): -4})

    def test_table_matches_actual_brackets(self):
        for b in BasisId:
            for f1, f2 in product(FAMILIES, repeat=2):
                for i in fam_range(f1, 4):
                    for j in fam_range(f2, 4):
                        v1, v2 = BasisVector(b, f1, i), BasisVector(b, f2, j)
                        lhs = bracket(basis_elem(v1), basis_elem(v2))
                        assert lhs == bracket_coords(b, v1, v2).to_elem()

    def test_antisymmetry_of_table(self):
        b = BasisId.DU
        v1, v2 = BasisVector(b, "A", 1), BasisVector(b, "B", 2)
        assert bracket_coords(b, v1, v2) == bracket_coords(b, v2, v1).scaled(-1)

    def test_mismatched_bases_rejected(self):
        with pytest.raises(ValueError):
            bracket_coords(BasisId.UU, BasisVector(BasisId.UU, "A", 0),
                           BasisVector(BasisId.DD, "B", 0))
