"""The S4 action: permutation algebra, generator words, semilinear maps.

Word minimality is checked against an in-test breadth-first search over the
same four generators.
"""

from collections import deque
from itertools import permutations

import pytest
from hypothesis import given

from onsager import (
    ALL_PERMS,
    GEN_PERMS,
    IDENTITY,
    MU,
    ONSAGER_A,
    ONSAGER_B,
    PHI,
    Perm,
    RHO,
    TAU,
    apply_basic,
    apply_perm,
    bracket,
    in_onsager,
    ring_aut,
    std_gen,
    word_for,
)
from conftest import loop_elems, onsager_elems, ring_elems


# ---------------------------------------------------------------------------
# the permutation group itself


class TestPerm:
    def test_named_elements(self):
        assert RHO.images == (3, 2, 1, 0)
        assert TAU.images == (0, 2, 1, 3)
        assert MU.images == (1, 0, 3, 2)
        assert PHI.images == (0, 2, 3, 1)
        assert len(ALL_PERMS) == 24

    def test_call_and_compose(self):
        assert [TAU(i) for i in range(4)] == [0, 2, 1, 3]
        for p in ALL_PERMS:
            for q in ALL_PERMS:
                r = p * q
                assert all(r(i) == p(q(i)) for i in range(4))

    def test_inverse(self):
        for p in ALL_PERMS:
            assert p * p.inverse() == IDENTITY
            assert p.inverse() * p == IDENTITY

    def test_cycle_notation_roundtrip(self):
        for p in ALL_PERMS:
            assert Perm.parse(p.to_cycles()) == p
        assert IDENTITY.to_cycles() == "e"
        assert RHO.to_cycles() == "(03)(12)"
        assert PHI.to_cycles() == "(123)"

    def test_parse_variants(self):
        assert Perm.parse("e") == IDENTITY
        assert Perm.parse("()") == IDENTITY
        assert Perm.parse("(12)(30)") == RHO
        assert Perm.parse("(1 2 3)") == PHI

    def test_parse_rejects_bad_input(self):
        for bad in ("(14)", "(112)", "(0", "x"):
            with pytest.raises(ValueError):
                Perm.parse(bad)

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            Perm((0, 0, 1, 2))


# ---------------------------------------------------------------------------
# generator words


def bfs_distances() -> dict[Perm, int]:
    dist = {IDENTITY: 0}
    queue = deque([IDENTITY])
    while queue:
        p = queue.popleft()
        for g in GEN_PERMS.values():
            q = p * g
            if q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist


class TestWords:
    def test_words_evaluate_to_their_perm(self):
        for p in ALL_PERMS:
            acc = IDENTITY
            for name in word_for(p):
                acc = acc * GEN_PERMS[name]
            assert acc == p

    def test_words_are_shortest(self):
        dist = bfs_distances()
        assert len(dist) == 24
        for p in ALL_PERMS:
            assert len(word_for(p)) == dist[p]

    def test_generators_are_single_letters(self):
        assert word_for(RHO) == ("rho",)
        assert word_for(TAU) == ("tau",)
        assert word_for(MU) == ("mu",)
        assert word_for(PHI) == ("phi",)
        assert word_for(IDENTITY) == ()


# ---------------------------------------------------------------------------
# the semilinear action


class TestAction:
    @given(loop_elems)
    def test_generator_orders(self, u):
        assert apply_basic("rho", apply_basic("rho", u)) == u
        assert apply_basic("tau", apply_basic("tau", u)) == u
        assert apply_basic("mu", apply_basic("mu", u)) == u
        assert apply_basic("phi", apply_basic("phi", apply_basic("phi", u))) == u

    @given(loop_elems)
    def test_rho_tau_commute(self, u):
        assert (apply_basic("rho", apply_basic("tau", u))
                == apply_basic("tau", apply_basic("rho", u)))

    @given(loop_elems, loop_elems)
    def test_brackets_preserved(self, u, v):
        for name in GEN_PERMS:
            assert (apply_basic(name, bracket(u, v))
                    == bracket(apply_basic(name, u), apply_basic(name, v)))

    @given(loop_elems, ring_elems)
    def test_module_twists(self, u, a):
        assert apply_basic("rho", u.scale(a)) == apply_basic("rho", u).scale(a)
        assert apply_basic("mu", u.scale(a)) == apply_basic("mu", u).scale(a)
        assert (apply_basic("tau", u.scale(a))
                == apply_basic("tau", u).scale(ring_aut("tauA", a)))
        assert (apply_basic("phi", u.scale(a))
                == apply_basic("phi", u).scale(ring_aut("phi", a)))

    def test_equivariance_on_generators(self):
        for p in ALL_PERMS:
            for i, j in permutations(range(4), 2):
                assert apply_perm(p, std_gen(i, j)) == std_gen(p(i), p(j))

    def test_action_on_standard_pair(self):
        assert apply_basic("rho", ONSAGER_A) == -ONSAGER_A
        assert apply_basic("rho", ONSAGER_B) == -ONSAGER_B
        assert apply_basic("tau", ONSAGER_A) == -ONSAGER_A
        assert apply_basic("tau", ONSAGER_B) == ONSAGER_B
        assert apply_basic("mu", ONSAGER_A) == ONSAGER_B
        assert apply_basic("mu", ONSAGER_B) == ONSAGER_A

    def test_unknown_generator_rejected(self):
        with pytest.raises(ValueError):
            apply_basic("nu", ONSAGER_A)

    @given(loop_elems)
    def test_homomorphism_on_all_pairs(self, u):
        for p in (RHO, TAU, MU, PHI, RHO * PHI, PHI * TAU):
            for q in (RHO, MU, PHI, TAU * PHI):
                assert apply_perm(p * q, u) == apply_perm(p, apply_perm(q, u))

    @given(onsager_elems())
    def test_klein_group_preserves_subalgebra(self, u):
        for p in (RHO, TAU, RHO * TAU):
            assert in_onsager(apply_perm(p, u))
