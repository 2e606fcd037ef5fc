"""Executable verification of every structural claim the package relies on.

Each check_* function exercises one named property exactly (no tolerances)
and returns a CheckResult with pass/fail counts.  run_checks() groups them
into suites matching the module layout: ring, loop, symmetry, likeness,
bases, transitions, expressions, or all.

Randomized checks draw from a seeded generator, so a given seed is
reproducible; max_index bounds the basis indices the exhaustive checks walk.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from .ring import (
    INV_T,
    INV_TM1,
    ONE,
    Poly,
    RingElem,
    T,
    TM1,
    T_DPRIME,
    T_PRIME,
    ZERO,
    poly_from_shift,
    ring_aut,
    ring_from_str,
    ring_to_str,
    shift_coords,
)
from .loop import (
    LoopElem,
    ONSAGER_A,
    ONSAGER_B,
    bracket,
    dolan_grady_holds,
    in_onsager,
    std_gen,
)
from .symmetry import (
    ALL_PERMS,
    GEN_PERMS,
    IDENTITY,
    MU,
    PHI,
    Perm,
    RHO,
    TAU,
    apply_basic,
    apply_perm,
)
from .likeness import decompose_canonical, decompose_onsager, is_like, like_basis_elem
from .bases import (
    BasisId,
    BasisVector,
    FAMILIES,
    OCoords,
    basis_elem,
    basis_elem_recursive,
    basis_seeds,
    bracket_coords,
    coords,
)
from .transitions import aut_image, transition
from . import expressions as ex


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: int = 0
    failed: int = 0
    messages: list[str] = field(default_factory=list)

    def ok(self):
        self.passed += 1

    def fail(self, msg: str):
        self.failed += 1
        if len(self.messages) < 5:
            self.messages.append(msg)

    def tally(self, cond: bool, msg: str):
        if cond:
            self.ok()
        else:
            self.fail(msg)

    @property
    def is_pass(self) -> bool:
        return self.failed == 0


def _rng(seed, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


# ---------------------------------------------------------------------------
# random element builders (shared with the test suite)


def rand_rational(rng: random.Random, bound: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_poly(rng: random.Random, max_deg: int, bound: int = 5) -> Poly:
    cs = [Fraction(rng.randint(-bound, bound)) for _ in range(rng.randint(0, max_deg) + 1)]
    return Poly(cs)


def rand_ring_elem(rng: random.Random, max_deg: int = 5, max_tpow: int = 3,
                   max_upow: int = 3) -> RingElem:
    return RingElem(rand_poly(rng, max_deg), rng.randint(0, max_tpow),
                    rng.randint(0, max_upow))


def rand_loop_elem(rng: random.Random, max_deg: int = 4, max_tpow: int = 2,
                   max_upow: int = 2) -> LoopElem:
    return LoopElem(*(rand_ring_elem(rng, max_deg, max_tpow, max_upow) for _ in range(3)))


def rand_onsager_elem(rng: random.Random, max_deg: int = 8) -> LoopElem:
    return LoopElem(RingElem(rand_poly(rng, max_deg)),
                    RingElem(rand_poly(rng, max_deg - 1).shift_up(1)),
                    RingElem(rand_poly(rng, max_deg - 1) * Poly([-1, 1])))


def rand_expr(rng: random.Random, depth: int = 4) -> ex.Expr:
    if depth <= 0 or rng.random() < 0.25:
        return ex.GEN_A if rng.random() < 0.5 else ex.GEN_B
    roll = rng.random()
    if roll < 0.30:
        return ex.Bracket(rand_expr(rng, depth - 1), rand_expr(rng, depth - 1))
    if roll < 0.55:
        return ex.Sum(rand_expr(rng, depth - 1), rand_expr(rng, depth - 1))
    if roll < 0.75:
        return ex.Neg(rand_expr(rng, depth - 1))
    q = rand_rational(rng)
    if q == 0:
        q = Fraction(1, 2)
    return ex.Scale(q, rand_expr(rng, depth - 1))


# ---------------------------------------------------------------------------
# worked examples: the recursion unrolled through index 3, per basis


WORKED_EXAMPLES: dict[tuple[str, str, int], str] = {
    ("uu", "psi", 1): "1/2 A + 1/2 B - 1/4 [A, B]",
    ("uu", "A", 1): "-1/2 A - 1/2 B - 1/8 [A, [B, A]]",
    ("uu", "B", 1): "-1/2 A - 1/2 B - 1/8 [B, [A, B]]",
    ("uu", "psi", 2): ("-1/2 A - 1/2 B - 1/8 [B, A] - 1/16 [A, [B, A]]"
                       " - 1/16 [B, [A, B]] - 1/32 [B, [A, [B, A]]]"),
    ("uu", "A", 2): ("1/2 A + 1/2 B + 1/8 [A, [B, A]] + 1/16 [B, [A, B]]"
                     " + 1/64 [A, [B, [A, [B, A]]]]"),
    ("uu", "B", 2): ("1/2 A + 1/2 B + 1/8 [B, [A, B]] + 1/16 [A, [B, A]]"
                     " + 1/64 [B, [A, [B, [A, B]]]]"),
    ("uu", "psi", 3): ("1/2 A + 1/2 B + 1/16 [B, A] + 3/32 [A, [B, A]]"
                       " + 3/32 [B, [A, B]] + 1/32 [B, [A, [B, A]]]"
                       " + 1/128 [A, [B, [A, [B, A]]]] + 1/128 [B, [A, [B, [A, B]]]]"
                       " + 1/256 [B, [A, [B, [A, [B, A]]]]]"),
    ("dd", "psi", 1): "-1/2 A - 1/2 B - 1/4 [A, B]",
    ("dd", "A", 1): "1/2 A + 1/2 B + 1/8 [A, [B, A]]",
    ("dd", "B", 1): "1/2 A + 1/2 B + 1/8 [B, [A, B]]",
    ("dd", "psi", 2): ("1/2 A + 1/2 B - 1/8 [B, A] + 1/16 [A, [B, A]]"
                       " + 1/16 [B, [A, B]] - 1/32 [B, [A, [B, A]]]"),
    ("dd", "A", 2): ("-1/2 A - 1/2 B - 1/8 [A, [B, A]] - 1/16 [B, [A, B]]"
                     " - 1/64 [A, [B, [A, [B, A]]]]"),
    ("dd", "B", 2): ("-1/2 A - 1/2 B - 1/8 [B, [A, B]] - 1/16 [A, [B, A]]"
                     " - 1/64 [B, [A, [B, [A, B]]]]"),
    ("dd", "psi", 3): ("-1/2 A - 1/2 B + 1/16 [B, A] - 3/32 [A, [B, A]]"
                       " - 3/32 [B, [A, B]] + 1/32 [B, [A, [B, A]]]"
                       " - 1/128 [A, [B, [A, [B, A]]]] - 1/128 [B, [A, [B, [A, B]]]]"
                       " + 1/256 [B, [A, [B, [A, [B, A]]]]]"),
    ("du", "psi", 1): "-1/2 A + 1/2 B + 1/4 [A, B]",
    ("du", "A", 1): "1/2 A - 1/2 B - 1/8 [A, [B, A]]",
    ("du", "B", 1): "1/2 A - 1/2 B + 1/8 [B, [A, B]]",
    ("du", "psi", 2): ("1/2 A - 1/2 B + 1/8 [B, A] - 1/16 [A, [B, A]]"
                       " + 1/16 [B, [A, B]] - 1/32 [B, [A, [B, A]]]"),
    ("du", "A", 2): ("-1/2 A + 1/2 B + 1/8 [A, [B, A]] - 1/16 [B, [A, B]]"
                     " - 1/64 [A, [B, [A, [B, A]]]]"),
    ("du", "B", 2): ("-1/2 A + 1/2 B - 1/8 [B, [A, B]] + 1/16 [A, [B, A]]"
                     " + 1/64 [B, [A, [B, [A, B]]]]"),
    ("du", "psi", 3): ("-1/2 A + 1/2 B - 1/16 [B, A] + 3/32 [A, [B, A]]"
                       " - 3/32 [B, [A, B]] + 1/32 [B, [A, [B, A]]]"
                       " - 1/128 [A, [B, [A, [B, A]]]] + 1/128 [B, [A, [B, [A, B]]]]"
                       " - 1/256 [B, [A, [B, [A, [B, A]]]]]"),
    ("ud", "psi", 1): "1/2 A - 1/2 B + 1/4 [A, B]",
    ("ud", "A", 1): "-1/2 A + 1/2 B + 1/8 [A, [B, A]]",
    ("ud", "B", 1): "-1/2 A + 1/2 B - 1/8 [B, [A, B]]",
    ("ud", "psi", 2): ("-1/2 A + 1/2 B + 1/8 [B, A] + 1/16 [A, [B, A]]"
                       " - 1/16 [B, [A, B]] - 1/32 [B, [A, [B, A]]]"),
    ("ud", "A", 2): ("1/2 A - 1/2 B - 1/8 [A, [B, A]] + 1/16 [B, [A, B]]"
                     " + 1/64 [A, [B, [A, [B, A]]]]"),
    ("ud", "B", 2): ("1/2 A - 1/2 B + 1/8 [B, [A, B]] - 1/16 [A, [B, A]]"
                     " - 1/64 [B, [A, [B, [A, B]]]]"),
    ("ud", "psi", 3): ("1/2 A - 1/2 B - 1/16 [B, A] - 3/32 [A, [B, A]]"
                       " + 3/32 [B, [A, B]] + 1/32 [B, [A, [B, A]]]"
                       " + 1/128 [A, [B, [A, [B, A]]]] - 1/128 [B, [A, [B, [A, B]]]]"
                       " - 1/256 [B, [A, [B, [A, [B, A]]]]]"),
}


def _fam_range(family: str, top: int):
    return range(1 if family == "psi" else 0, top + 1)


# ---------------------------------------------------------------------------
# ring suite


def check_ring_axioms(seed=0, trials=60) -> CheckResult:
    res = CheckResult("ring", "commutative ring axioms on random triples")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        a, b, c = (rand_ring_elem(rng) for _ in range(3))
        res.tally((a + b) + c == a + (b + c), "associativity of +")
        res.tally(a + b == b + a, "commutativity of +")
        res.tally((a * b) * c == a * (b * c), "associativity of *")
        res.tally(a * b == b * a, "commutativity of *")
        res.tally(a * (b + c) == a * b + a * c, "distributivity")
        res.tally(a + ZERO == a and a * ONE == a, "identities")
        res.tally(a - a == ZERO, "additive inverse")
    return res


def check_ring_aut_properties(seed=0, trials=40) -> CheckResult:
    res = CheckResult("ring", "substitution automorphisms: orders and multiplicativity")
    rng = _rng(seed, res.name)
    res.tally(ring_aut("phi", T) == T_PRIME, "phi sends t to (t-1)/t")
    res.tally(ring_aut("phi2", T) == T_DPRIME, "phi2 sends t to 1/(1-t)")
    res.tally(ring_aut("tauA", T) == ONE - T, "tauA sends t to 1-t")
    for _ in range(trials):
        a = rand_ring_elem(rng)
        b = rand_ring_elem(rng)
        res.tally(ring_aut("phi", ring_aut("phi", a)) == ring_aut("phi2", a),
                  "phi twice is phi2")
        res.tally(ring_aut("phi", ring_aut("phi2", a)) == a, "phi has order 3")
        res.tally(ring_aut("tauA", ring_aut("tauA", a)) == a, "tauA has order 2")
        for name in ("phi", "phi2", "tauA"):
            res.tally(ring_aut(name, a * b) == ring_aut(name, a) * ring_aut(name, b),
                      f"{name} is multiplicative")
            res.tally(ring_aut(name, a + b) == ring_aut(name, a) + ring_aut(name, b),
                      f"{name} is additive")
    return res


def check_ring_span_identities(top: int = 12) -> CheckResult:
    """The rewriting identities behind the likeness-span bases."""
    res = CheckResult("ring", "span rewriting identities for powers of t' and t''")
    for n in range(1, top + 1):
        lhs = T * T_PRIME ** n
        rhs = T
        for j in range(n):
            rhs = rhs - T_PRIME ** j
        res.tally(lhs == rhs, f"t(t')^{n} = t - sum of lower powers")
        lhs2 = T * T_DPRIME ** n
        rhs2 = T_DPRIME ** n - T_DPRIME ** (n - 1)
        res.tally(lhs2 == rhs2, f"t(t'')^{n} = (t'')^{n} - (t'')^{n - 1}")
    return res


def check_shift_roundtrip(seed=0, trials=60) -> CheckResult:
    res = CheckResult("ring", "expansion coordinates invert exactly")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        p = rand_poly(rng, 8)
        for center in ("t_minus_1", "neg_t"):
            res.tally(poly_from_shift(shift_coords(p, center), center) == p,
                      f"round trip at {center}")
    return res


def check_ring_text_roundtrip(seed=0, trials=60) -> CheckResult:
    res = CheckResult("ring", "text form parses back to the same element")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        a = rand_ring_elem(rng)
        res.tally(ring_from_str(ring_to_str(a)) == a, f"round trip of {ring_to_str(a)!r}")
    return res


# ---------------------------------------------------------------------------
# loop suite


_EQ_BRACKETS = {
    ("x", "y"): (("x", 2), ("y", 2)),
    ("y", "z"): (("y", 2), ("z", 2)),
    ("z", "x"): (("z", 2), ("x", 2)),
}


def _bracket_by_table(u: LoopElem, v: LoopElem) -> LoopElem:
    """Independent oracle: expand all nine monomial pairs over the equitable
    bracket table instead of the closed determinant form."""
    comps_u = {"x": u.px, "y": u.py, "z": u.pz}
    comps_v = {"x": v.px, "y": v.py, "z": v.pz}
    acc = {"x": ZERO, "y": ZERO, "z": ZERO}
    for a in ("x", "y", "z"):
        for b in ("x", "y", "z"):
            if a == b:
                continue
            coeff = comps_u[a] * comps_v[b]
            if (a, b) in _EQ_BRACKETS:
                terms = _EQ_BRACKETS[a, b]
                sign = 1
            else:
                terms = _EQ_BRACKETS[b, a]
                sign = -1
            for letter, mult in terms:
                acc[letter] = acc[letter] + coeff * (sign * mult)
    return LoopElem(acc["x"], acc["y"], acc["z"])


def check_bracket_against_table(seed=0, trials=1000) -> CheckResult:
    res = CheckResult("loop", "bracket matches the nine-term equitable table")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        u = rand_loop_elem(rng, max_deg=6)
        v = rand_loop_elem(rng, max_deg=6)
        res.tally(bracket(u, v) == _bracket_by_table(u, v), "closed form vs table")
    return res


def check_lie_axioms(seed=0, trials=40) -> CheckResult:
    res = CheckResult("loop", "antisymmetry and the Jacobi identity")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        u = rand_loop_elem(rng, max_deg=3)
        v = rand_loop_elem(rng, max_deg=3)
        w = rand_loop_elem(rng, max_deg=3)
        res.tally(bracket(u, u).is_zero, "[u, u] = 0")
        res.tally(bracket(u, v) == -bracket(v, u), "antisymmetry")
        jac = (bracket(u, bracket(v, w)) + bracket(v, bracket(w, u))
               + bracket(w, bracket(u, v)))
        res.tally(jac.is_zero, "Jacobi")
        a = rand_ring_elem(rng, 3)
        res.tally(bracket(u.scale(a), v) == bracket(u, v).scale(a),
                  "bilinearity over the coefficient ring")
    return res


def check_tetrahedron_relations() -> CheckResult:
    res = CheckResult("loop", "tetrahedron relations on the twelve generators")
    pts = range(4)
    for i, j in permutations(pts, 2):
        res.tally((std_gen(i, j) + std_gen(j, i)).is_zero, f"x_{i}{j} + x_{j}{i} = 0")
    for i, j, k in permutations(pts, 3):
        lhs = bracket(std_gen(i, j), std_gen(j, k))
        rhs = std_gen(i, j) * 2 + std_gen(j, k) * 2
        res.tally(lhs == rhs, f"[x_{i}{j}, x_{j}{k}] = 2x_{i}{j} + 2x_{j}{k}")
    for i, j, k, h in permutations(pts, 4):
        res.tally(dolan_grady_holds(std_gen(i, j), std_gen(k, h)),
                  f"Dolan-Grady for x_{i}{j} against x_{k}{h}")
    return res


def check_onsager_pair() -> CheckResult:
    res = CheckResult("loop", "the standard generators satisfy Dolan-Grady both ways")
    res.tally(dolan_grady_holds(ONSAGER_A, ONSAGER_B), "[A,[A,[A,B]]] = 4[A,B]")
    res.tally(dolan_grady_holds(ONSAGER_B, ONSAGER_A), "[B,[B,[B,A]]] = 4[B,A]")
    return res


def check_onsager_closure(seed=0, trials=60) -> CheckResult:
    res = CheckResult("loop", "the Onsager subspace is closed under the bracket")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        u = rand_onsager_elem(rng, 6)
        v = rand_onsager_elem(rng, 6)
        res.tally(in_onsager(u) and in_onsager(v), "membership of samples")
        res.tally(in_onsager(bracket(u, v)), "membership of the bracket")
    return res


# ---------------------------------------------------------------------------
# symmetry suite


def check_group_relations(seed=0, trials=100) -> CheckResult:
    res = CheckResult("symmetry", "orders and commutation of the generating automorphisms")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        u = rand_loop_elem(rng, max_deg=3)
        res.tally(apply_basic("rho", apply_basic("rho", u)) == u, "rho squared")
        res.tally(apply_basic("tau", apply_basic("tau", u)) == u, "tau squared")
        res.tally(apply_basic("mu", apply_basic("mu", u)) == u, "mu squared")
        res.tally(apply_basic("phi", apply_basic("phi", apply_basic("phi", u))) == u,
                  "phi cubed")
        res.tally(apply_basic("rho", apply_basic("tau", u))
                  == apply_basic("tau", apply_basic("rho", u)), "rho and tau commute")
    return res


def check_s4_homomorphism(seed=0) -> CheckResult:
    res = CheckResult("symmetry", "composition of permutations matches composed actions")
    rng = _rng(seed, res.name)
    u = rand_loop_elem(rng, max_deg=2, max_tpow=1, max_upow=1)
    for p in ALL_PERMS:
        for q in ALL_PERMS:
            res.tally(apply_perm(p * q, u) == apply_perm(p, apply_perm(q, u)),
                      f"action of {p} * {q}")
    return res


def check_equivariance() -> CheckResult:
    res = CheckResult("symmetry", "every permutation permutes the generators by its indices")
    for p in ALL_PERMS:
        for i, j in permutations(range(4), 2):
            res.tally(apply_perm(p, std_gen(i, j)) == std_gen(p(i), p(j)),
                      f"{p} on x_{i}{j}")
    return res


def check_module_twists(seed=0, trials=40) -> CheckResult:
    res = CheckResult("symmetry", "module action twists by the matching ring substitution")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        u = rand_loop_elem(rng, max_deg=3)
        b = rand_ring_elem(rng, 3)
        res.tally(apply_basic("rho", u.scale(b)) == apply_basic("rho", u).scale(b),
                  "rho is module linear")
        res.tally(apply_basic("mu", u.scale(b)) == apply_basic("mu", u).scale(b),
                  "mu is module linear")
        res.tally(apply_basic("tau", u.scale(b))
                  == apply_basic("tau", u).scale(ring_aut("tauA", b)),
                  "tau twists by t -> 1-t")
        res.tally(apply_basic("phi", u.scale(b))
                  == apply_basic("phi", u).scale(ring_aut("phi", b)),
                  "phi twists by t -> (t-1)/t")
    return res


def check_onsager_invariance(seed=0, trials=50) -> CheckResult:
    res = CheckResult("symmetry", "the Klein group preserves the Onsager subspace")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        u = rand_onsager_elem(rng, 6)
        for p in (RHO, TAU, RHO * TAU):
            res.tally(in_onsager(apply_perm(p, u)), f"image under {p}")
    return res


# ---------------------------------------------------------------------------
# likeness suite


def check_like_spans(top: int = 8) -> CheckResult:
    res = CheckResult("likeness", "every span basis element passes the likeness test")
    kinds = (("one", (0,)), ("t_pow", range(1, top + 1)),
             ("tp_pow", range(1, top + 1)), ("tpp_pow", range(1, top + 1)))
    for i, j in permutations(range(4), 2):
        for kind, ns in kinds:
            for n in ns:
                u = like_basis_elem((i, j), kind, n)
                res.tally(is_like((i, j), u), f"({i},{j}) {kind} {n}")
    return res


def check_like_ordering_insensitive(seed=0, trials=50) -> CheckResult:
    """Flipping the opposite edge negates both sides of the defining
    relation, so either edge order must give the same verdict."""
    res = CheckResult("likeness", "likeness does not depend on the opposite edge order")
    rng = _rng(seed, res.name)
    pairs = list(permutations(range(4), 2))
    for _ in range(trials):
        i, j = pairs[rng.randrange(len(pairs))]
        k, h = sorted({0, 1, 2, 3} - {i, j})
        if rng.random() < 0.5:
            u = std_gen(i, j).scale(rand_ring_elem(rng, 3))
        else:
            u = rand_loop_elem(rng, 3)
        a = bracket(std_gen(i, j), u).is_zero and dolan_grady_holds(std_gen(k, h), u)
        b = bracket(std_gen(i, j), u).is_zero and dolan_grady_holds(std_gen(h, k), u)
        res.tally(a == b, f"orderings disagree on ({i},{j})")
    return res


def check_canonical_decomposition(seed=0, trials=250, max_deg=8, max_pow=3) -> CheckResult:
    res = CheckResult("likeness", "path decomposition of the full loop algebra")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        u = rand_loop_elem(rng, max_deg, max_pow, max_pow)
        parts = decompose_canonical(u)
        res.tally(parts.total() == u, "parts sum to the input")
        res.tally(is_like((0, 3), parts.kh), "0-3 slot")
        res.tally(is_like((3, 1), parts.hi), "3-1 slot")
        res.tally(is_like((1, 2), parts.ij), "1-2 slot")
    return res


def check_onsager_decomposition(seed=0, trials=125, max_deg=8) -> CheckResult:
    res = CheckResult("likeness", "path decompositions of the Onsager subalgebra")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        u = rand_onsager_elem(rng, max_deg)
        for label in BasisId:
            parts = decompose_onsager(label, u)
            k, h, i, j = label.path
            res.tally(parts.total() == u, f"{label.arrows}: parts sum to the input")
            res.tally(is_like((k, h), parts.kh), f"{label.arrows}: first slot")
            res.tally(is_like((h, i), parts.hi), f"{label.arrows}: middle slot")
            res.tally(is_like((i, j), parts.ij), f"{label.arrows}: last slot")
    return res


def check_decomposition_transport(seed=0, trials=20) -> CheckResult:
    """rho and tau carry the [0312] decomposition slotwise onto the
    decompositions for the swapped labels."""
    res = CheckResult("likeness", "symmetries transport decompositions between labels")
    rng = _rng(seed, res.name)
    moves = ((RHO, BasisId.DD), (TAU, BasisId.DU), (RHO * TAU, BasisId.UD))
    for _ in range(trials):
        u = rand_onsager_elem(rng, 6)
        base = decompose_onsager(BasisId.UU, u)
        for p, label in moves:
            moved = decompose_onsager(label, apply_perm(p, u))
            res.tally(moved.kh == apply_perm(p, base.kh), f"{label.arrows} first slot")
            res.tally(moved.hi == apply_perm(p, base.hi), f"{label.arrows} middle slot")
            res.tally(moved.ij == apply_perm(p, base.ij), f"{label.arrows} last slot")
    return res


# ---------------------------------------------------------------------------
# bases suite


def check_seeds() -> CheckResult:
    res = CheckResult("bases", "seeds are the signed standard generators")
    signs = {BasisId.UU: (1, 1), BasisId.DD: (-1, -1),
             BasisId.DU: (-1, 1), BasisId.UD: (1, -1)}
    for b in BasisId:
        a0, b0 = basis_seeds(b)
        sa, sb = signs[b]
        res.tally(a0 == ONSAGER_A * sa, f"{b.arrows} A seed")
        res.tally(b0 == ONSAGER_B * sb, f"{b.arrows} B seed")
        res.tally(a0 == basis_elem(BasisVector(b, "A", 0)), f"{b.arrows} A closed form")
        res.tally(b0 == basis_elem(BasisVector(b, "B", 0)), f"{b.arrows} B closed form")
    return res


def check_recursion_matches_closed(top: int = 8) -> CheckResult:
    res = CheckResult("bases", "recursive construction equals the closed forms")
    for b in BasisId:
        for family in FAMILIES:
            for i in _fam_range(family, top):
                v = BasisVector(b, family, i)
                res.tally(ex.evaluate(basis_elem_recursive(v)) == basis_elem(v),
                          f"{v}")
    return res


def check_structure_constants(max_sum: int = 10) -> CheckResult:
    res = CheckResult("bases", "bracket table matches brackets of closed forms")
    for b in BasisId:
        for f1, f2 in product(FAMILIES, repeat=2):
            for i in _fam_range(f1, max_sum):
                for j in _fam_range(f2, max_sum - i):
                    if i + j > max_sum:
                        continue
                    v1 = BasisVector(b, f1, i)
                    v2 = BasisVector(b, f2, j)
                    lhs = bracket(basis_elem(v1), basis_elem(v2))
                    rhs = bracket_coords(b, v1, v2).to_elem()
                    res.tally(lhs == rhs, f"{b.arrows}: [{v1}, {v2}]")
    return res


def check_coords_roundtrip(seed=0, trials=60, max_deg=10) -> CheckResult:
    res = CheckResult("bases", "coordinates recombine to the element")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        u = rand_onsager_elem(rng, max_deg)
        for b in BasisId:
            res.tally(coords(u, b).to_elem() == u, f"round trip in {b.arrows}")
    for b in BasisId:
        for family in FAMILIES:
            for i in _fam_range(family, 6):
                v = BasisVector(b, family, i)
                c = coords(basis_elem(v), b)
                res.tally(c == OCoords(b, {(family, i): 1}),
                          f"{v} has unit coordinates")
    return res


def check_basis_slot_membership(top: int = 8) -> CheckResult:
    res = CheckResult("bases", "each family lies in its path slot")
    for b in BasisId:
        k, h, i, j = b.path
        slots = {"B": (k, h), "psi": (h, i), "A": (i, j)}
        for family in FAMILIES:
            for n in _fam_range(family, top):
                u = basis_elem(BasisVector(b, family, n))
                res.tally(is_like(slots[family], u),
                          f"{family}^{b.arrows}_{n} in slot {slots[family]}")
                res.tally(in_onsager(u), f"{family}^{b.arrows}_{n} in the subalgebra")
    return res


# ---------------------------------------------------------------------------
# transitions suite


def check_basis_swaps(top: int = 8) -> CheckResult:
    res = CheckResult("transitions", "rho and tau swap the bases elementwise")
    for g in ("rho", "tau"):
        for b in BasisId:
            for family in FAMILIES:
                for n in _fam_range(family, top):
                    v = BasisVector(b, family, n)
                    w = aut_image(g, v)
                    res.tally(apply_basic(g, basis_elem(v)) == basis_elem(w),
                              f"{g}({v}) = {w}")
    return res


def check_swap_square() -> CheckResult:
    res = CheckResult("transitions", "the two swaps commute and compose to the diagonal")
    for b in BasisId:
        v = BasisVector(b, "A", 0)
        via_rt = aut_image("rho", aut_image("tau", v))
        via_tr = aut_image("tau", aut_image("rho", v))
        res.tally(via_rt == via_tr, f"square commutes at {b.arrows}")
        res.tally(via_rt.basis is not b, f"diagonal moves {b.arrows}")
    return res


def check_transition_semantics(top: int = 12) -> CheckResult:
    res = CheckResult("transitions", "expansions evaluate to the named vector")
    for src in BasisId:
        for dst in BasisId:
            if src is dst:
                continue
            for family in FAMILIES:
                for n in _fam_range(family, top):
                    tv = transition(src, dst, BasisVector(src, family, n))
                    target = basis_elem(BasisVector(dst, family, n))
                    res.tally(tv.to_elem() == target,
                              f"{src.arrows}->{dst.arrows} {family}_{n}")
    return res


def check_transition_roundtrip(top: int = 12) -> CheckResult:
    res = CheckResult("transitions", "forward and backward expansions invert")
    for src in BasisId:
        for dst in BasisId:
            if src is dst:
                continue
            for family in FAMILIES:
                for n in _fam_range(family, top):
                    forward = transition(src, dst, BasisVector(src, family, n))
                    acc = OCoords(dst, {})
                    for (f2, i2), c in forward.items():
                        back = transition(dst, src, BasisVector(dst, f2, i2))
                        acc = acc.plus(back.scaled(c))
                    res.tally(acc == OCoords(dst, {(family, n): 1}),
                              f"{src.arrows}<->{dst.arrows} {family}_{n}")
    return res


def check_transition_identity() -> CheckResult:
    res = CheckResult("transitions", "same-basis expansion is the singleton")
    for b in BasisId:
        tv = transition(b, b, BasisVector(b, "psi", 2))
        res.tally(tv == OCoords(b, {("psi", 2): 1}), f"identity on {b.arrows}")
    return res


def check_transition_composition(top: int = 10) -> CheckResult:
    """Opposite-corner expansions agree whichever adjacent basis they route
    through."""
    res = CheckResult("transitions", "the two composite routes agree")
    corner_pairs = ((BasisId.UU, BasisId.UD), (BasisId.UD, BasisId.UU),
                    (BasisId.DD, BasisId.DU), (BasisId.DU, BasisId.DD))
    swaps = {"rho": {BasisId.UU: BasisId.DD, BasisId.DD: BasisId.UU,
                     BasisId.DU: BasisId.UD, BasisId.UD: BasisId.DU},
             "tau": {BasisId.UU: BasisId.DU, BasisId.DU: BasisId.UU,
                     BasisId.DD: BasisId.UD, BasisId.UD: BasisId.DD}}

    def via(src, dst, mid, family, n):
        over_mid = transition(mid, dst, BasisVector(mid, family, n))
        acc = OCoords(src, {})
        for (f2, i2), c in over_mid.items():
            acc = acc.plus(transition(src, mid, BasisVector(src, f2, i2)).scaled(c))
        return acc

    for src, dst in corner_pairs:
        mid_rho = swaps["rho"][src]
        mid_tau = swaps["tau"][src]
        for family in FAMILIES:
            for n in _fam_range(family, top):
                a = via(src, dst, mid_rho, family, n)
                bb = via(src, dst, mid_tau, family, n)
                res.tally(a == bb, f"{src.arrows}->{dst.arrows} {family}_{n}")
                res.tally(transition(src, dst, BasisVector(src, family, n)) == a,
                          f"production route {src.arrows}->{dst.arrows} {family}_{n}")
    return res


# ---------------------------------------------------------------------------
# expressions suite


def check_worked_examples() -> CheckResult:
    res = CheckResult("expressions", "unrolled recursion examples through index 3")
    for (arrows, family, index), text in WORKED_EXAMPLES.items():
        b = BasisId.parse(arrows)
        v = BasisVector(b, family, index)
        given = ex.parse(text)
        res.tally(ex.evaluate(given) == basis_elem(v), f"{v} closed form")
        res.tally(ex.expr_equal(given, basis_elem_recursive(v)), f"{v} recursion")
    return res


def check_parse_render_roundtrip(seed=0, trials=80) -> CheckResult:
    res = CheckResult("expressions", "rendering parses back to an equal value")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        e = rand_expr(rng, 4)
        res.tally(ex.expr_equal(ex.parse(ex.render(e)), e), f"round trip of {ex.render(e)!r}")
        d = ex.expr_from_json(ex.expr_to_json(e))
        res.tally(d == e, "JSON round trip is structural")
    return res


def check_evaluate_homomorphism(seed=0, trials=40) -> CheckResult:
    res = CheckResult("expressions", "evaluation is a Lie homomorphism into the subalgebra")
    rng = _rng(seed, res.name)
    for _ in range(trials):
        e1 = rand_expr(rng, 3)
        e2 = rand_expr(rng, 3)
        res.tally(ex.evaluate(ex.Bracket(e1, e2))
                  == bracket(ex.evaluate(e1), ex.evaluate(e2)), "bracket node")
        res.tally(ex.evaluate(ex.Sum(e1, e2)) == ex.evaluate(e1) + ex.evaluate(e2),
                  "sum node")
        res.tally(in_onsager(ex.evaluate(e1)), "values stay in the subalgebra")
    return res


# ---------------------------------------------------------------------------
# runner


def _suite_checks(max_index: int, seed, quick: bool):
    scale = 1 if not quick else 4  # quick mode divides the random sample sizes
    return {
        "ring": (
            lambda: check_ring_axioms(seed, 60 // scale),
            lambda: check_ring_aut_properties(seed, 40 // scale),
            lambda: check_ring_span_identities(max(max_index, 12)),
            lambda: check_shift_roundtrip(seed, 60 // scale),
            lambda: check_ring_text_roundtrip(seed, 60 // scale),
        ),
        "loop": (
            lambda: check_bracket_against_table(seed, 1000 // scale),
            lambda: check_lie_axioms(seed, 40 // scale),
            check_tetrahedron_relations,
            check_onsager_pair,
            lambda: check_onsager_closure(seed, 60 // scale),
        ),
        "symmetry": (
            lambda: check_group_relations(seed, 100 // scale),
            lambda: check_s4_homomorphism(seed),
            check_equivariance,
            lambda: check_module_twists(seed, 40 // scale),
            lambda: check_onsager_invariance(seed, 50 // scale),
        ),
        "likeness": (
            lambda: check_like_spans(max_index),
            lambda: check_like_ordering_insensitive(seed, 50 // scale),
            lambda: check_canonical_decomposition(seed, 250 // scale),
            lambda: check_onsager_decomposition(seed, 125 // scale),
            lambda: check_decomposition_transport(seed, 20 // scale),
        ),
        "bases": (
            check_seeds,
            lambda: check_recursion_matches_closed(min(max_index, 8)),
            lambda: check_structure_constants(max(max_index, 10)),
            lambda: check_coords_roundtrip(seed, 60 // scale),
            lambda: check_basis_slot_membership(max_index),
        ),
        "transitions": (
            lambda: check_basis_swaps(max_index),
            check_swap_square,
            lambda: check_transition_semantics(max(max_index, 12)),
            lambda: check_transition_roundtrip(max(max_index, 12)),
            check_transition_identity,
            lambda: check_transition_composition(max(max_index, 10)),
        ),
        "expressions": (
            check_worked_examples,
            lambda: check_parse_render_roundtrip(seed, 80 // scale),
            lambda: check_evaluate_homomorphism(seed, 40 // scale),
        ),
    }


SUITES = ("ring", "loop", "symmetry", "likeness", "bases", "transitions", "expressions")


def run_checks(suite: str = "all", max_index: int = 8, seed=20240815,
               quick: bool = False) -> list[CheckResult]:
    """Run one suite (or all) and return the individual results."""
    table = _suite_checks(max_index, seed, quick)
    if suite == "all":
        names = SUITES
    elif suite in table:
        names = (suite,)
    else:
        raise ValueError(f"unknown suite {suite!r}; use one of {('all',) + SUITES}")
    results = []
    for name in names:
        for fn in table[name]:
            results.append(fn())
    return results
