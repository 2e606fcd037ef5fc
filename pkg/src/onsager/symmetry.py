"""The S4 action on the loop algebra by semilinear automorphisms.

Permutations of the four points {0, 1, 2, 3} act so that the generator for the
pair (i, j) maps to the generator for (p(i), p(j)).  The action is generated
by four named automorphisms

    rho = (0 3)(1 2)   tau = (1 2)   mu = (0 1)(2 3)   phi = (1 2 3)

given by explicit formulas; rho and mu commute with the module action while
tau and phi twist it by the ring substitutions t -> 1-t and t -> (t-1)/t.
apply_perm() reaches the remaining permutations by composing these, using the
shortest generator word (word_for).
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import permutations

import re

from .ring import INV_T, INV_TM1, ONE, P_T, P_TM1, Poly, RingElem, ZERO, ring_aut
from .loop import LoopElem, ONSAGER_B


class Perm:
    """A permutation of {0, 1, 2, 3}, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation of 0..3: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition: (p * q)(i) = p(q(i))."""
        if not isinstance(other, Perm):
            return NotImplemented
        return Perm(tuple(self.images[other.images[i]] for i in range(4)))

    def inverse(self) -> "Perm":
        inv = [0] * 4
        for i, v in enumerate(self.images):
            inv[v] = i
        return Perm(inv)

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm.parse({str(self)!r})"

    def __str__(self):
        return self.to_cycles()

    def to_cycles(self) -> str:
        """Cycle notation, e.g. "(03)(12)"; the identity is "e"."""
        seen = [False] * 4
        out = []
        for start in range(4):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            out.append("(" + "".join(str(c) for c in cyc) + ")")
        return "".join(out) if out else "e"

    @classmethod
    def parse(cls, text: str) -> "Perm":
        """Parse cycle notation such as "(12)(30)"; "e" or "()" is the identity."""
        s = re.sub(r"\s+", "", text)
        if s in ("e", "()", ""):
            return IDENTITY
        if not re.fullmatch(r"(\(\d+\))+", s):
            raise ValueError(f"bad cycle notation: {text!r}")
        images = list(range(4))
        for cyc in re.findall(r"\((\d+)\)", s):
            pts = [int(c) for c in cyc]
            if any(p > 3 for p in pts) or len(set(pts)) != len(pts):
                raise ValueError(f"bad cycle {cyc!r} in {text!r}")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(images)


IDENTITY = Perm((0, 1, 2, 3))
RHO = Perm((3, 2, 1, 0))
TAU = Perm((0, 2, 1, 3))
MU = Perm((1, 0, 3, 2))
PHI = Perm((0, 2, 3, 1))

GEN_PERMS = {"rho": RHO, "tau": TAU, "mu": MU, "phi": PHI}
GEN_ORDER = ("rho", "tau", "mu", "phi")

ALL_PERMS = tuple(Perm(p) for p in permutations(range(4)))

# module-linear generators: images of x(x)1, y(x)1, z(x)1
_RHO_IMGS = (
    LoopElem(RingElem(Poly([-1])), ZERO, ZERO),
    LoopElem(INV_T, ZERO, RingElem(Poly([1, -1]), 1, 0)),
    LoopElem(RingElem(Poly([-1]), 0, 1), RingElem(Poly([0, -1]), 0, 1), ZERO),
)
_MU_IMGS = (
    ONSAGER_B,
    LoopElem(ZERO, RingElem(Poly([-1])), ZERO),
    LoopElem(INV_TM1, RingElem(P_T, 0, 1), ZERO),
)


def apply_basic(name: str, u: LoopElem) -> LoopElem:
    """Apply one of the four generating automorphisms rho, tau, mu, phi."""
    if name == "rho" or name == "mu":
        ix, iy, iz = _RHO_IMGS if name == "rho" else _MU_IMGS
        return ix.scale(u.px) + iy.scale(u.py) + iz.scale(u.pz)
    if name == "tau":
        # x -> -x, y <-> z with a sign, coefficients through t -> 1-t
        return LoopElem(-ring_aut("tauA", u.px),
                        -ring_aut("tauA", u.pz),
                        -ring_aut("tauA", u.py))
    if name == "phi":
        # x -> y -> z -> x, coefficients through t -> (t-1)/t
        return LoopElem(ring_aut("phi", u.pz),
                        ring_aut("phi", u.px),
                        ring_aut("phi", u.py))
    raise ValueError(f"unknown basic automorphism {name!r}")


@lru_cache(maxsize=1)
def _word_table() -> dict[Perm, tuple[str, ...]]:
    """Shortest generator word per permutation, built once by breadth-first
    search; ties break toward the word that is lexicographically first in
    the order rho < tau < mu < phi."""
    words = {IDENTITY: ()}
    queue = deque([IDENTITY])
    while queue:
        p = queue.popleft()
        w = words[p]
        for name in GEN_ORDER:
            q = p * GEN_PERMS[name]
            if q not in words:
                words[q] = w + (name,)
                queue.append(q)
    return words


def word_for(p: Perm) -> tuple[str, ...]:
    """A shortest word in rho, tau, mu, phi whose product is p.

    The word multiplies left to right: word_for(p) == (a, b) means
    p == GEN_PERMS[a] * GEN_PERMS[b].
    """
    return _word_table()[p]


def apply_perm(p: Perm, u: LoopElem) -> LoopElem:
    """Apply the automorphism attached to an arbitrary permutation."""
    for name in reversed(word_for(p)):
        u = apply_basic(name, u)
    return u
