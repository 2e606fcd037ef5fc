"""Shared hypothesis strategies for the algebra under test.

Sizes are kept small: every operation is exact, so the laws either hold on
tiny inputs or the implementation is wrong.
"""

from fractions import Fraction

from hypothesis import settings, strategies as st

from onsager import LoopElem, Poly, RingElem

settings.register_profile("exact", deadline=None, max_examples=50)
settings.load_profile("exact")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)

coeff_lists = st.lists(rationals, min_size=0, max_size=6)

polys = coeff_lists.map(Poly)

ring_elems = st.builds(
    RingElem, polys, st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3))

loop_elems = st.builds(LoopElem, ring_elems, ring_elems, ring_elems)


@st.composite
def onsager_elems(draw, max_deg: int = 6):
    """Members of x(x)F[t] + y(x)tF[t] + z(x)(t-1)F[t]."""
    ints = st.lists(st.integers(min_value=-5, max_value=5), max_size=max_deg)
    px = Poly([Fraction(c) for c in draw(ints)])
    py = Poly([Fraction(c) for c in draw(ints)]).shift_up(1)
    pz = Poly([Fraction(c) for c in draw(ints)]) * Poly([-1, 1])
    return LoopElem(RingElem(px), RingElem(py), RingElem(pz))
