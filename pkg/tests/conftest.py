import sys
from pathlib import Path

from hypothesis import HealthCheck, settings, strategies as st

from daonum.ideal import MonomialIdeal, Ring

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def ideals(draw, n_max=3, exp_max=3, gens_max=5, n_min=1):
    """Proper nonzero monomial ideals."""
    n = draw(st.integers(n_min, n_max))
    vec = st.tuples(*[st.integers(0, exp_max)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=gens_max))
    return MonomialIdeal(Ring.of(n), gens)


@st.composite
def ideal_pairs(draw, n_max=3, exp_max=3, gens_max=4):
    I = draw(ideals(n_max, exp_max, gens_max))
    vec = st.tuples(*[st.integers(0, exp_max)] * I.ring.n).filter(any)
    J = MonomialIdeal(I.ring, draw(st.lists(vec, min_size=1, max_size=gens_max)))
    return I, J
