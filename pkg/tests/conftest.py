import math

from hypothesis import assume, strategies as st

from gentropies import make_distribution, make_joint
from gentropies.entropies import (
    havrda_charvat,
    renyi,
    shannon,
    strongly_additive_nath,
    tsallis,
)
from gentropies.errors import ParameterError


def constrained_grid():
    """(label, family) pairs for every strongly additive grid member.

    Half of the Nath (alpha, lambda) combinations violate the sign
    constraint (1 - alpha)/lambda > 0 and are skipped.
    """
    families = [(f"shannon(tau={t})", shannon(t)) for t in (-1.0, -2.0)]
    families += [(f"renyi({a})", renyi(a)) for a in (0.5, 2.0, 3.0)]
    for a in (0.5, 2.0):
        for lam in (-0.5, 1.0):
            try:
                families.append((f"nath({a},{lam})", strongly_additive_nath(a, lam)))
            except ParameterError:
                pass
    families += [(f"tsallis({a})", tsallis(a)) for a in (0.5, 2.0, 3.0)]
    families += [(f"havrda-charvat({a})", havrda_charvat(a)) for a in (0.5, 2.0)]
    return families


@st.composite
def distributions(draw, min_size=1, max_size=8, positive=False):
    low = 1e-3 if positive else 0.0
    values = draw(
        st.lists(st.floats(low, 1.0, allow_nan=False), min_size=min_size, max_size=max_size)
    )
    total = math.fsum(values)
    assume(total > 1e-6)
    return make_distribution([v / total for v in values])


@st.composite
def joints(draw, max_rows=5, max_cols=5, positive=False):
    low = 1e-3 if positive else 0.0
    rows = draw(
        st.lists(
            st.lists(st.floats(low, 1.0, allow_nan=False), min_size=1, max_size=max_cols),
            min_size=1,
            max_size=max_rows,
        )
    )
    total = math.fsum(v for row in rows for v in row)
    assume(total > 1e-6)
    return make_joint([[v / total for v in row] for row in rows])
