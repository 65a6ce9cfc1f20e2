import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ternops.structure import OpTable, Structure, default_names

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def groupoids(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    entries = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return Structure("G", default_names(n), {"mul": OpTable(2, n, tuple(entries))})


@st.composite
def ternaries(draw, min_n=1, max_n=3):
    n = draw(st.integers(min_n, max_n))
    entries = draw(st.lists(st.integers(0, n - 1), min_size=n ** 3, max_size=n ** 3))
    return Structure("T", default_names(n), {"t": OpTable(3, n, tuple(entries))})


def as_array(s, op="mul"):
    t = s.ops[op]
    return np.asarray(t.entries).reshape((s.n,) * t.arity)


@pytest.fixture
def z3():
    from ternops.constructions import cyclic_group
    return cyclic_group(3)
