from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from frel import System, TNormKind

FIXTURES = Path(__file__).parent / "fixtures"

EX1_A = [[1, 0.4, 0.5, 0.7], [0.7, 0.5, 0.3, 0.5], [0.2, 1, 1, 0.6], [0.4, 0.5, 0.5, 0.8]]
EX1_B = [0.8, 0.7, 0.4, 0.4]
EX5_A = [[0.98, 0.02, 0.10], [0.80, 0.31, 0.18], [0.78, 0.38, 0.26], [0.77, 0.20, 0.85]]
EX5_B = [0.13, 0.28, 0.54, 0.70]

KINDS = list(TNormKind)

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def example1(kind) -> System:
    return System(kind, EX1_A, EX1_B)


def example5(kind=TNormKind.MIN) -> System:
    return System(kind, EX5_A, EX5_B)


@pytest.fixture(params=KINDS, ids=lambda k: k.value)
def kind(request):
    return request.param


grid_values = st.integers(0, 20).map(lambda k: k / 20)


@st.composite
def systems(draw, kinds=tuple(KINDS), max_n=5, max_m=5):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    kind = draw(st.sampled_from(kinds))
    A = draw(st.lists(st.lists(grid_values, min_size=m, max_size=m), min_size=n, max_size=n))
    b = draw(st.lists(grid_values, min_size=n, max_size=n))
    return System(kind, np.array(A), np.array(b))


@st.composite
def systems_with_subset(draw, **kw):
    S = draw(systems(**kw))
    R = draw(st.sets(st.integers(1, S.n), min_size=1))
    return S, tuple(sorted(R))
