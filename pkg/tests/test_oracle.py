import numpy as np
import pytest
from hypothesis import given, strategies as st

from frel import OracleConfig, System, TNormKind, oracle_distance_bisection, oracle_enumerate, random_system
from frel.oracle import bisection_predicate, grid_points, splitmix64

from conftest import KINDS, example1, example5, systems

MIN, PROD, LUK = TNormKind.MIN, TNormKind.PRODUCT, TNormKind.LUKASIEWICZ


@pytest.mark.parametrize("kind, expected", [(MIN, 0.0), (LUK, 0.1), (PROD, 0.14 / 1.7)])
def test_bisection_example1(kind, expected):
    cfg = OracleConfig()
    assert abs(oracle_distance_bisection(example1(kind), cfg) - expected) <= cfg.tolerance


@given(systems(), st.floats(0, 1), st.floats(0, 1))
def test_predicate_monotone(S, d1, d2):
    lo, hi = sorted((d1, d2))
    if bisection_predicate(S, lo):
        assert bisection_predicate(S, hi)


@given(systems())
def test_predicate_holds_at_one(S):
    assert bisection_predicate(S, 1.0)


def test_bisection_respects_iteration_cap():
    S = example1(PROD)
    coarse = oracle_distance_bisection(S, OracleConfig(tolerance=1e-9, max_iter=5))
    assert abs(coarse - 0.14 / 1.7) <= 2**-5


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(tolerance=0)
    with pytest.raises(ValueError):
        OracleConfig(max_exhaustive_n=21)


def test_oracle_enumerate_examples():
    fam = oracle_enumerate(example5())
    assert sorted(fam.sets, key=lambda R: (len(R), R)) == [
        (1,), (2,), (3,), (4,), (1, 2), (1, 4), (2, 4), (3, 4), (1, 2, 4)
    ]
    assert len(oracle_enumerate(example1(MIN))) == 15
    assert len(oracle_enumerate(System(MIN, [[0.4]], [0.9]))) == 0


@pytest.mark.parametrize("kind", [PROD, LUK], ids=lambda k: k.value)
def test_oracle_enumerate_other_tnorms(kind):
    fam = oracle_enumerate(example1(kind))
    assert (1, 3, 4) in fam and (1, 2, 3, 4) not in fam
    assert (2,) in fam


def test_oracle_enumerate_cap():
    S = random_system(3, 5, 2)
    with pytest.raises(ValueError):
        oracle_enumerate(S, OracleConfig(max_exhaustive_n=4))


def test_splitmix64_reference_values():
    # reference outputs of the splitmix64 generator seeded with 0
    state, out = 0, []
    for _ in range(3):
        state = (state + 0x9E3779B97F4A7C15) & ((1 << 64) - 1)
        out.append(splitmix64(state))
    assert out == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_grid_points():
    assert grid_points(0.25) == [0, 0.25, 0.5, 0.75, 1.0]
    assert grid_points(0.3) == [0, 0.3, 0.6, 0.9, 1.0]
    assert len(grid_points(0.05)) == 21
    for bad in (0, -0.1, 0.6):
        with pytest.raises(ValueError):
            grid_points(bad)


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_random_system_is_deterministic(kind):
    assert random_system(42, 4, 3, kind) == random_system(42, 4, 3, kind)
    S = random_system(42, 4, 3, kind, 0.05)
    grid = set(grid_points(0.05))
    assert set(S.A.ravel()) <= grid and set(S.b) <= grid
    assert S.tnorm is kind and S.A.shape == (4, 3)


def test_random_system_frozen_fixture():
    S = random_system(1, 2, 3)
    assert S.A.tolist() == [[0.1, 0.35, 0.75], [0.7, 0.6, 0.1]]
    assert S.b.tolist() == [0.0, 0.15]


def test_random_system_seeds_differ():
    for s in range(100):
        a, b = random_system(s, 3, 3), random_system(s + 1, 3, 3)
        assert not (np.array_equal(a.A, b.A) and np.array_equal(a.b, b.b))


def test_random_system_rejects_bad_shape():
    with pytest.raises(ValueError):
        random_system(0, 0, 3)
