import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from frel import (
    System,
    TNormKind,
    check_consistency,
    greatest_potential_solution,
    max_t_product,
    min_residuum_product,
    residuum,
    shifted_bounds,
    t_apply,
)
from frel.algebra import residuum_array, t_norm_array

from conftest import EX1_A, EX1_B, KINDS, example1, systems

MIN, PROD, LUK = TNormKind.MIN, TNormKind.PRODUCT, TNormKind.LUKASIEWICZ

# exact rationals so the lattice identities are checked without rounding noise
GRID = [Fraction(k, 10) for k in range(11)]


@pytest.mark.parametrize(
    "kind, x, y, expected",
    [(MIN, 0.3, 0.7, 0.3), (PROD, 0.5, 0.4, 0.2), (LUK, 0.7, 0.5, 0.2)],
)
def test_t_apply_examples(kind, x, y, expected):
    assert t_apply(kind, x, y) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize(
    "kind, x, y, expected",
    [(MIN, 0.4, 0.8, 1), (PROD, 0.8, 0.4, 0.5), (LUK, 0.8, 0.4, 0.6)],
)
def test_residuum_examples(kind, x, y, expected):
    assert residuum(kind, x, y) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("fn", [t_apply, residuum])
@pytest.mark.parametrize("x, y", [(-0.1, 0.5), (0.5, 1.2)])
def test_scalar_ops_reject_out_of_range(fn, x, y):
    with pytest.raises(ValueError):
        fn(MIN, x, y)


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_tnorm_axioms_exact(kind):
    T = lambda x, y: t_apply(kind, x, y)
    for x, y in itertools.product(GRID, repeat=2):
        assert T(x, y) == T(y, x)
        assert T(x, 1) == x
        assert 0 <= T(x, y) <= 1
    for x, y, z in itertools.product(GRID, repeat=3):
        assert T(x, T(y, z)) == T(T(x, y), z)
        if x <= y:
            assert T(x, z) <= T(y, z)


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_adjunction_exact(kind):
    for a, b, z in itertools.product(GRID, repeat=3):
        assert (t_apply(kind, a, z) <= b) == (z <= residuum(kind, a, b))
    for a, b in itertools.product(GRID, repeat=2):
        assert t_apply(kind, a, residuum(kind, a, b)) <= b
        assert b <= residuum(kind, a, t_apply(kind, a, b))


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_array_kernels_match_scalar(kind):
    pts = np.linspace(0, 1, 21)
    X, Y = np.meshgrid(pts, pts)
    T = t_norm_array(kind, X, Y)
    I = residuum_array(kind, X, Y)
    for (r, c), x in np.ndenumerate(X):
        y = Y[r, c]
        assert T[r, c] == pytest.approx(t_apply(kind, float(x), float(y)), abs=1e-15)
        assert I[r, c] == pytest.approx(residuum(kind, float(x), float(y)), abs=1e-15)


def test_max_t_product_example1():
    out = max_t_product(MIN, np.array(EX1_A), np.array([0.8, 0.4, 0.4, 0.4]))
    np.testing.assert_allclose(out, [0.8, 0.7, 0.4, 0.4], atol=1e-12)


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_max_t_product_zero_vector(kind):
    np.testing.assert_array_equal(max_t_product(kind, np.array(EX1_A), np.zeros(4)), np.zeros(4))


def test_max_t_product_neutral():
    assert max_t_product(MIN, [[0.5]], [1.0]).tolist() == [0.5]


def test_compositions_check_dimensions():
    with pytest.raises(ValueError):
        max_t_product(MIN, np.ones((2, 3)), np.ones(2))
    with pytest.raises(ValueError):
        min_residuum_product(MIN, np.ones((2, 3)), np.ones(2))


def test_min_residuum_product_examples():
    out = min_residuum_product(MIN, np.array(EX1_A).T, np.array(EX1_B))
    np.testing.assert_allclose(out, [0.8, 0.4, 0.4, 0.4], atol=1e-12)
    assert min_residuum_product(PROD, [[0.8]], [0.4]).tolist() == [0.5]


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_min_residuum_product_all_ones(kind):
    np.testing.assert_array_equal(min_residuum_product(kind, np.array(EX1_A), np.ones(4)), np.ones(4))


def test_greatest_potential_solution():
    np.testing.assert_allclose(greatest_potential_solution(example1(MIN)), [0.8, 0.4, 0.4, 0.4])
    S = System(PROD, EX1_A, np.ones(4))
    np.testing.assert_array_equal(greatest_potential_solution(S), np.ones(4))
    assert greatest_potential_solution(System(MIN, [[0.5]], [0.7])).tolist() == [1.0]


def test_check_consistency_examples():
    res = check_consistency(example1(MIN))
    assert res.consistent
    np.testing.assert_allclose(res.image, EX1_B, atol=1e-9)
    assert not check_consistency(example1(PROD)).consistent
    res = check_consistency(System(MIN, [[0.5]], [0.7]))
    assert not res.consistent and res.image.tolist() == [0.5]


@given(systems(), st.data())
def test_greatest_solution_dominates(S, data):
    # build a consistent system from a random x, then compare x with e
    x = np.array(data.draw(st.lists(st.integers(0, 20).map(lambda k: k / 20), min_size=S.m, max_size=S.m)))
    S2 = S.with_rhs(max_t_product(S.tnorm, S.A, x))
    res = check_consistency(S2)
    assert res.consistent
    assert np.all(x <= res.e + 1e-12)


def test_shifted_bounds_examples():
    lo, hi = shifted_bounds([0.8, 0.7, 0.4, 0.4], 0.1)
    np.testing.assert_allclose(lo, [0.7, 0.6, 0.3, 0.3])
    np.testing.assert_allclose(hi, [0.9, 0.8, 0.5, 0.5])
    lo, hi = shifted_bounds(EX1_B, 0.0)
    np.testing.assert_array_equal(lo, EX1_B)
    np.testing.assert_array_equal(hi, EX1_B)
    lo, hi = shifted_bounds([0.95], 0.1)
    assert lo[0] == pytest.approx(0.85) and hi[0] == 1.0


@given(st.lists(st.floats(0, 1), min_size=1, max_size=8), st.floats(0, 1))
def test_shifted_bounds_properties(b, delta):
    lo, hi = shifted_bounds(b, delta)
    b = np.array(b)
    assert np.all(lo <= b) and np.all(b <= hi)
    assert np.max(b - lo) <= delta + 1e-15 and np.max(hi - b) <= delta + 1e-15


def test_system_validation_names_entry():
    with pytest.raises(ValueError, match=r"A\[2\]\[1\]"):
        System(MIN, [[0.5], [1.2]], [0.1, 0.2])
    with pytest.raises(ValueError, match="length of b"):
        System(MIN, [[0.5]], [0.1, 0.2])
    with pytest.raises(ValueError):
        System("bogus", [[0.5]], [0.1])


def test_system_is_immutable():
    S = example1(MIN)
    with pytest.raises(ValueError):
        S.A[0, 0] = 0.0
