"""Unit-interval algebra for max-T fuzzy relational equations.

Scalar t-norms and residual implicators (min/Goedel, product/Goguen,
Lukasiewicz), their vectorized counterparts, the max-T and min-I_T matrix
compositions and the greatest-solution consistency test.

Scalar functions are written in plain Python so they work unchanged on
``fractions.Fraction`` inputs; the ``*_array`` variants are numpy kernels
used by the matrix compositions.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

DEFAULT_EPS = 1e-9


class TNormKind(enum.Enum):
    MIN = "min"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"

    @classmethod
    def parse(cls, name: "str | TNormKind") -> "TNormKind":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        aliases = {"goedel": "min", "godel": "min", "prod": "product", "luk": "lukasiewicz"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(
                f"unknown t-norm {name!r}; expected one of 'min', 'product', 'lukasiewicz'"
            ) from None


def _check_unit(value, name: str = "value"):
    if not 0 <= value <= 1:
        raise ValueError(f"{name} = {value!r} is outside [0, 1]")
    return value


def pos(x):
    """Positive part ``max(x, 0)``."""
    return x if x > 0 else type(x)(0)


def t_apply(kind: TNormKind, x, y):
    """Evaluate the t-norm of ``kind`` at ``(x, y)``."""
    _check_unit(x, "x")
    _check_unit(y, "y")
    if kind is TNormKind.MIN:
        return min(x, y)
    if kind is TNormKind.PRODUCT:
        return x * y
    return pos(x + y - 1)


def residuum(kind: TNormKind, x, y):
    """Residual implicator ``I_T(x, y) = max{z : T(x, z) <= y}``.

    Goedel for MIN, Goguen for PRODUCT, Lukasiewicz implication otherwise.
    Always 1 when ``x <= y``.
    """
    _check_unit(x, "x")
    _check_unit(y, "y")
    if x <= y:
        return x * 0 + 1
    if kind is TNormKind.MIN:
        return y
    if kind is TNormKind.PRODUCT:
        return y / x
    return min(1 - x + y, x * 0 + 1)


def t_norm_array(kind: TNormKind, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if kind is TNormKind.MIN:
        return np.minimum(x, y)
    if kind is TNormKind.PRODUCT:
        return x * y
    return np.maximum(x + y - 1.0, 0.0)


def residuum_array(kind: TNormKind, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    le = x <= y
    if kind is TNormKind.MIN:
        out = y.copy()
    elif kind is TNormKind.PRODUCT:
        # x > y >= 0 wherever the quotient is kept, so the guard never changes a result
        out = y / np.where(le, 1.0, x)
    else:
        out = np.minimum(1.0 - x + y, 1.0)
    out[le] = 1.0
    return out


def _as_unit_array(values, name: str, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != ndim:
        raise ValueError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must be non-empty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    bad = np.argwhere((arr < 0) | (arr > 1))
    if len(bad):
        pos_ = tuple(int(t) + 1 for t in bad[0])
        label = f"{name}[{']['.join(map(str, pos_))}]"
        raise ValueError(f"{label} = {arr[tuple(bad[0])]!r} is outside [0, 1]")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class System:
    """A max-T system ``A o x = b`` with ``A`` of shape (n, m)."""

    tnorm: TNormKind
    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "tnorm", TNormKind.parse(self.tnorm))
        A = _as_unit_array(self.A, "A", 2)
        b = _as_unit_array(self.b, "b", 1)
        if b.shape[0] != A.shape[0]:
            raise ValueError(f"length of b ({b.shape[0]}) differs from row count of A ({A.shape[0]})")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def m(self) -> int:
        return self.A.shape[1]

    def with_rhs(self, b) -> "System":
        return System(self.tnorm, self.A, b)

    def with_tnorm(self, kind) -> "System":
        return System(kind, self.A, self.b)

    def __eq__(self, other):
        if not isinstance(other, System):
            return NotImplemented
        return (
            self.tnorm is other.tnorm
            and np.array_equal(self.A, other.A)
            and np.array_equal(self.b, other.b)
        )

    __hash__ = None

    def __repr__(self):
        return f"System(tnorm={self.tnorm.value!r}, A={self.A.tolist()}, b={self.b.tolist()})"


def max_t_product(kind: TNormKind, A, x) -> np.ndarray:
    """``(A o x)_i = max_j T(a_ij, x_j)``."""
    A = np.asarray(A, dtype=float)
    x = np.asarray(x, dtype=float)
    if A.ndim != 2 or x.ndim != 1 or A.shape[1] != x.shape[0]:
        raise ValueError(f"dimension mismatch: A is {A.shape}, x has shape {x.shape}")
    return t_norm_array(kind, A, x[None, :]).max(axis=1)


def min_residuum_product(kind: TNormKind, B, c) -> np.ndarray:
    """``(B * c)_j = min_i I_T(b_ji, c_i)``."""
    B = np.asarray(B, dtype=float)
    c = np.asarray(c, dtype=float)
    if B.ndim != 2 or c.ndim != 1 or B.shape[1] != c.shape[0]:
        raise ValueError(f"dimension mismatch: B is {B.shape}, c has shape {c.shape}")
    return residuum_array(kind, B, c[None, :]).min(axis=1)


def greatest_potential_solution(system: System) -> np.ndarray:
    return min_residuum_product(system.tnorm, system.A.T, system.b)


class Consistency(NamedTuple):
    consistent: bool
    e: np.ndarray
    image: np.ndarray


def check_consistency(system: System, eps: float = DEFAULT_EPS) -> Consistency:
    """Sanchez/Pedrycz test: the system is solvable iff ``A o e == b``.

    When consistent, ``e`` is the greatest solution.
    """
    e = greatest_potential_solution(system)
    image = max_t_product(system.tnorm, system.A, e)
    ok = bool(np.all(np.abs(image - system.b) <= eps))
    return Consistency(ok, e, image)


def shifted_bounds(b: Sequence[float], delta: float) -> tuple[np.ndarray, np.ndarray]:
    """Return ``((b - delta)^+, min(b + delta, 1))``."""
    _check_unit(delta, "delta")
    b = np.asarray(b, dtype=float)
    return np.maximum(b - delta, 0.0), np.minimum(b + delta, 1.0)
