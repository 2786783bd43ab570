"""Analytic Chebyshev distance of the right-hand side of a max-T system.

The distance is ``Delta = max_i min_j max_k delta_ijk`` where the
per-triple numbers ``delta_ijk`` depend only on rows ``i`` and ``k`` of the
system and on the t-norm. Rows with zero defect form the index set ``nc``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import (
    DEFAULT_EPS,
    System,
    TNormKind,
    check_consistency,
    max_t_product,
    min_residuum_product,
    pos,
    shifted_bounds,
)

# cap on the number of floats held by one chunk of the (i, j, k) tensor
_CHUNK_ELEMS = 1 << 22


class ApproximationError(RuntimeError):
    """The computed approximation failed its own consistency postcondition."""


def sigma_g(x, y, z):
    return min(pos(x - z) / 2, pos(y - z))


def phi(u, x, y, z):
    if u > 0:
        return pos(x * y - u * z) / (u + y)
    return x


def sigma_gg(u, x, y, z):
    return max(pos(x - u), min(phi(u, x, y, z), pos(y - z)))


def sigma_l(u, x, y, z):
    v = x + u - 1
    return min(x, max(pos(v), pos(v + y - z) / 2))


def _sigma_l_rows(a_ij, b_i, a_kj, b_k):
    # sigma_l(1 - a_ij, b_i, a_kj, b_k), regrouped so the k == i term is exactly (b_i - a_ij)^+
    return min(b_i, max(pos(b_i - a_ij), pos((b_i - b_k) + (a_kj - a_ij)) / 2))


def _check_index(value: int, upper: int, name: str) -> int:
    if not 1 <= value <= upper:
        raise IndexError(f"{name} = {value} is out of range 1..{upper}")
    return value - 1


def delta_ijk(system: System, i: int, j: int, k: int):
    """Scalar ``delta_ijk`` for 1-based row ``i``, column ``j`` and row ``k``."""
    i0 = _check_index(i, system.n, "i")
    j0 = _check_index(j, system.m, "j")
    k0 = _check_index(k, system.n, "k")
    A, b = system.A, system.b
    a_ij, b_i, a_kj, b_k = float(A[i0, j0]), float(b[i0]), float(A[k0, j0]), float(b[k0])
    if system.tnorm is TNormKind.MIN:
        return max(pos(b_i - a_ij), sigma_g(b_i, a_kj, b_k))
    if system.tnorm is TNormKind.PRODUCT:
        return sigma_gg(a_ij, b_i, a_kj, b_k)
    return _sigma_l_rows(a_ij, b_i, a_kj, b_k)


def _tensor_block(kind: TNormKind, A: np.ndarray, b: np.ndarray, rows: slice) -> np.ndarray:
    """``delta_ijk`` for ``i`` in ``rows``, all ``j`` and all ``k``; shape (r, m, n)."""
    b_i = b[rows, None, None]
    a_ij = A[rows, :, None]
    a_kj = A.T[None, :, :]
    b_k = b[None, None, :]
    if kind is TNormKind.MIN:
        return np.maximum(
            np.maximum(b_i - a_ij, 0.0),
            np.minimum(np.maximum(b_i - b_k, 0.0) / 2, np.maximum(a_kj - b_k, 0.0)),
        )
    if kind is TNormKind.PRODUCT:
        live = a_ij > 0
        denom = np.where(live, a_ij + a_kj, 1.0)
        phi_ = np.where(live, np.maximum(b_i * a_kj - a_ij * b_k, 0.0) / denom, b_i)
        return np.maximum(np.maximum(b_i - a_ij, 0.0), np.minimum(phi_, np.maximum(a_kj - b_k, 0.0)))
    return np.minimum(
        b_i,
        np.maximum(
            np.maximum(b_i - a_ij, 0.0),
            np.maximum((b_i - b_k) + (a_kj - a_ij), 0.0) / 2,
        ),
    )


def _row_chunks(system: System):
    step = max(1, _CHUNK_ELEMS // (system.m * system.n))
    for start in range(0, system.n, step):
        yield slice(start, min(start + step, system.n))


def delta_tensor(system: System) -> np.ndarray:
    """Full array ``D[i, j, k] = delta_ijk`` (0-based), shape (n, m, n)."""
    out = np.empty((system.n, system.m, system.n))
    for rows in _row_chunks(system):
        out[rows] = _tensor_block(system.tnorm, system.A, system.b, rows)
    return out


@dataclass(frozen=True, eq=False)
class ChebyshevReport:
    """Distance, per-row defects and the zero-defect rows ``nc`` (1-based).

    With ``witness`` requested, ``pair_defects[i, j] = max_k delta_ijk`` and,
    per row, ``best_j`` is the smallest column attaining the row defect and
    ``best_k`` the smallest row attaining ``pair_defects[i, best_j]``.
    """

    tnorm: TNormKind
    delta: float
    row_defects: np.ndarray
    nc: tuple[int, ...]
    pair_defects: Optional[np.ndarray] = None
    best_j: Optional[tuple[int, ...]] = None
    best_k: Optional[tuple[int, ...]] = None

    @property
    def consistent(self) -> bool:
        return len(self.nc) == len(self.row_defects)


def chebyshev_report(system: System, eps: float = DEFAULT_EPS, witness: bool = False) -> ChebyshevReport:
    n, m = system.n, system.m
    pair = np.empty((n, m))
    arg_k = np.empty((n, m), dtype=np.intp) if witness else None
    for rows in _row_chunks(system):
        block = _tensor_block(system.tnorm, system.A, system.b, rows)
        pair[rows] = block.max(axis=2)
        if witness:
            arg_k[rows] = block.argmax(axis=2)
    row_defects = pair.min(axis=1)
    nc = tuple(int(i) + 1 for i in np.flatnonzero(row_defects <= eps))
    extra = {}
    if witness:
        best_j = pair.argmin(axis=1)
        best_k = arg_k[np.arange(n), best_j]
        extra = dict(
            pair_defects=pair,
            best_j=tuple(int(j) + 1 for j in best_j),
            best_k=tuple(int(k) + 1 for k in best_k),
        )
    return ChebyshevReport(system.tnorm, float(row_defects.max()), row_defects, nc, **extra)


def apply_F(system: System, c) -> np.ndarray:
    """``F(c) = A o (A^t * c)``: the largest consistent rhs below ``c``."""
    c = np.asarray(c, dtype=float)
    if c.shape != (system.n,):
        raise ValueError(f"c must have length {system.n}, got shape {c.shape}")
    kind = system.tnorm
    return max_t_product(kind, system.A, min_residuum_product(kind, system.A.T, c))


@dataclass(frozen=True, eq=False)
class ApproxResult:
    approx: np.ndarray
    distance: float


def greatest_approximation(system: System, eps: float = DEFAULT_EPS) -> ApproxResult:
    """Greatest consistent right-hand side at Chebyshev distance ``Delta`` from ``b``."""
    delta = chebyshev_report(system, eps).delta
    _, upper = shifted_bounds(system.b, min(max(delta, 0.0), 1.0))
    approx = apply_F(system, upper)
    if not check_consistency(system.with_rhs(approx), eps).consistent:
        raise ApproximationError("F(b + Delta) is not a consistent right-hand side")
    gap = float(np.max(np.abs(approx - system.b)))
    if abs(gap - delta) > eps:
        raise ApproximationError(f"approximation is at distance {gap!r}, expected {delta!r}")
    return ApproxResult(approx, delta)
