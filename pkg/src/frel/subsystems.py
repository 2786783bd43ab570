"""Consistent subsystems of max-T systems.

Index sets are sorted tuples of 1-based row indices. ``subsystem_distance``
works for every t-norm; the incremental enumeration of all consistent
subsystems (and of the maximal ones) is implemented for max-min only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional

import numpy as np

from .algebra import DEFAULT_EPS, System, TNormKind
from .chebyshev import _tensor_block, chebyshev_report, delta_tensor

IndexSet = tuple[int, ...]


class NoSolvableEquation(ValueError):
    """No single equation of the system is solvable on its own."""


class UnsupportedTNorm(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def index_set(members: Iterable[int], n: int) -> IndexSet:
    """Validate and normalize a non-empty set of 1-based row indices."""
    out = tuple(sorted({int(r) for r in members}))
    if not out:
        raise ValueError("index set must be non-empty")
    if out[0] < 1 or out[-1] > n:
        raise IndexError(f"index set {out} is not within 1..{n}")
    return out


def restrict(system: System, R: Iterable[int]) -> System:
    idx = np.array(index_set(R, system.n)) - 1
    return System(system.tnorm, system.A[idx], system.b[idx])


def _distance_from_tensor(D: np.ndarray, idx) -> float:
    sub = D[np.ix_(idx, np.arange(D.shape[1]), idx)]
    return float(sub.max(axis=2).min(axis=1).max())


def subsystem_distance(system: System, R: Iterable[int], tensor: Optional[np.ndarray] = None) -> float:
    """Chebyshev distance ``Delta_R`` of the subsystem on rows ``R``.

    Uses the ``delta_ijk`` of the full system restricted to ``R``; pass a
    precomputed ``delta_tensor(system)`` to avoid recomputing it per call.
    """
    idx = np.array(index_set(R, system.n)) - 1
    if tensor is not None:
        return _distance_from_tensor(tensor, idx)
    block = _tensor_block(system.tnorm, system.A, system.b, idx)[:, :, idx]
    return float(block.max(axis=2).min(axis=1).max())


def singleton_defects(system: System) -> np.ndarray:
    """``min_j (b_i - a_ij)^+`` per row: zero iff the row is solvable alone."""
    return np.maximum(system.b[:, None] - system.A, 0.0).min(axis=1)


@dataclass(frozen=True)
class McsCertificate:
    """``nc`` with its distance and, for each row outside it, ``Delta`` of ``nc + {k}``."""

    nc: IndexSet
    delta_nc: float
    augmented_defects: dict[int, float] = field(default_factory=dict)

    def is_valid(self, eps: float = DEFAULT_EPS) -> bool:
        return self.delta_nc <= eps and all(v > eps for v in self.augmented_defects.values())


def canonical_mcs(system: System, eps: float = DEFAULT_EPS) -> McsCertificate:
    """Canonical maximal consistent subsystem: the rows with zero defect.

    Raises NoSolvableEquation when no row is solvable alone, in which case
    the system has no consistent subsystem at all.
    """
    if not np.any(singleton_defects(system) <= eps):
        raise NoSolvableEquation("no equation of the system is solvable on its own")
    nc = chebyshev_report(system, eps).nc
    D = delta_tensor(system)
    delta_nc = subsystem_distance(system, nc, D)
    augmented = {
        k: subsystem_distance(system, nc + (k,), D)
        for k in range(1, system.n + 1)
        if k not in nc
    }
    return McsCertificate(nc, delta_nc, augmented)


def _require_min(system: System):
    if system.tnorm is not TNormKind.MIN:
        raise UnsupportedTNorm(
            f"enumeration of consistent subsystems is only available for max-min systems, "
            f"got {system.tnorm.value!r}"
        )


def _appended_row_defect(D: np.ndarray, R, k: int) -> float:
    # min_j max_{k' in R + {k}} delta_{k j k'}; 0-based positions into D
    cols = D[k][:, list(R) + [k]]
    return float(cols.max(axis=1).min())


def incremental_row_delta(
    system: System,
    R: Iterable[int],
    k: int,
    eps: float = DEFAULT_EPS,
    tensor: Optional[np.ndarray] = None,
) -> float:
    """Defect of the appended row ``k`` in the max-min subsystem ``R + {k}``.

    Every row of ``R`` must come before ``k`` in the stable ascending order
    of ``b`` and ``R`` must be consistent; then the rows of ``R`` keep a zero
    defect and ``R + {k}`` is consistent iff the returned value is zero.
    """
    _require_min(system)
    R = index_set(R, system.n)
    if not 1 <= k <= system.n:
        raise IndexError(f"k = {k} is out of range 1..{system.n}")
    if k in R:
        raise PreconditionError(f"row {k} already belongs to {R}")
    b = system.b
    late = [r for r in R if (b[r - 1], r) > (b[k - 1], k)]
    if late:
        raise PreconditionError(f"rows {late} do not precede row {k} in ascending order of b")
    D = delta_tensor(system) if tensor is None else tensor
    if subsystem_distance(system, R, D) > eps:
        raise PreconditionError(f"subsystem {R} is not consistent")
    return _appended_row_defect(D, [r - 1 for r in R], k - 1)


@dataclass(frozen=True)
class ConsistentFamily:
    """All consistent subsystems of a max-min system, as original 1-based index sets.

    ``sets`` keeps construction order (by stage, then by parent). ``permutation``
    lists, for each position of the ascending-``b`` working order, the original
    row index; rows unsolvable on their own are in ``excluded`` and take no
    part in any member.
    """

    sets: tuple[IndexSet, ...]
    permutation: tuple[int, ...]
    excluded: IndexSet
    stage: int

    def __iter__(self) -> Iterator[IndexSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, R) -> bool:
        return tuple(sorted(R)) in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.sets)

    def as_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(R) for R in self.sets)

    def sorted_sets(self) -> list[IndexSet]:
        """Members ordered by size, then lexicographically."""
        return sorted(self.sets, key=lambda R: (len(R), R))

    def maximal(self) -> list[IndexSet]:
        """Inclusion-maximal members, sorted lexicographically."""
        members = self._members
        rows = set(self.permutation)
        out = []
        for R in self.sets:
            rest = rows.difference(R)
            if not any(tuple(sorted(R + (t,))) in members for t in rest):
                out.append(R)
        return sorted(out)


@dataclass
class _Enumeration:
    working: list[int]  # 0-based original rows, ascending b
    excluded: list[int]  # 0-based original rows
    D: np.ndarray  # tensor of the working subsystem, indexed by positions
    family: dict  # position tuples, insertion ordered


def _enumerate_positions(system: System, eps: float) -> _Enumeration:
    _require_min(system)
    order = [int(i) for i in np.argsort(system.b, kind="stable")]
    solo = singleton_defects(system)
    excluded = sorted(i for i in order if solo[i] > eps)
    working = [i for i in order if solo[i] <= eps]
    family: dict[tuple[int, ...], None] = {}
    if not working:
        return _Enumeration(working, excluded, np.empty((0, system.m, 0)), family)
    D = delta_tensor(System(system.tnorm, system.A[working], system.b[working]))
    family[(0,)] = None
    for s in range(1, len(working)):
        grown = [R + (s,) for R in family if _appended_row_defect(D, R, s) <= eps]
        family[(s,)] = None
        for R in grown:
            family[R] = None
    return _Enumeration(working, excluded, D, family)


def enumerate_consistent_maxmin(system: System, eps: float = DEFAULT_EPS) -> ConsistentFamily:
    """Every consistent subsystem of a max-min system, built stage by stage.

    Rows are taken in ascending order of ``b``; the family for the first
    ``s + 1`` rows is the family for the first ``s`` rows, the new singleton,
    and each earlier member extended by the new row when the new row's
    defect in the extension is zero.
    """
    run = _enumerate_positions(system, eps)
    sets = tuple(tuple(sorted(run.working[p] + 1 for p in R)) for R in run.family)
    return ConsistentFamily(
        sets=sets,
        permutation=tuple(i + 1 for i in run.working),
        excluded=tuple(i + 1 for i in run.excluded),
        stage=len(run.working),
    )


def _maximal_by_augmentation(run: _Enumeration, eps: float) -> list[tuple[int, ...]]:
    w = len(run.working)
    out = []
    for R in run.family:
        s = R[-1]
        # maximal within the first s + 1 rows: no earlier row extends it
        if any(tuple(sorted(R + (t,))) in run.family for t in range(s) if t not in R):
            continue
        if all(_appended_row_defect(run.D, R, k) > eps for k in range(s + 1, w)):
            out.append(R)
    return out


def maximal_consistent_maxmin(
    system: System, eps: float = DEFAULT_EPS, route: str = "inclusion"
) -> list[IndexSet]:
    """Maximal consistent subsystems of a max-min system, sorted lexicographically.

    ``route="inclusion"`` filters the full family for inclusion-maximal sets;
    ``route="augmentation"`` keeps the sets that are maximal at their own
    stage and cannot absorb any later row. Both give the same answer.
    """
    if route == "inclusion":
        return enumerate_consistent_maxmin(system, eps).maximal()
    if route != "augmentation":
        raise ValueError(f"unknown route {route!r}")
    run = _enumerate_positions(system, eps)
    found = _maximal_by_augmentation(run, eps)
    return sorted(tuple(sorted(run.working[p] + 1 for p in R)) for R in found)
