"""Independent checks for the analytic routines.

* ``oracle_distance_bisection`` finds the Chebyshev distance as the least
  ``delta`` with ``(b - delta)^+ <= F(min(b + delta, 1))``, a predicate that
  is monotone in ``delta``.
* ``oracle_enumerate`` runs the greatest-solution test on every subset.
* ``random_system`` draws reproducible grid-valued systems.

Random systems
--------------
Draw number ``t = 0, 1, 2, ...`` for seed ``s`` is ``splitmix64(s + (t + 1) * G)``
(all arithmetic mod 2**64, ``G = 0x9E3779B97F4A7C15``) where ``splitmix64`` is
the finalizer::

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z = z ^ (z >> 31)

With ``K = floor(1 / step)`` the grid is ``{0, step, ..., K * step}`` plus
``1`` when ``K * step < 1``; draw ``t`` picks grid point ``draw mod len(grid)``.
Point ``k`` is ``round(k * step, 12)``. Entries are drawn for ``A`` in
row-major order, then for ``b``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_EPS, System, TNormKind, check_consistency, shifted_bounds
from .chebyshev import apply_F
from .subsystems import ConsistentFamily, restrict, singleton_defects

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
MAX_EXHAUSTIVE_N = 20


@dataclass(frozen=True)
class OracleConfig:
    tolerance: float = 1e-9
    max_exhaustive_n: int = 16
    seed: int = 0
    max_iter: int = 60

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 1 <= self.max_exhaustive_n <= MAX_EXHAUSTIVE_N:
            raise ValueError(f"max_exhaustive_n must be within 1..{MAX_EXHAUSTIVE_N}")


def bisection_predicate(system: System, delta: float) -> bool:
    lower, upper = shifted_bounds(system.b, delta)
    return bool(np.all(lower <= apply_F(system, upper)))


def oracle_distance_bisection(system: System, cfg: OracleConfig = OracleConfig()) -> float:
    if bisection_predicate(system, 0.0):
        return 0.0
    lo, hi = 0.0, 1.0
    for _ in range(cfg.max_iter):
        if hi - lo < cfg.tolerance:
            break
        mid = (lo + hi) / 2
        if bisection_predicate(system, mid):
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def oracle_enumerate(
    system: System, cfg: OracleConfig = OracleConfig(), eps: float = DEFAULT_EPS
) -> ConsistentFamily:
    """Brute force: keep every non-empty row subset whose subsystem is consistent."""
    n = system.n
    if n > cfg.max_exhaustive_n:
        raise ValueError(f"n = {n} exceeds the exhaustive enumeration cap {cfg.max_exhaustive_n}")
    rows = range(1, n + 1)
    found = []
    for size in rows:
        for R in itertools.combinations(rows, size):
            if check_consistency(restrict(system, R), eps).consistent:
                found.append(R)
    solo = singleton_defects(system)
    return ConsistentFamily(
        sets=tuple(found),
        permutation=tuple(rows),
        excluded=tuple(i + 1 for i in range(n) if solo[i] > eps),
        stage=n,
    )


def splitmix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def grid_points(step: float) -> list[float]:
    if not 0 < step <= 0.5:
        raise ValueError(f"grid step must lie in (0, 0.5], got {step!r}")
    K = int(np.floor(1 / step + 1e-9))
    pts = [round(k * step, 12) for k in range(K + 1)]
    if pts[-1] < 1:
        pts.append(1.0)
    return [min(p, 1.0) for p in pts]


def random_draws(seed: int, count: int) -> list[int]:
    base = seed & _MASK
    return [splitmix64(base + (t + 1) * _GOLDEN) for t in range(count)]


def random_system(
    seed: int, n: int, m: int, kind: TNormKind = TNormKind.MIN, grid_step: float = 0.05
) -> System:
    if n < 1 or m < 1:
        raise ValueError("n and m must be at least 1")
    pts = grid_points(grid_step)
    vals = [pts[d % len(pts)] for d in random_draws(seed, n * m + n)]
    A = np.array(vals[: n * m]).reshape(n, m)
    b = np.array(vals[n * m :])
    return System(kind, A, b)
