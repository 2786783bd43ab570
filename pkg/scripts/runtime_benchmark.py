"""Time the analytic distance and the two enumeration routes on random systems."""
import argparse
import time

from frel import (
    OracleConfig,
    TNormKind,
    chebyshev_report,
    enumerate_consistent_maxmin,
    oracle_enumerate,
    random_system,
)


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--sizes", type=int, nargs="*", default=[25, 50, 100, 200])
    p.add_argument("--enum-n", type=int, nargs="*", default=[8, 10, 12, 14])
    p.add_argument("--seed", type=int, default=7)
    args = p.parse_args()

    print("chebyshev_report on n x n systems")
    for n in args.sizes:
        for kind in TNormKind:
            _, dt = timed(chebyshev_report, random_system(args.seed, n, n, kind))
            print(f"  n={n:4d} {kind.value:12s} {dt * 1e3:9.2f} ms")

    print("consistent-subsystem enumeration, max-min, m=4")
    cfg = OracleConfig(max_exhaustive_n=20)
    for n in args.enum_n:
        S = random_system(args.seed, n, 4, TNormKind.MIN, 0.05)
        fast, t_fast = timed(enumerate_consistent_maxmin, S)
        slow, t_slow = timed(oracle_enumerate, S, cfg)
        same = fast.as_set() == slow.as_set()
        print(f"  n={n:3d} |family|={len(fast):5d} incremental {t_fast * 1e3:8.2f} ms"
              f"  exhaustive {t_slow * 1e3:9.2f} ms  agree={same}")


if __name__ == "__main__":
    main()
