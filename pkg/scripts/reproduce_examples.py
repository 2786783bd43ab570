"""Print every worked example: consistency, distances, N_c, approximations, subsystem families."""
import numpy as np

from frel import (
    System,
    TNormKind,
    canonical_mcs,
    chebyshev_report,
    check_consistency,
    enumerate_consistent_maxmin,
    greatest_approximation,
    maximal_consistent_maxmin,
    oracle_distance_bisection,
)

A1 = [[1, 0.4, 0.5, 0.7], [0.7, 0.5, 0.3, 0.5], [0.2, 1, 1, 0.6], [0.4, 0.5, 0.5, 0.8]]
B1 = [0.8, 0.7, 0.4, 0.4]
A5 = [[0.98, 0.02, 0.10], [0.80, 0.31, 0.18], [0.78, 0.38, 0.26], [0.77, 0.20, 0.85]]
B5 = [0.13, 0.28, 0.54, 0.70]

np.set_printoptions(precision=6, suppress=True)


def fmt(R):
    return "{" + ",".join(map(str, R)) + "}"


def main():
    for kind in TNormKind:
        S = System(kind, A1, B1)
        res = check_consistency(S)
        rep = chebyshev_report(S)
        approx = greatest_approximation(S)
        print(f"[example 1, {kind.value}]")
        print(f"  consistent={res.consistent}  e={res.e}  A o e={res.image}")
        print(f"  Delta={rep.delta:.10g}  (bisection {oracle_distance_bisection(S):.10g})")
        print(f"  row defects={rep.row_defects}  N_c={fmt(rep.nc)}")
        print(f"  F(b + Delta)={approx.approx}")
        cert = canonical_mcs(S)
        extra = ", ".join(f"{k}: {v:.6g}" for k, v in cert.augmented_defects.items()) or "-"
        print(f"  canonical maximal subsystem {fmt(cert.nc)}; augmented distances {extra}")
    S5 = System(TNormKind.MIN, A5, B5)
    fam = enumerate_consistent_maxmin(S5)
    print("[example 5, min]")
    for s in range(1, fam.stage + 1):
        stage = [R for R in fam.sorted_sets() if max(R) <= s]
        print(f"  E^{s} = " + ", ".join(fmt(R) for R in stage))
    print("  maximal: " + ", ".join(fmt(R) for R in maximal_consistent_maxmin(S5)))


if __name__ == "__main__":
    main()
