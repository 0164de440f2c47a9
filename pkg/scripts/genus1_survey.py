"""Survey of genus-1 one-point series <mu>_1 for all partitions of n.

For each mu the graph-sum series is reconstructed as a rational function of q.
The denominators are printed so poles at roots of unity (and whether q = -1 is
among them) can be read off.  The degree-0 term is compared with the Hodge
oracle as a check on every run.

Run:  python3 scripts/genus1_survey.py --n 3 --q-order 14
"""

import argparse
import time

from hilbgw.assembly import CohFTData, degree0_oracle, reconstruct_invariant
from hilbgw.partitions import enumerate_partitions
from hilbgw.rmatrix import compute_R
from hilbgw.series import ReconstructionError, rational_reconstruct


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--q-order", type=int, default=14)
    args = parser.parse_args()

    start = time.perf_counter()
    # a genus-1 one-point graph sum only uses R through z^2
    R = compute_R(args.n, 2, args.q_order)
    data = CohFTData(R)
    max_deg = (args.q_order - 2) // 2
    for mu in enumerate_partitions(args.n):
        series = reconstruct_invariant(1, [mu], R, data).series
        assert series.coeffs[0] == degree0_oracle(1, mu, args.n)
        try:
            rational = rational_reconstruct(series, max_deg)
        except ReconstructionError as exc:
            print(f"{list(mu)}: {exc}")
            continue
        den = rational.den
        print(f"{list(mu)}:")
        print(f"  numerator   {rational.num}")
        print(f"  denominator {den}   (vanishes at q=-1: {not den(-1)})")
    print(f"done in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
