"""The unpointed genus-2 series < >_2 for small n.

Checks the constant term against the lambda_1^3 / lambda_1 lambda_2 oracle,
reconstructs the rational form and tests the palindromic symmetry
P(q) = q^{deg} P(1/q) of the numerator.

Run:  python3 scripts/genus2_unpointed.py --max-n 2 --q-order 8
"""

import argparse

from hilbgw.assembly import degree0_oracle, reconstruct_invariant
from hilbgw.crepant import crepant_substitute
from hilbgw.rmatrix import compute_R
from hilbgw.series import ReconstructionError, rational_reconstruct


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=2)
    parser.add_argument("--q-order", type=int, default=8)
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        R = compute_R(n, 5, args.q_order)
        series = reconstruct_invariant(2, [], R).series
        oracle = degree0_oracle(2, None, n)
        print(f"n={n}: degree 0 {series.coeffs[0]}   oracle agrees: {series.coeffs[0] == oracle}")
        try:
            rational = rational_reconstruct(series, (args.q_order - 2) // 2)
        except ReconstructionError as exc:
            print(f"  {exc}")
            continue
        num = rational.num.coeffs
        print(f"  rational form {rational}")
        print(f"  palindromic numerator: {num == num[::-1]}")
        report = crepant_substitute(rational, 4, 2, [], n)
        if report.pole_at_minus_one:
            print("  pole at q = -1")
        else:
            print("  u-expansion at q = -e^{iu}:")
            for k, c in enumerate(report.u_expansion):
                print(f"    u^{k}: {c}")


if __name__ == "__main__":
    main()
