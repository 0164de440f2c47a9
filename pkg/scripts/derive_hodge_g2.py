"""Derive the Hodge integrals used by the degree-0 oracle and write data/hodge.json.

Mumford's GRR formula expresses ch(E) through kappa, psi and boundary classes,
so every number below comes out of the DVV recursion:

  lambda_1 on Mbar_{1,1}              = ch_1
  lambda_1^3 on Mbar_2                = -12 ch_3        (lambda_1^2 = 2 lambda_2, lambda_3 = 0)
  lambda_1 lambda_2 on Mbar_2         = lambda_1^3 / 2

Run:  python3 scripts/derive_hodge_g2.py [--check]
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from hilbgw.intersection import derive_hodge_table, hodge_table_to_json, mumford_ch_integral

FIXTURE = Path(__file__).resolve().parent.parent / "src" / "hilbgw" / "data" / "hodge.json"

# textbook values, used only as a sanity print
KNOWN = {
    (1, "lambda1"): Fraction(1, 24),
    (2, "lambda1^3"): Fraction(1, 2880),
    (2, "lambda1*lambda2"): Fraction(1, 5760),
}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--check", action="store_true", help="compare with the shipped fixture, do not write")
    args = parser.parse_args()

    print(f"ch_1 on Mbar_(1,1): {mumford_ch_integral(1)}")
    print(f"ch_3 on Mbar_2:     {mumford_ch_integral(2)}")
    table = derive_hodge_table()
    for key, value in sorted(table.items()):
        print(f"  g={key[0]} {key[1]:<16} {value}   (literature {KNOWN[key]})")
    payload = json.dumps(hodge_table_to_json(table), indent=1, sort_keys=True) + "\n"
    if args.check:
        same = json.loads(FIXTURE.read_text()) == json.loads(payload)
        print("fixture up to date" if same else "fixture differs")
        return 0 if same else 1
    FIXTURE.write_text(payload)
    print(f"wrote {FIXTURE}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
