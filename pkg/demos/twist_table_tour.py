#!/usr/bin/env python3
"""Structure-constant tables, their 2x2 tile alphabet, and the row claims.

Prints a small sign table, partitions a bigger one into tiles, and runs
the oracle over the published 2x2 product-table claim for rows indexed
by powers of two.
"""
from cdalgebra import (BlockKind, Convention, build_table, partition_blocks,
                       sweep_power_row_claims, shuffle_string, twist_sign)
from cdalgebra.twist import power_row_operands


def main():
    print("Octonion sign table (left-conjugating convention, parameters all -1)")
    table = build_table(3, Convention.CONJUGATE_LEFT)
    signs = table.sign_table()
    for p in range(8):
        print("  " + " ".join(f"{signs[p, q]:+d}" for q in range(8)))

    print()
    print("Every structure coefficient is a signed parameter monomial:")
    coeff = table.entry(5, 6)
    print(f"  entry (5, 6): sign {coeff.sign:+d}, stage mask "
          f"{coeff.gamma_mask:0{table.t}b}, product index {5 ^ 6}")

    print()
    print("Tile partition at depth 4 (tree order):")
    kinds = partition_blocks(build_table(4, Convention.CONJUGATE_LEFT))
    for row in kinds:
        print("  " + " ".join(f"{BlockKind(k).label():>3}" for k in row))
    print("Depth 8 has 16384 tiles; they all classify too:",
          partition_blocks(build_table(8, Convention.CONJUGATE_LEFT)).size)

    print()
    print("Pointwise signs need no table, any depth:")
    print("  sign(100, 200) at depth 10 =", twist_sign(100, 200, 10))

    print()
    print("Walk string for the power-of-two row claim (r=1, k=3, i=4, t=5):")
    row, col = power_row_operands(1, 3, 4, 5)
    print(f"  operands {row} and {col} shuffle to: {shuffle_string(row, col, 5)}")

    print()
    print("Oracle verdicts over all admissible (r, k, i) at depth 5:")
    for report in sweep_power_row_claims(5):
        print("  " + report.summary())


if __name__ == "__main__":
    main()
