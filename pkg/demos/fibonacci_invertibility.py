#!/usr/bin/env python3
"""Fibonacci-coefficient quaternions: norms, closed form, eventual sign.

The norm of the n-th Fibonacci quaternion grows like the golden ratio to
the 2n, scaled by an exact quadratic-field coefficient whose sign decides
whether all late terms are invertible.
"""
from fractions import Fraction

from cdalgebra import (QuaternionParams, energy, fib, fib_norm_direct,
                       fib_norm_formula, fibonacci_quaternion, golden_power,
                       invertibility_threshold)


def main():
    print("Division quaternions (both parameters 1):")
    params = QuaternionParams(1, 1)
    for n in range(6):
        F = fibonacci_quaternion(n, params)
        print(f"  F_{n} = {F}   norm = {F.norm()} = 3 * fib({2 * n + 3})")

    print()
    print("The closed form matches the direct norm for any parameters:")
    for a1, a2 in ((2, 3), (Fraction(-7, 2), Fraction(1, 3)), (-1, -1)):
        p = QuaternionParams(a1, a2)
        for n in (0, 5, 12):
            d, f = fib_norm_direct(n, p), fib_norm_formula(n, p)
            print(f"  alphas=({a1}, {a2}) n={n}: direct {d} formula {f} "
                  f"equal={d == f}")

    print()
    print("Golden-field powers stay exact: a^n = fib(n)*a + fib(n-1)")
    for n in (1, 2, 10, 40):
        print(f"  a^{n} = {golden_power(n)}   (fib({n}) = {fib(n)})")

    print()
    print("The energy coefficient and its exact sign:")
    for a1, a2 in ((1, 1), (-1, -1), (-3, 2), (Fraction(1, 9), Fraction(-8, 3))):
        p = QuaternionParams(a1, a2)
        e = energy(p)
        n0 = invertibility_threshold(p, n_max=200)
        print(f"  alphas=({a1}, {a2}): energy = {e}, sign {e.sign():+d}, "
              f"norms keep that sign from n = {n0}")
        sample = [fib_norm_direct(n, p) for n in range(4)]
        print(f"    first norms: {sample}")


if __name__ == "__main__":
    main()
