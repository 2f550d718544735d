#!/usr/bin/env python3
"""Tour of exact doubling-algebra arithmetic.

Builds the classical quaternions, octonions and sedenions, then shows
what survives each doubling: involution and norm laws everywhere,
associativity lost at dimension 8, multiplicative norms lost at 16.
"""
from fractions import Fraction

from cdalgebra import (make_algebra, octonions, quadratic_check, quaternions,
                       sedenions, Convention)


def section(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    section("Quaternions (depth 2, parameters -1, -1)")
    H = quaternions()
    i, j, k = H.basis(1), H.basis(2), H.basis(3)
    print("i * j =", i * j)
    print("j * i =", j * i)
    print("i * i =", i * i)

    x = H.element([1, 2, -3, Fraction(1, 2)])
    print("x =", x)
    print("conjugate(x) =", x.conjugate())
    print("trace(x) =", x.trace(), " norm(x) =", x.norm())
    print("x * x^-1 =", x * x.inverse())
    print("quadratic identity holds:", quadratic_check(x))

    section("Conventions differ elementwise")
    H_left = quaternions(Convention.CONJUGATE_LEFT)
    print("right-conjugating product: e1 e2 =", H.basis(1) * H.basis(2))
    print("left-conjugating product:  e1 e2 =", H_left.basis(1) * H_left.basis(2))

    section("Octonions: associativity fails, flexibility survives")
    O = octonions()
    a, b, c = O.basis(1), O.basis(2), O.basis(4)
    print("(a b) c =", (a * b) * c)
    print("a (b c) =", a * (b * c))
    x = O.element([1, 0, 2, 0, -1, 0, 0, 3])
    y = O.element([0, 1, 1, 0, 0, -2, 1, 0])
    print("flexible: x(yx) == (xy)x:", x * (y * x) == (x * y) * x)

    section("Sedenions: zero divisors appear")
    S = sedenions()
    x = S.basis(3) + S.basis(10)
    y = S.basis(6) - S.basis(15)
    print("x =", x)
    print("y =", y)
    print("x * y =", x * y)
    print("norm(x) =", x.norm(), " norm(y) =", y.norm(),
          " norm(x*y) =", (x * y).norm())
    print("so the norm is no longer multiplicative at dimension 16")

    section("General parameters stay exact")
    A = make_algebra(3, [Fraction(2, 3), -5, Fraction(1, 7)])
    e5 = A.basis(5)
    print("with parameters (2/3, -5, 1/7): e5 * e5 =", e5 * e5)


if __name__ == "__main__":
    main()
