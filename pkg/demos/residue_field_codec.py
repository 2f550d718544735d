#!/usr/bin/env python3
"""A 13-element residue field inside the integer quaternions, used as a code.

One integer element w = 1 + e1 + e2 + e3 generates a commutative subring;
modulo the prime -1 + 2w (norm 13) its classes form a field whose
minimal-norm representatives carry mod-13 symbols.
"""
import random

from cdalgebra import (decode_symbols, encode_symbols, four_square_root,
                       is_prime_u, make_w, residue_field, u_mod)


def main():
    gen = make_w(2, (1, 2, 3), (1, 1, 1, 1))
    print(f"generator w with trace {gen.q} and norm {gen.m}; "
          f"w*w - {gen.q}*w + {gen.m} = 0")
    pi = gen.element(-1, 2)
    print(f"pi = {pi}, norm {pi.norm()}, prime: {is_prime_u(pi)}")

    field = residue_field(pi)
    print(f"labelling congruence root s = {field.s}")
    print("label table (symbol -> representative, norm):")
    for k, u in enumerate(field.reps):
        print(f"  {k:2d} -> {str(u):>5}   norm {u.norm()}")

    print()
    print("reduction brings big elements down below the prime's norm:")
    x = gen.element(3, 2)
    print(f"  {x} mod pi = {u_mod(x, pi)} (norm {u_mod(x, pi).norm()})")

    print()
    print("the labelling respects both operations, so symbols add and")
    print("multiply as integers mod 13:")
    i, j = 4, 7
    y_sum = u_mod(field.reps[i] + field.reps[j], pi)
    y_mul = u_mod(field.reps[i] * field.reps[j], pi)
    print(f"  {i} + {j} -> {field.label(y_sum)} (mod 13: {(i + j) % 13})")
    print(f"  {i} * {j} -> {field.label(y_mul)} (mod 13: {(i * j) % 13})")

    print()
    rng = random.Random(99)
    message = [rng.randrange(13) for _ in range(12)]
    points = encode_symbols(message, field)
    noisy = [u + gen.element(rng.randint(-3, 3), rng.randint(-3, 3)) * pi
             for u in points]
    decoded = decode_symbols(noisy, field)
    print("toy codec round trip, with additive multiples of pi as noise:")
    print("  message:", message)
    print("  points: ", [str(u) for u in points])
    print("  decoded:", decoded)
    print("  intact: ", decoded == message)

    print()
    print("any positive integer appears as the constant term of a quadratic")
    print("solved by an integer element (four-square decompositions):")
    for m in (1, 7, 30, 50):
        z = four_square_root(m, (1, 2, 3), 2)
        print(f"  m={m:2d}: z = {z}, trace {z.trace()}")


if __name__ == "__main__":
    main()
