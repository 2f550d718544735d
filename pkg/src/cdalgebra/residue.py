"""Integer subrings of the doubling algebras and residue-field labelling.

A single integer element w with nonzero norm generates a commutative
subring of elements a + b*w.  Modulo a prime of that subring, the classes
form a field of prime size whose minimal-norm representatives serve as a
signal constellation; the labelling map carries mod-p symbols onto it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, List, Sequence, Tuple

from .algebra import AlgebraSignature, Convention, Element

logger = logging.getLogger(__name__)


def integer_signature(t: int) -> AlgebraSignature:
    """All-(-1) doubling algebra of depth t, the home of integer elements."""
    return AlgebraSignature(t, (-1,) * t, Convention.CONJUGATE_RIGHT)


def round_half_away(x: Fraction) -> int:
    """Nearest integer, ties away from zero."""
    if x < 0:
        return -round_half_away(-x)
    floor, rem = divmod(x.numerator, x.denominator)
    return floor + (1 if 2 * rem >= x.denominator else 0)


def round_coordinates(x: Element) -> Element:
    """Round each coefficient separately, ties away from zero.

    Coordinate-wise rounding utility for full integer lattices; the
    subring reduction below works in (1, w) coordinates instead.
    """
    return x.signature.element(tuple(round_half_away(Fraction(c)) for c in x.coeffs))


class WGenerator:
    """Integer element w with its quadratic data: trace q and norm m.

    w satisfies w*w - q*w + m = 0, which is all the subring arithmetic
    needs; m must be nonzero.
    """

    __slots__ = ("w", "q", "m")

    def __init__(self, w: Element):
        q = w.trace()
        m = w.norm()
        if not all(isinstance(c, int) for c in w.coeffs):
            raise ValueError("generator must have integer coefficients")
        if m == 0:
            raise ValueError("generator has norm zero and spans no quadratic ring")
        check = w * w - q * w + m * w.signature.one()
        if not check.is_zero():
            raise ArithmeticError("generator fails its own quadratic relation")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("WGenerator is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, WGenerator):
            return NotImplemented
        return self.w == other.w

    def __hash__(self) -> int:
        return hash(self.w)

    def element(self, a: int, b: int) -> UElement:
        return UElement(a, b, self)

    def is_definite(self) -> bool:
        """Whether the norm form a*a + q*a*b + m*b*b is positive definite."""
        return 4 * self.m > self.q * self.q

    def __repr__(self) -> str:
        return f"WGenerator(w={self.w!r}, q={self.q}, m={self.m})"


def make_w(t: int, basis_choice: Sequence[int], coeffs: Sequence[int]) -> WGenerator:
    """Generator a1 + a2*e_i + a3*e_j + a4*e_k in the depth-t integer algebra."""
    if len(basis_choice) != 3 or len(set(basis_choice)) != 3:
        raise ValueError("basis_choice must be three distinct indices")
    if any(i < 1 for i in basis_choice):
        raise ValueError("basis indices must be >= 1")
    if len(coeffs) != 4:
        raise ValueError("expected four integer coefficients")
    sig = integer_signature(t)
    vec = [0] * sig.dimension
    vec[0] = coeffs[0]
    for idx, c in zip(basis_choice, coeffs[1:]):
        if idx >= sig.dimension:
            raise ValueError(f"basis index {idx} out of range for depth {t}")
        vec[idx] += c
    return WGenerator(sig.element(vec))


class UElement:
    """Element a + b*w of the subring generated by one integer element.

    Arithmetic reduces through w*w = q*w - m, so the ring is commutative
    and associative regardless of the ambient algebra's depth.
    """

    __slots__ = ("a", "b", "gen")

    def __init__(self, a: int, b: int, gen: WGenerator):
        if not isinstance(a, int) or not isinstance(b, int):
            raise TypeError("subring coordinates must be integers")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "gen", gen)

    def __setattr__(self, name, value):
        raise AttributeError("UElement is immutable")

    def _check(self, other: UElement) -> None:
        if self.gen != other.gen:
            raise ValueError("elements belong to different subrings")

    def __add__(self, other) -> UElement:
        other = self._coerce(other)
        self._check(other)
        return UElement(self.a + other.a, self.b + other.b, self.gen)

    __radd__ = __add__

    def __sub__(self, other) -> UElement:
        other = self._coerce(other)
        self._check(other)
        return UElement(self.a - other.a, self.b - other.b, self.gen)

    def __rsub__(self, other) -> UElement:
        return self._coerce(other) - self

    def __neg__(self) -> UElement:
        return UElement(-self.a, -self.b, self.gen)

    def __mul__(self, other) -> UElement:
        if isinstance(other, int):
            return UElement(self.a * other, self.b * other, self.gen)
        self._check(other)
        q, m = self.gen.q, self.gen.m
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return UElement(a1 * a2 - m * b1 * b2,
                        a1 * b2 + a2 * b1 + q * b1 * b2, self.gen)

    def __rmul__(self, other) -> UElement:
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def _coerce(self, x) -> UElement:
        if isinstance(x, UElement):
            return x
        if isinstance(x, int):
            return UElement(x, 0, self.gen)
        raise TypeError(f"cannot combine UElement with {type(x).__name__}")

    def __eq__(self, other) -> bool:
        if isinstance(other, UElement):
            return self.gen == other.gen and self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.gen))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conjugate(self) -> UElement:
        return UElement(self.a + self.b * self.gen.q, -self.b, self.gen)

    def norm(self) -> int:
        q, m = self.gen.q, self.gen.m
        return self.a * self.a + q * self.a * self.b + m * self.b * self.b

    def to_element(self) -> Element:
        """Embed back into the ambient algebra."""
        one = self.gen.w.signature.one()
        return self.a * one + self.b * self.gen.w

    def __repr__(self) -> str:
        return f"UElement({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        w_part = "w" if self.b == 1 else ("-w" if self.b == -1 else f"{self.b}*w")
        if self.a == 0:
            return w_part
        return f"{self.a}{'+' if self.b > 0 else ''}{w_part}".replace("+-", "-")


def is_prime_u(x: UElement) -> bool:
    """Norm-primality certificate for subring primes.

    A prime of the subring has prime integer norm; the converse is the
    sufficient condition used for every construction here, so composite
    norms simply report False.
    """
    from sympy import isprime

    return bool(isprime(x.norm()))


def u_mod(x: UElement, y: UElement) -> UElement:
    """Remainder of x modulo y, aiming for norm below the norm of y.

    The exact quotient x * conj(y) / norm(y) is rounded coordinatewise,
    ties away from zero.  When the rounded quotient misses the norm
    bound, the eight neighboring integer quotients are searched and the
    minimal-norm remainder wins; that fallback is logged.

    The strict bound norm(v) < norm(y) is guaranteed when the
    generator's form has 4*m - q*q < 12, and on the boundary value 12
    whenever norm(y) is odd.  At discriminant 12 with even norm(y) a
    residue class can sit exactly on a lattice deep hole where its
    minimal norm equals norm(y); the minimum is still returned.
    """
    if y.is_zero():
        raise ZeroDivisionError("modulus is zero")
    x._check(y)
    n = y.norm()
    if n == 0:
        raise ValueError("modulus has norm zero")
    prod = x * y.conjugate()
    za = round_half_away(Fraction(prod.a, n))
    zb = round_half_away(Fraction(prod.b, n))
    best = x - y.gen.element(za, zb) * y
    if abs(best.norm()) < abs(n):
        return best
    logger.debug("nearest rounding missed the norm bound for %s mod %s; "
                 "searching neighbor quotients", x, y)
    for da in (-1, 0, 1):
        for db in (-1, 0, 1):
            if da == 0 and db == 0:
                continue
            cand = x - y.gen.element(za + da, zb + db) * y
            if abs(cand.norm()) < abs(best.norm()):
                best = cand
    return best


def four_square_root(m: int, target_indices: Sequence[int], t: int) -> Element:
    """Integer element solving x*x - 2*a1*x + m = 0 in the depth-t algebra.

    Finds the lexicographically smallest (a1, a2, a3, a4) of nonnegative
    integers with a1^2 + a2^2 + a3^2 + a4^2 = m (one always exists) and
    places the last three on the chosen basis indices.
    """
    if m < 1:
        raise ValueError("target must be a positive integer")
    quad = _four_square_decomposition(m)
    sig = integer_signature(t)
    if len(target_indices) != 3 or len(set(target_indices)) != 3:
        raise ValueError("target_indices must be three distinct indices")
    vec = [0] * sig.dimension
    vec[0] = quad[0]
    for idx, c in zip(target_indices, quad[1:]):
        if not 1 <= idx < sig.dimension:
            raise ValueError(f"basis index {idx} out of range for depth {t}")
        vec[idx] += c
    return sig.element(vec)


def _four_square_decomposition(m: int) -> Tuple[int, int, int, int]:
    for a1 in range(isqrt(m) + 1):
        r1 = m - a1 * a1
        for a2 in range(isqrt(r1) + 1):
            r2 = r1 - a2 * a2
            for a3 in range(isqrt(r2) + 1):
                r3 = r2 - a3 * a3
                a4 = isqrt(r3)
                if a4 * a4 == r3:
                    return a1, a2, a3, a4
    raise AssertionError("unreachable: every natural number is a sum of four squares")


@dataclass(frozen=True)
class ResidueField:
    """The p classes modulo a subring prime, with their labelling.

    ``reps[k]`` is the minimal-norm representative labelled k; ``s`` is
    the root of the labelling congruence, so the label of a + b*w is
    (a + b*s) mod p for any subring element, not just representatives.
    """

    pi: UElement
    p: int
    s: int
    reps: Tuple[UElement, ...]

    @property
    def gen(self) -> WGenerator:
        return self.pi.gen

    def label(self, u: UElement) -> int:
        if u.gen != self.gen:
            raise ValueError("element belongs to a different subring")
        return (u.a + u.b * self.s) % self.p

    def unlabel(self, k: int) -> UElement:
        if not 0 <= k < self.p:
            raise ValueError(f"symbol {k} out of range for field size {self.p}")
        return self.reps[k]

    def reduce(self, u: UElement) -> UElement:
        """Canonical representative of u's class."""
        return self.reps[self.label(u)]


def residue_field(pi: UElement, verify: bool = True) -> ResidueField:
    """Construct the residue field modulo a norm-prime subring element.

    Solves the labelling congruence a + b*s = 0 (mod p), then picks for
    every class the representative of minimal norm; ties prefer a
    nonnegative w-coordinate, then the lexicographically smallest
    (b, a).  With ``verify`` the field axioms are checked exhaustively,
    which costs O(p^2) small-integer operations.
    """
    p = pi.norm()
    if not is_prime_u(pi):
        raise ValueError(f"modulus norm {p} is not prime")
    if not pi.gen.is_definite():
        raise ValueError("generator norm form must be positive definite")
    if pi.b % p == 0:
        raise ValueError("labelling congruence is degenerate for this prime")
    s = (-pi.a * pow(pi.b, -1, p)) % p
    reps = [None] * p
    for b, a in _points_with_norm_below(pi.gen, p):
        k = (a + b * s) % p
        cand = (a * a + pi.gen.q * a * b + pi.gen.m * b * b, b < 0, b, a)
        if reps[k] is None or cand < reps[k][0]:
            reps[k] = (cand, UElement(a, b, pi.gen))
    missing = [k for k in range(p) if reps[k] is None]
    if missing:
        raise ArithmeticError(f"classes without small representatives: {missing}")
    field = ResidueField(pi=pi, p=p, s=s,
                         reps=tuple(entry[1] for entry in reps))
    if verify:
        _verify_field(field)
    return field


def _points_with_norm_below(gen: WGenerator, bound: int) -> Iterable[Tuple[int, int]]:
    """All (b, a) with a*a + q*a*b + m*b*b < bound, for a definite form."""
    q, m = gen.q, gen.m
    disc = 4 * m - q * q
    b_max = isqrt((4 * bound) // disc)
    for b in range(-b_max, b_max + 1):
        rest = 4 * bound - disc * b * b
        if rest <= 0:
            continue
        r = isqrt(rest - 1)  # (2a + qb)^2 <= 4*norm < 4*bound
        lo = -(q * b + r)
        hi = r - q * b
        for twice_a in range(lo, hi + 1):
            if twice_a % 2:
                continue
            a = twice_a // 2
            if a * a + q * a * b + m * b * b < bound:
                yield b, a


def _verify_field(field: ResidueField) -> None:
    p, reps = field.p, field.reps
    if len({(u.a, u.b) for u in reps}) != p:
        raise ArithmeticError("representatives are not distinct")
    for k, u in enumerate(reps):
        if field.label(u) != k:
            raise ArithmeticError(f"representative {u} mislabelled as {k}")
        if u.norm() >= p:
            raise ArithmeticError(f"representative {u} has norm >= {p}")
    for i in range(p):
        for j in range(p):
            if field.label(reps[i] + reps[j]) != (i + j) % p:
                raise ArithmeticError(f"addition breaks labelling at ({i}, {j})")
            if field.label(reps[i] * reps[j]) != (i * j) % p:
                raise ArithmeticError(f"multiplication breaks labelling at ({i}, {j})")
    for i in range(1, p):
        inv = field.reps[pow(i, -1, p)]
        if field.label(reps[i] * inv) != 1:
            raise ArithmeticError(f"representative {i} has no inverse among reps")


def encode_symbols(ks: Iterable[int], field: ResidueField) -> List[UElement]:
    """Map mod-p symbols to their constellation representatives."""
    return [field.unlabel(k) for k in ks]


def decode_symbols(us: Iterable[UElement], field: ResidueField) -> List[int]:
    """Reduce arbitrary subring elements modulo the prime and read labels."""
    return [field.label(u_mod(u, field.pi)) for u in us]
