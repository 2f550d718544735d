"""Fibonacci-coefficient quaternions and their exact norm analysis.

The quaternion with coefficients (f_n, f_{n+1}, f_{n+2}, f_{n+3}) lives in
a two-parameter quaternion algebra.  Its norm has a closed form in a
shifted Fibonacci (Horadam) sequence, and its eventual sign, which decides
invertibility of all late enough terms, is the sign of an exact element of
the quadratic field generated by the golden ratio.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .algebra import AlgebraSignature, Convention, Element, Rational, as_rational

_fib_cache = [0, 1]
_fib_lock = threading.Lock()


def fib(n: int) -> int:
    """Exact Fibonacci number, iterative with a shared memo."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if n >= len(_fib_cache):
        with _fib_lock:
            while n >= len(_fib_cache):
                _fib_cache.append(_fib_cache[-1] + _fib_cache[-2])
    return _fib_cache[n]


@dataclass(frozen=True)
class HoradamParams:
    """Initial conditions for the Fibonacci recurrence: h_0 = p, h_1 = q."""

    p: Rational
    q: Rational


def horadam(n: int, params: HoradamParams) -> Rational:
    """n-th term of the Fibonacci recurrence started at (p, q).

    Equals p * f_{n-1} + q * f_n, so big indices stay cheap.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return as_rational(params.p)
    return as_rational(params.p * fib(n - 1) + params.q * fib(n))


class GoldenNumber:
    """Exact element u + v*a of the quadratic field with a*a = a + 1.

    a is the positive root (the golden ratio), which is irrational, so
    u + v*a vanishes only when u = v = 0 and the sign is decidable from
    (u, v) alone with no floating point.
    """

    __slots__ = ("u", "v")

    def __init__(self, u: Union[Rational, str] = 0, v: Union[Rational, str] = 0):
        object.__setattr__(self, "u", Fraction(u))
        object.__setattr__(self, "v", Fraction(v))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNumber is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, GoldenNumber):
            return self.u == other.u and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def __add__(self, other) -> GoldenNumber:
        other = self._coerce(other)
        return GoldenNumber(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.u, -self.v)

    def __sub__(self, other) -> GoldenNumber:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> GoldenNumber:
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> GoldenNumber:
        other = self._coerce(other)
        # (u1 + v1 a)(u2 + v2 a) with a*a = a + 1
        return GoldenNumber(self.u * other.u + self.v * other.v,
                            self.u * other.v + self.v * other.u + self.v * other.v)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GoldenNumber:
        if n < 0:
            raise ValueError("exponent must be >= 0")
        acc = GoldenNumber(1, 0)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    @staticmethod
    def _coerce(x) -> GoldenNumber:
        if isinstance(x, GoldenNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return GoldenNumber(x, 0)
        raise TypeError(f"cannot combine GoldenNumber with {type(x).__name__}")

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}.

        For v > 0 the value is negative exactly when u < 0 and
        u*u + u*v - v*v > 0, because a is the positive root of
        x*x - x - 1; the v < 0 case is handled by negating.
        """
        if self.v == 0:
            return 0 if self.u == 0 else (1 if self.u > 0 else -1)
        if self.v < 0:
            return -(-self).sign()
        if self.u >= 0:
            return 1
        return -1 if self.u * self.u + self.u * self.v - self.v * self.v > 0 else 1

    def __repr__(self) -> str:
        return f"GoldenNumber({self.u}, {self.v})"

    def __str__(self) -> str:
        if self.v == 0:
            return str(self.u)
        sign = "-" if self.v < 0 else "+"
        mag = abs(self.v)
        head = "" if mag == 1 else str(mag)
        if self.u == 0 and sign == "+":
            return f"{head}a"
        return f"{self.u} {sign} {head}a"


GOLDEN_UNIT = GoldenNumber(0, 1)


def golden_power(n: int) -> GoldenNumber:
    """a**n; equals fib(n)*a + fib(n-1) for n >= 1."""
    return GOLDEN_UNIT ** n


@dataclass(frozen=True)
class QuaternionParams:
    """The two nonzero parameters of a generalized quaternion algebra."""

    alpha1: Rational
    alpha2: Rational

    def __post_init__(self):
        a1, a2 = as_rational(self.alpha1), as_rational(self.alpha2)
        if a1 == 0 or a2 == 0:
            raise ValueError("quaternion parameters must be nonzero")
        object.__setattr__(self, "alpha1", a1)
        object.__setattr__(self, "alpha2", a2)

    def signature(self) -> AlgebraSignature:
        """Depth-2 doubling algebra realizing this parameter pair.

        Stage parameters are the negated alphas, which makes the norm the
        diagonal form x1^2 + a1*x2^2 + a2*x3^2 + a1*a2*x4^2.
        """
        return AlgebraSignature(2, (-self.alpha1, -self.alpha2),
                                Convention.CONJUGATE_RIGHT)


def fibonacci_quaternion(n: int, params: QuaternionParams) -> Element:
    """Quaternion with coefficients (f_n, f_{n+1}, f_{n+2}, f_{n+3})."""
    if n < 0:
        raise ValueError("index must be >= 0")
    return params.signature().element(
        (fib(n), fib(n + 1), fib(n + 2), fib(n + 3)))


def fib_norm_direct(n: int, params: QuaternionParams) -> Rational:
    """Norm of the n-th Fibonacci quaternion, via the algebra norm."""
    return fibonacci_quaternion(n, params).norm()


def fib_norm_formula(n: int, params: QuaternionParams) -> Rational:
    """Closed form for the same norm, in shifted-Fibonacci terms.

    h_{2n+2} started at (1 + 2*a2, 3*a2), plus (a1 - 1) times h_{2n+3}
    started at (1 + 2*a2, a2), minus 2*(a1 - 1)*(1 + a2)*f_n*f_{n+1}.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    a1, a2 = params.alpha1, params.alpha2
    first = horadam(2 * n + 2, HoradamParams(1 + 2 * a2, 3 * a2))
    second = horadam(2 * n + 3, HoradamParams(1 + 2 * a2, a2))
    return as_rational(first + (a1 - 1) * second
                       - 2 * (a1 - 1) * (1 + a2) * fib(n) * fib(n + 1))


def energy(params: Union[QuaternionParams, Tuple[Rational, Rational]]) -> GoldenNumber:
    """Growth coefficient of the norm sequence, exact in the golden field.

    (1/5) * [1 + a1 + 2*a2 + 5*a1*a2 + a*(a1 + 3*a2 + 8*a1*a2)].
    Its sign is the eventual sign of the norms.  A bare (a1, a2) pair is
    accepted as well, since the coefficient itself is defined for zero
    parameters even though no quaternion algebra is.
    """
    if isinstance(params, QuaternionParams):
        a1, a2 = Fraction(params.alpha1), Fraction(params.alpha2)
    else:
        a1, a2 = Fraction(params[0]), Fraction(params[1])
    u = (1 + a1 + 2 * a2 + 5 * a1 * a2) / 5
    v = (a1 + 3 * a2 + 8 * a1 * a2) / 5
    return GoldenNumber(u, v)


def invertibility_threshold(params: QuaternionParams, n_max: int = 200) -> Optional[int]:
    """Least index from which every norm up to n_max has the energy's sign.

    Norms of that sign are nonzero, so all later terms are invertible.
    Returns None when the sign has not stabilized by n_max; raises when
    the energy is zero and the criterion does not apply.
    """
    target = energy(params).sign()
    if target == 0:
        raise ValueError("energy is zero; the sign criterion does not apply")
    threshold: Optional[int] = None
    for n in range(n_max, -1, -1):
        norm = fib_norm_direct(n, params)
        matches = norm != 0 and (1 if norm > 0 else -1) == target
        if not matches:
            return threshold
        threshold = n
    return threshold


@dataclass(frozen=True)
class BinetCheck:
    """Exact verdict on the closed-form expression for one Fibonacci index.

    ``power_u + power_v * a`` is a**n; the identity holds when the
    golden coefficient equals f_n (then a**n - (1-a)**n is exactly
    f_n * (2a - 1), the square root of five).
    """

    n: int
    power_u: Fraction
    power_v: Fraction
    expected_u: int
    expected_v: int

    @property
    def holds(self) -> bool:
        return self.power_u == self.expected_u and self.power_v == self.expected_v

    @property
    def residual(self) -> Fraction:
        return self.power_v - self.expected_v


def binet_residual(n: int) -> BinetCheck:
    """Check the closed form for f_n exactly in the golden field."""
    if n < 0:
        raise ValueError("index must be >= 0")
    p = golden_power(n)
    expected_v = fib(n)
    expected_u = 1 if n == 0 else fib(n - 1)
    return BinetCheck(n=n, power_u=p.u, power_v=p.v,
                      expected_u=expected_u, expected_v=expected_v)
