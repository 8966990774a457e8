"""Exact rational scalars with p-adic valuation, norm exponent and residues.

Every coefficient in the package is a :class:`fractions.Fraction` (or an
``int``).  Nothing is ever rounded: a precision ``p**N`` only enters when an
operation explicitly reduces modulo it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

Scalar = Union[int, Fraction]


class PadicError(ArithmeticError):
    pass


class NegativeValuation(PadicError):
    """Raised when a residue is requested for a non-integral scalar."""


@total_ordering
class _Infinity:
    """Valuation of zero.  Compares above every integer and absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("padic-infinity")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        return NEG_INF


@total_ordering
class _NegInfinity:
    """Log-norm of zero; below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("padic-neg-infinity")

    def __lt__(self, other):
        return other is not self

    def __gt__(self, other):
        return False

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        return INF


INF = _Infinity()
NEG_INF = _NegInfinity()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class PadicContext:
    """Residue characteristic ``p`` (odd prime) and working precision ``N``."""

    p: int
    N: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.p == 2:
            raise ValueError("p must be odd")
        if self.N < 1:
            raise ValueError("precision N must be >= 1")

    @property
    def modulus(self) -> int:
        return self.p**self.N

    def valuation(self, x: Scalar):
        return valuation(x, self.p)

    def reduce(self, x: Scalar, M: int | None = None) -> int:
        return reduce(x, self.N if M is None else M, self.p)


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: Scalar, p: int):
    """``v_p(x)`` for a rational ``x``; ``INF`` for zero."""
    x = Fraction(x)
    if x == 0:
        return INF
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def unit_part(x: Scalar, p: int) -> Fraction:
    """``x / p**v_p(x)``; zero maps to zero."""
    x = Fraction(x)
    if x == 0:
        return x
    return x / Fraction(p) ** valuation(x, p)


def reduce(x: Scalar, M: int, p: int) -> int:
    """Canonical representative of ``x`` modulo ``p**M`` in ``[0, p**M)``."""
    if M < 0:
        raise ValueError("M must be non-negative")
    x = Fraction(x)
    if valuation(x, p) < 0:
        raise NegativeValuation(f"{x} has negative {p}-adic valuation")
    mod = p**M
    if mod == 1:
        return 0
    return x.numerator * pow(x.denominator, -1, mod) % mod


def is_integral(x: Scalar, p: int) -> bool:
    return valuation(x, p) >= 0


def norm_exponent(x: Scalar, p: int):
    """``log_p |x|`` with ``|p| = 1/p``, i.e. ``-v_p(x)``; ``NEG_INF`` for zero."""
    v = valuation(x, p)
    return NEG_INF if v is INF else -v


def min_valuation(values, p: int):
    """Minimum valuation over an iterable of scalars (``INF`` if all vanish)."""
    best = INF
    for c in values:
        v = valuation(c, p)
        if v < best:
            best = v
    return best


def factorial_valuation(k: int, p: int) -> int:
    """Legendre's formula for ``v_p(k!)``."""
    total, q = 0, p
    while q <= k:
        total += k // q
        q *= p
    return total


def fmt(x: Scalar) -> str:
    """Exact decimal string of a rational, as used in reports."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
