"""
Exact Kernel — Lines on Hypersurfaces
-------------------------------------

Arbitrary-precision arithmetic and the combinatorial primitives every
formula shares:
- binomial coefficients and factorials
- unsigned Stirling numbers of the first kind (memoized triangle)
- Catalan numbers
- elementary symmetric polynomials of a list of rationals
- coefficient extraction from a product of linear factors

Python integers are the ExactInt carrier and fractions.Fraction the
ExactRat carrier: both are exact and Fraction is always reduced with a
positive denominator. No floating point is used in this module.
"""

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from src.exceptions import DomainError, IntegralityError


ExactInt = int
ExactRat = Fraction
Number = Union[int, Fraction]


# ---------------------------------------------------------------------
# Conversions
# ---------------------------------------------------------------------

def as_rational(value: Number) -> Fraction:
    """Coerce an int or Fraction to a Fraction (never from float)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"Expected int or Fraction, got {type(value).__name__}")


def to_integer(value: Number, context: str = "value") -> int:
    """
    Return value as an int, raising IntegralityError when the reduced
    rational has a denominator other than 1.
    """
    value = as_rational(value)
    if value.denominator != 1:
        raise IntegralityError(f"{context} is not integral: {value}")
    return value.numerator


# ---------------------------------------------------------------------
# Factorials and binomials
# ---------------------------------------------------------------------

def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """
    Binomial coefficient C(n, k) for n >= 0.

    Returns 0 when k < 0 or k > n.
    """
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------
# Stirling numbers of the first kind
# ---------------------------------------------------------------------

class _StirlingTriangle:
    """
    Rows of the unsigned Stirling triangle, grown on demand.

    [n+1, m] = n [n, m] + [n, m-1]. Rows are only ever appended, under a
    lock, so concurrent readers always see complete rows.
    """

    def __init__(self):
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n < len(self._rows):
            return self._rows[n]
        with self._lock:
            while len(self._rows) <= n:
                k = len(self._rows) - 1
                prev = self._rows[k]
                nxt = [0] * (k + 2)
                for m in range(k + 2):
                    left = prev[m] * k if m <= k else 0
                    diag = prev[m - 1] if m >= 1 else 0
                    nxt[m] = left + diag
                self._rows.append(tuple(nxt))
        return self._rows[n]


_STIRLING = _StirlingTriangle()


def stirling1_unsigned(n: int, m: int) -> int:
    """Number of permutations of n elements with exactly m cycles."""
    if n < 0 or m < 0:
        raise DomainError(f"stirling1_unsigned needs n, m >= 0, got ({n}, {m})")
    if m > n:
        return 0
    return _STIRLING.row(n)[m]


# ---------------------------------------------------------------------
# Catalan numbers
# ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def catalan(m: int) -> int:
    """K_m = C(2m, m) / (m + 1)."""
    if m < 0:
        raise DomainError(f"catalan needs m >= 0, got {m}")
    return binomial(2 * m, m) // (m + 1)


# ---------------------------------------------------------------------
# Elementary symmetric polynomials
# ---------------------------------------------------------------------

def elem_sym_all(values: Iterable[Number]) -> list[Fraction]:
    """
    Return [e_0, e_1, ..., e_len] of the given values.

    One pass: after absorbing v, e_t <- e_t + v * e_{t-1} for t from the
    top down. The empty input gives [1].
    """
    e = [Fraction(1)]
    for value in values:
        v = as_rational(value)
        e.append(Fraction(0))
        for t in range(len(e) - 1, 0, -1):
            e[t] += v * e[t - 1]
    return e


# ---------------------------------------------------------------------
# Products of linear factors
# ---------------------------------------------------------------------

def coeff_of_product(factors: Sequence[tuple[Number, Number]], power: int) -> Fraction:
    """
    Coefficient of x^power in prod_k (a_k + b_k x).

    Coefficients above `power` are never needed, so the running product
    is truncated at that degree.
    """
    if power < 0:
        raise DomainError(f"power must be >= 0, got {power}")
    if power > len(factors):
        raise DomainError(f"power {power} exceeds the number of factors ({len(factors)})")

    coeffs = [Fraction(1)]
    for a, b in factors:
        a, b = as_rational(a), as_rational(b)
        top = min(len(coeffs), power)
        nxt = [Fraction(0)] * (top + 1)
        for d, c in enumerate(coeffs):
            nxt[d] += a * c
            if d + 1 <= top:
                nxt[d + 1] += b * c
        coeffs = nxt
    return coeffs[power]
