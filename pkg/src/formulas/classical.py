"""
Classical Formulas — Lines on Hypersurfaces
-------------------------------------------

Five published closed forms for C_n, the number of lines on a generic
hypersurface of degree 2n-3 in CP^n. Each is an independent code path
sharing only the exact kernel, so that they can cross-check one another:

    zagier_product_cn  : coefficient of x^(n-1) in a product of linear factors
    zagier_stirling_cn : alternating sum over Stirling numbers of the first kind
    libgober_cn        : elementary symmetric polynomials of (2n-3-j)/j
    dominici_cn        : elementary symmetric polynomials of j/(2n-3-j)
    harris_cn          : Catalan-weighted elementary symmetric sums
"""

from fractions import Fraction

from src.arithmetic.exact import (
    binomial,
    catalan,
    coeff_of_product,
    elem_sym_all,
    factorial,
    stirling1_unsigned,
    to_integer,
)
from src.exceptions import DomainError, IntegralityError


def _require_n(n: int, lower: int, method: str) -> None:
    if not isinstance(n, int) or n < lower:
        raise DomainError(f"{method} requires n >= {lower}, got n={n}")


def _positive(value: Fraction, method: str, n: int) -> int:
    result = to_integer(value, context=f"{method}(n={n})")
    if result <= 0:
        raise IntegralityError(f"{method}(n={n}) returned a non-positive value {result}")
    return result


# ---------------------------------------------------------------------
# van der Waerden-Zagier
# ---------------------------------------------------------------------

def zagier_product_cn(n: int) -> int:
    """
    [x^(n-1)] (1 - x) prod_{k=0}^{2n-3} ((2n-3-k) + k x).

    The linear factors carry +kx; with -kx the n=3 coefficient is 63.
    """
    _require_n(n, 2, "zagier-product")
    d = 2 * n - 3
    factors = [(1, -1)] + [(d - k, k) for k in range(d + 1)]
    return _positive(coeff_of_product(factors, n - 1), "zagier-product", n)


def zagier_stirling_cn(n: int) -> int:
    """sum_m (-1)^(n-1-m) C(2n-2-m, n-1) (2n-3)^(m+1) [2n-3, m]."""
    _require_n(n, 2, "zagier-stirling")
    d = 2 * n - 3
    total = 0
    for m in range(n):
        sign = -1 if (n - 1 - m) % 2 else 1
        total += sign * binomial(2 * n - 2 - m, n - 1) * d ** (m + 1) * stirling1_unsigned(d, m)
    return _positive(Fraction(total), "zagier-stirling", n)


# ---------------------------------------------------------------------
# Libgober and Dominici
# ---------------------------------------------------------------------

def libgober_cn(n: int) -> int:
    """(2n-3)(2n-3)! [e_{n-2}(L) - e_{n-3}(L)], L = {(2n-3-j)/j}_{j=1}^{2n-4}."""
    _require_n(n, 3, "libgober")
    d = 2 * n - 3
    e = elem_sym_all(Fraction(d - j, j) for j in range(1, d))
    value = d * factorial(d) * (e[n - 2] - e[n - 3])
    return _positive(value, "libgober", n)


def dominici_cn(n: int) -> int:
    """(2n-3)^2 (2n-4)! [e_{n-2}(Y) - e_{n-1}(Y)], Y = {j/(2n-3-j)}_{j=1}^{2n-4}."""
    _require_n(n, 3, "dominici")
    d = 2 * n - 3
    e = elem_sym_all(Fraction(j, d - j) for j in range(1, d))
    value = d * d * factorial(d - 1) * (e[n - 2] - e[n - 1])
    return _positive(value, "dominici", n)


# ---------------------------------------------------------------------
# Harris
# ---------------------------------------------------------------------

def harris_cn(n: int) -> int:
    """
    (2n-3)(2n-3)! sum_k K_k sum_{|I| = n-2-k} prod_{i in I} (2n-3-2i)^2 / (i(2n-3-i)).

    The inner subset sum is e_{n-2-k} of the n-2 factors. k runs up to
    n-2 (the empty subset term); stopping at n-3 drops K_{n-2} and gives
    9 instead of 27 at n=3.
    """
    _require_n(n, 3, "harris")
    d = 2 * n - 3
    e = elem_sym_all(Fraction((d - 2 * i) ** 2, i * (d - i)) for i in range(1, n - 1))
    inner = sum((catalan(k) * e[n - 2 - k] for k in range(n - 1)), Fraction(0))
    return _positive(d * factorial(d) * inner, "harris", n)
