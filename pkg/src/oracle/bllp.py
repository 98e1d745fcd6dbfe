"""
Random-Matrix Oracle — Lines on Hypersurfaces
---------------------------------------------

C_n = (2n-3)^(2n-2) / ((n-1)! n!) prod_{k=0}^{2n-3} C(2n-3, k)^-1
      * (2n-2)! ||P_n||_B^2

where P_n = det A_n(x) and, for a homogeneous polynomial of degree D,

    ||P||_B^2 = sum_alpha |P_alpha|^2 alpha_1! ... alpha_N! / D!

Every step is exact; nothing here shares code with the combinatorial
methods beyond the arithmetic kernel.
"""

import logging
from fractions import Fraction

from src.arithmetic.exact import binomial, factorial, to_integer
from src.exceptions import DomainError
from src.oracle.determinant import MonomialMap, expand_det, variable_at


logger = logging.getLogger(__name__)


def eta_squared_weight(n: int, exponents: tuple[int, ...]) -> int:
    """prod over variables x_{a,j} of C(2n-4, j-1)^(exponent)."""
    weight = 1
    for index, e in enumerate(exponents):
        if e:
            _, j = variable_at(n, index)
            weight *= binomial(2 * n - 4, j - 1) ** e
    return weight


def bombieri_norm_sq(poly: MonomialMap, n: int) -> Fraction:
    """||P_n||_B^2 with the eta factors restored."""
    if poly.n != n:
        raise DomainError(f"polynomial was expanded for n={poly.n}, got n={n}")
    degree = poly.degree()
    total = 0
    for exponents, coeff in poly.items():
        multi_factorial = 1
        for e in exponents:
            multi_factorial *= factorial(e)
        total += coeff * coeff * eta_squared_weight(n, exponents) * multi_factorial
    return Fraction(total, factorial(degree))


def bllp_prefactor(n: int) -> Fraction:
    d = 2 * n - 3
    denominator = factorial(n - 1) * factorial(n)
    for k in range(d + 1):
        denominator *= binomial(d, k)
    return Fraction(d ** (2 * n - 2), denominator)


def bllp_cn(n: int) -> int:
    """C_n from the exact Bombieri norm of det A_n(x); 2 <= n <= ORACLE_MAX_N."""
    poly = expand_det(n)
    norm_sq = bombieri_norm_sq(poly, n)
    value = bllp_prefactor(n) * factorial(2 * n - 2) * norm_sq
    logger.debug(f"[COMPUTE] oracle(n={n}): {len(poly)} monomials, ||P||^2 = {norm_sq}")
    return to_integer(value, context=f"oracle(n={n})")
