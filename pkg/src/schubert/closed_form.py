"""
Schubert Calculus Closed Form — Lines on Hypersurfaces
------------------------------------------------------

C_n = (2n-3)^(2n-2) sum_{m=0}^{n-2} e_m(Gamma_{n-2}) u_m

with Gamma_{n-2} = {(2n-3-j) j / (2n-3)^2}_{j=1}^{n-2} and
u_m = (-1)^m (2m+1) K_m the coefficients of

    Z(x) = (1 / 2x) (1 - 1 / sqrt(1 + 4x)).

The entries alpha_{n,k} = (2n-3)^(2n-2) e_k(Gamma_{n-2}) form the lower
triangular matrix used by the recursion and the generating function.
"""

from fractions import Fraction
from functools import lru_cache

from src.arithmetic.exact import binomial, catalan, elem_sym_all, to_integer
from src.exceptions import DomainError, IntegralityError


# ---------------------------------------------------------------------
# Building blocks
# ---------------------------------------------------------------------

def gamma_set(n: int) -> list[Fraction]:
    """Gamma_{n-2}; empty for n = 2."""
    d = 2 * n - 3
    return [Fraction((d - j) * j, d * d) for j in range(1, n - 1)]


@lru_cache(maxsize=None)
def _gamma_elem_sym(n: int) -> tuple[Fraction, ...]:
    return tuple(elem_sym_all(gamma_set(n)))


def u_coefficient(t: int) -> int:
    """u_t = (-1)^t (2t+1) K_t, the coefficient of x^t in Z(x)."""
    if t < 0:
        raise DomainError(f"u_coefficient needs t >= 0, got {t}")
    sign = -1 if t % 2 else 1
    return sign * (2 * t + 1) * catalan(t)


def binomial_transform_u(t: int) -> int:
    """u_t as the binomial transform sum_m C(t, m) (-4)^(t-m) K_m."""
    if t < 0:
        raise DomainError(f"binomial_transform_u needs t >= 0, got {t}")
    return sum(binomial(t, m) * (-4) ** (t - m) * catalan(m) for m in range(t + 1))


def alpha_entry(n: int, k: int) -> Fraction:
    """alpha_{n,k} = (2n-3)^(2n-2) e_k(Gamma_{n-2}), for 0 <= k <= n-2."""
    if n < 2 or not 0 <= k <= n - 2:
        raise DomainError(f"alpha_entry needs n >= 2 and 0 <= k <= n-2, got ({n}, {k})")
    d = 2 * n - 3
    return d ** (2 * n - 2) * _gamma_elem_sym(n)[k]


# ---------------------------------------------------------------------
# C_n
# ---------------------------------------------------------------------

def schubert_cn(n: int) -> int:
    """C_n from the Catalan / elementary symmetric closed form."""
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"schubert requires n >= 2, got n={n}")
    total = sum((alpha_entry(n, m) * u_coefficient(m) for m in range(n - 1)), Fraction(0))
    value = to_integer(total, context=f"schubert(n={n})")
    if value <= 0:
        raise IntegralityError(f"schubert(n={n}) returned a non-positive value {value}")
    return value


def semifinal_cn(n: int) -> int:
    """
    C_n from the intermediate form, with the inner Catalan binomial
    transform evaluated directly instead of through u_t.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"semifinal requires n >= 2, got n={n}")
    d = 2 * n - 3
    e = _gamma_elem_sym(n)
    total = sum((e[t] * binomial_transform_u(t) for t in range(n - 1)), Fraction(0))
    return to_integer(d ** (2 * n - 2) * total, context=f"semifinal(n={n})")
