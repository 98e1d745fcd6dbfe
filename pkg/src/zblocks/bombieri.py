"""
Bombieri Expansion — Lines on Hypersurfaces
-------------------------------------------

C_n = sum_{h=1}^{n-1} W_{n,h} sum_{lambda in Lambda(n-1,h)} 2^|lambda| L_lambda

W_{n,h} needs the full composition enumeration (C(2n-4, n-2) masks),
so the method is capped at BOMBIERI_MAX_N.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from src.arithmetic.exact import binomial, to_integer
from src.config import BOMBIERI_MAX_N
from src.exceptions import CapacityError, DomainError
from src.zblocks.compositions import composition_table, w_factor
from src.zblocks.lengths import weighted_length_sum


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BombieriTerm:
    h: int
    compositions: int
    w: Fraction
    weighted_sum: int

    @property
    def contribution(self) -> Fraction:
        return self.w * self.weighted_sum


def _check_capacity(n: int, max_n_guard: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"bombieri requires n >= 2, got n={n}")
    if n > max_n_guard:
        raise CapacityError(
            f"bombieri is capped at n <= {max_n_guard}: "
            f"n={n} would enumerate C({2 * n - 4}, {n - 2}) = {binomial(2 * n - 4, n - 2)} compositions"
        )


def bombieri_decomposition(n: int, max_n_guard: int = BOMBIERI_MAX_N) -> list[BombieriTerm]:
    """One term per h = 1..n-1."""
    _check_capacity(n, max_n_guard)
    table = composition_table(n)
    return [
        BombieriTerm(h=h, compositions=table[h][0], w=w_factor(n, h), weighted_sum=weighted_length_sum(n, h))
        for h in range(1, n)
    ]


def bombieri_cn(n: int, max_n_guard: int = BOMBIERI_MAX_N) -> int:
    """C_n from the Bombieri-norm expansion."""
    terms = bombieri_decomposition(n, max_n_guard)
    total = sum((t.contribution for t in terms), Fraction(0))
    logger.debug(f"[COMPUTE] bombieri(n={n}) over {sum(t.compositions for t in terms)} compositions")
    return to_integer(total, context=f"bombieri(n={n})")
