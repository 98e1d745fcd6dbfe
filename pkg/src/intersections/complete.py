"""
Complete Intersections — Lines on Hypersurfaces
-----------------------------------------------

Number of lines on a generic complete intersection of hypersurfaces of
degrees d = (d_1, ..., d_k) in CP^N, N = 1 + sum(d_i + 1)/2:

    C(d) = prod_i d_i^(2D_i+2) {d_i/2}
           * sum_{m} prod_i w_i(m_i) K_{M(m)}

    w_i(m)  = sum_{t=m}^{D_i} d_i^(-2t) e_t(Xi(d_i)) C(t, m) (-4)^(t-m)
    Xi(d)   = {(d - j) j}_{j=1}^{D},  D = floor((d-1)/2)
    M(m)    = sum_i m_i + (number of even d_i) / 2

{d_i/2} is present only for even d_i. The (t_i, m_i) double sum of each
factor collapses into w_i, so the outer sum runs over m alone.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterable, Optional

import pandas as pd
from joblib import Parallel, delayed

from src.arithmetic.exact import binomial, catalan, elem_sym_all, to_integer
from src.config import resolve_workers
from src.exceptions import DomainError, IntegralityError


logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------
# Degree tuples
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeTuple:
    degrees: tuple[int, ...]
    half_degrees: tuple[int, ...] = field(init=False)
    even_count: int = field(init=False)
    ambient_dim: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        object.__setattr__(self, "half_degrees", tuple((d - 1) // 2 for d in self.degrees))
        object.__setattr__(self, "even_count", sum(1 for d in self.degrees if d % 2 == 0))
        object.__setattr__(self, "ambient_dim", 1 + sum(d + 1 for d in self.degrees) // 2)

    @property
    def codim(self) -> int:
        return len(self.degrees)

    @property
    def ambiguous_even_rule(self) -> bool:
        """True when four or more degrees are even."""
        return self.even_count >= 4


def ci_dimension_check(degrees: Iterable[int]) -> DegreeTuple:
    """Validate degrees against 2(N-1) = sum(d_i + 1)."""
    degrees = list(degrees)
    if not degrees:
        raise DomainError("At least one degree is required")
    if any(not isinstance(d, int) or d < 1 for d in degrees):
        raise DomainError(f"Degrees must be integers >= 1, got {degrees}")
    total = sum(d + 1 for d in degrees)
    if total % 2:
        raise DomainError(
            f"Dimension mismatch for degrees {degrees}: sum(d_i + 1) = {total} is odd, "
            f"so no CP^N carries finitely many lines"
        )
    return DegreeTuple(tuple(degrees))


# ---------------------------------------------------------------------
# Line count
# ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _factor_weights(d: int) -> tuple[Fraction, ...]:
    """(w(0), ..., w(D)) for a single degree d."""
    half = (d - 1) // 2
    e = elem_sym_all((d - j) * j for j in range(1, half + 1))
    weights = []
    for m in range(half + 1):
        weights.append(sum(
            (Fraction(e[t], d ** (2 * t)) * binomial(t, m) * (-4) ** (t - m) for t in range(m, half + 1)),
            Fraction(0),
        ))
    return tuple(weights)


def _prefactor(t: DegreeTuple) -> Fraction:
    value = Fraction(1)
    for d, half in zip(t.degrees, t.half_degrees):
        value *= d ** (2 * half + 2)
        if d % 2 == 0:
            value *= Fraction(d, 2)
    return value


def ci_lines(t: DegreeTuple, order: Optional[Iterable[int]] = None) -> int:
    """
    C(d) for a validated tuple. `order` permutes the factors before
    summing; the result does not depend on it.
    """
    degrees = t.degrees if order is None else tuple(t.degrees[i] for i in order)
    if sorted(degrees) != list(t.degrees):
        raise DomainError(f"order must be a permutation of 0..{t.codim - 1}")

    weights = [_factor_weights(d) for d in degrees]
    shift = t.even_count // 2
    total = Fraction(0)
    for ms in product(*(range(len(w)) for w in weights)):
        term = Fraction(catalan(sum(ms) + shift))
        for w, m in zip(weights, ms):
            term *= w[m]
        total += term

    value = to_integer(_prefactor(t) * total, context=f"ci_lines({list(t.degrees)})")
    if value <= 0:
        raise IntegralityError(f"ci_lines({list(t.degrees)}) returned a non-positive value {value}")
    return value


# ---------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------

def ci_table(codim: int, max_degree: int, workers: Optional[int] = None) -> dict[tuple[int, ...], int]:
    """All valid sorted degree tuples of length codim with entries <= max_degree."""
    if codim < 1 or max_degree < 1:
        raise DomainError(f"ci_table needs codim >= 1 and max_degree >= 1, got ({codim}, {max_degree})")

    tuples = [
        degrees for degrees in combinations_with_replacement(range(1, max_degree + 1), codim)
        if sum(d + 1 for d in degrees) % 2 == 0
    ]
    workers = resolve_workers() if workers is None else workers
    logger.info(f"[COMPUTE] {len(tuples)} degree tuples (codim={codim}, max_degree={max_degree}, workers={workers})")

    values = Parallel(n_jobs=workers)(
        delayed(ci_lines)(DegreeTuple(degrees)) for degrees in tuples
    )
    return dict(zip(tuples, values))


def ci_grid(table: dict[tuple[int, ...], int], max_degree: int) -> pd.DataFrame:
    """
    Codimension-2 table as a d1 x d2 grid of decimal strings, upper
    triangle only, blank where no tuple exists.
    """
    if any(len(degrees) != 2 for degrees in table):
        raise DomainError("ci_grid only lays out codimension-2 tables")

    axis = range(1, max_degree + 1)
    grid = pd.DataFrame("", index=pd.Index(axis, name="d1"), columns=pd.Index(axis, name="d2"), dtype=object)
    for (d1, d2), value in table.items():
        grid.loc[d1, d2] = str(value)
    return grid
