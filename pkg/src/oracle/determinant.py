"""
Symbolic Determinant — Lines on Hypersurfaces
---------------------------------------------

A_n(x) is the (2n-2) x (2n-2) matrix whose column pair (2a-1, 2a)
holds the variables x_{a,1..2n-3}, the odd column aligned at the top and
the even column shifted down one row. Entry (i, k), 1-based:

    k odd,  i != 2n-2 : eta_i     x_{(k+1)/2, i}
    k even, i != 1    : eta_{i-1} x_{k/2, i-1}

with eta_j = C(2n-4, j-1)^(1/2). The eta factors are left out of the
expansion; a monomial's eta^2 weight is recovered from its second
indices (see oracle.bllp).

The determinant is expanded by the Leibniz sum, walking rows in order
and skipping structural zeros, so only permutations that send the
n-1 "odd" rows to odd columns are visited.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from src.config import ORACLE_MAX_N
from src.exceptions import CapacityError, DomainError


logger = logging.getLogger(__name__)


Variable = tuple[int, int]          # (a, j): x_{a,j}
Exponents = tuple[int, ...]         # dense, indexed by variable_index


# ---------------------------------------------------------------------
# Variables and entries
# ---------------------------------------------------------------------

def variable_count(n: int) -> int:
    return (n - 1) * (2 * n - 3)


def variable_index(n: int, a: int, j: int) -> int:
    """Position of x_{a,j} in an exponent vector."""
    return (a - 1) * (2 * n - 3) + (j - 1)


def variable_at(n: int, index: int) -> Variable:
    a, j = divmod(index, 2 * n - 3)
    return a + 1, j + 1


def matrix_entry(n: int, i: int, k: int) -> Optional[Variable]:
    """The variable at row i, column k (1-based) or None for a zero entry."""
    size = 2 * n - 2
    if not (1 <= i <= size and 1 <= k <= size):
        raise DomainError(f"Entry ({i}, {k}) outside a {size}x{size} matrix")
    if k % 2 == 1:
        return None if i == size else ((k + 1) // 2, i)
    return None if i == 1 else (k // 2, i - 1)


# ---------------------------------------------------------------------
# Monomial map
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialMap:
    """P_n(x) without eta factors: exponent vector -> nonzero integer coefficient."""

    n: int
    terms: dict[Exponents, int]

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[tuple[Exponents, int]]:
        return iter(sorted(self.terms.items()))

    def degree(self) -> int:
        return 2 * self.n - 2


# ---------------------------------------------------------------------
# Expansion
# ---------------------------------------------------------------------

def _check_capacity(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"oracle requires n >= 2, got n={n}")
    if n > ORACLE_MAX_N:
        raise CapacityError(
            f"oracle is capped at n <= {ORACLE_MAX_N}: "
            f"n={n} expands a {2 * n - 2}x{2 * n - 2} symbolic determinant"
        )


def expand_det(n: int) -> MonomialMap:
    """Expand det A_n(x) exactly, eta factors stripped."""
    _check_capacity(n)
    size = 2 * n - 2

    rows = [
        [(k, variable_index(n, *var)) for k in range(1, size + 1)
         if (var := matrix_entry(n, i, k)) is not None]
        for i in range(1, size + 1)
    ]

    terms: dict[Exponents, int] = {}
    exponents = [0] * variable_count(n)
    used = [False] * (size + 1)
    visited = 0

    def walk(row: int, inversions: int) -> None:
        nonlocal visited
        if row == size:
            visited += 1
            key = tuple(exponents)
            terms[key] = terms.get(key, 0) + (-1 if inversions % 2 else 1)
            return
        for column, var in rows[row]:
            if used[column]:
                continue
            # columns already taken to the right of this one
            crossed = sum(1 for c in range(column + 1, size + 1) if used[c])
            used[column] = True
            exponents[var] += 1
            walk(row + 1, inversions + crossed)
            exponents[var] -= 1
            used[column] = False

    walk(0, 0)
    terms = {key: coeff for key, coeff in terms.items() if coeff != 0}
    logger.debug(f"[COMPUTE] det A_{n}: {visited} permutations, {len(terms)} monomials")
    return MonomialMap(n=n, terms=terms)
