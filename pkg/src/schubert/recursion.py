"""
Recursion and Generating Function — Lines on Hypersurfaces
----------------------------------------------------------

Reading C_n = sum_k alpha_{n,k} u_k as rows of an infinite lower
triangular matrix A = [alpha_{i+2,j}] gives:

- a recursion of unbounded order with variable coefficients
      C_n = sum_{k=2}^{n-1} B_{n,k} C_k + F_n
- the inverse A^-1 = [theta_{n,k}], for which
      sum_k theta_{t,k} C_{k+2} = u_t = [x^t] Z(x)

Coefficient rows are memoized by n; rows are only ever added.
"""

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.arithmetic.exact import Number, as_rational, catalan, to_integer
from src.exceptions import DomainError, IntegralityError, VerificationError
from src.schubert.closed_form import alpha_entry, schubert_cn, u_coefficient


logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------
# Lower triangular matrices
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class TriMatrix:
    """
    Exact lower triangular matrix. Row r stores its r+1 entries
    (columns 0..r); everything above the diagonal is zero.
    """

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for r, row in enumerate(self.rows):
            if len(row) != r + 1:
                raise DomainError(f"TriMatrix row {r} has {len(row)} entries, expected {r + 1}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "TriMatrix":
        return cls(tuple(tuple(as_rational(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, size: int) -> "TriMatrix":
        return cls.from_rows([[1 if c == r else 0 for c in range(r + 1)] for r in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, r: int, c: int) -> Fraction:
        return self.rows[r][c] if c <= r else Fraction(0)

    def matmul(self, other: "TriMatrix") -> "TriMatrix":
        if other.size != self.size:
            raise DomainError(f"Size mismatch: {self.size} vs {other.size}")
        rows = []
        for r in range(self.size):
            row = []
            for c in range(r + 1):
                row.append(sum((self.rows[r][k] * other.rows[k][c] for k in range(c, r + 1)), Fraction(0)))
            rows.append(row)
        return TriMatrix.from_rows(rows)

    def inverse(self) -> "TriMatrix":
        """Forward substitution, column by column below the diagonal."""
        inv: list[list[Fraction]] = []
        for r in range(self.size):
            diag = self.rows[r][r]
            if diag == 0:
                raise DomainError(f"TriMatrix is singular: zero diagonal at row {r}")
            row = []
            for c in range(r):
                acc = sum((self.rows[r][k] * inv[k][c] for k in range(c, r)), Fraction(0))
                row.append(-acc / diag)
            row.append(1 / diag)
            inv.append(row)
        return TriMatrix.from_rows(inv)


def alpha_matrix(size: int) -> TriMatrix:
    """Upper-left size x size block of A, A_{ij} = alpha_{i+2,j}."""
    if size < 1:
        raise DomainError(f"alpha_matrix needs size >= 1, got {size}")
    return TriMatrix.from_rows([[alpha_entry(i + 2, j) for j in range(i + 1)] for i in range(size)])


def theta_matrix(size: int) -> TriMatrix:
    """Upper-left size x size block of A^-1."""
    return alpha_matrix(size).inverse()


def theta_matrix_neumann(size: int) -> TriMatrix:
    """
    The same block as theta_matrix, via A = D(I + T):
    A^-1 = (I - T + T^2 - ... + (-T)^(size-1)) D^-1.
    """
    a = alpha_matrix(size)
    diag = [a.rows[r][r] for r in range(size)]
    t = TriMatrix.from_rows([
        [a.rows[r][c] / diag[r] if c < r else 0 for c in range(r + 1)]
        for r in range(size)
    ])

    series = TriMatrix.identity(size)
    power = TriMatrix.identity(size)
    for q in range(1, size):
        power = power.matmul(t)
        sign = -1 if q % 2 else 1
        series = TriMatrix.from_rows([
            [series.rows[r][c] + sign * power.rows[r][c] for c in range(r + 1)]
            for r in range(size)
        ])

    return TriMatrix.from_rows([
        [series.rows[r][c] / diag[c] for c in range(r + 1)]
        for r in range(size)
    ])


# ---------------------------------------------------------------------
# Recursion coefficients
# ---------------------------------------------------------------------

_B_ROWS: dict[int, dict[int, Fraction]] = {}
_B_LOCK = threading.Lock()


def _b_row(n: int) -> dict[int, Fraction]:
    """
    B_{n,k} for k = 2..n-1:

        B_{n,k} = alpha_{n,k-2} / alpha_{k,k-2}
                  - sum_{q=1}^{n-k-1} alpha_{n,k-2+q} / alpha_{k+q,k-2+q} B_{k+q,k}

    Rows n' < n are filled first.
    """
    row = _B_ROWS.get(n)
    if row is not None:
        return row

    with _B_LOCK:
        for m in range(3, n + 1):
            if m in _B_ROWS:
                continue
            fresh = {}
            for k in range(2, m):
                value = alpha_entry(m, k - 2) / alpha_entry(k, k - 2)
                for q in range(1, m - k):
                    value -= alpha_entry(m, k - 2 + q) / alpha_entry(k + q, k - 2 + q) * _B_ROWS[k + q][k]
                fresh[k] = value
            _B_ROWS[m] = fresh
    return _B_ROWS[n]


def inhomogeneous_term(n: int) -> Fraction:
    """F_n = alpha_{n,n-2} (-1)^(n-2) (2n-3) K_{n-2}."""
    sign = -1 if (n - 2) % 2 else 1
    return alpha_entry(n, n - 2) * sign * (2 * n - 3) * catalan(n - 2)


def recursion_coeffs(n: int) -> tuple[list[Fraction], Fraction]:
    """
    Return (B, F) with B[k-2] = B_{n,k} for k = 2..n-1, such that
    C_n = sum_k B_{n,k} C_k + F_n.
    """
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"recursion_coeffs requires n >= 3, got n={n}")
    row = _b_row(n)
    return [row[k] for k in range(2, n)], inhomogeneous_term(n)


def recursion_coeffs_via_theta(n: int) -> list[Fraction]:
    """B_{n,m} = sum_{k=0}^{n-3} alpha_{n,k} theta_{k,m-2}, for m = 2..n-1."""
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"recursion_coeffs_via_theta requires n >= 3, got n={n}")
    theta = theta_matrix(n - 2)
    return [
        sum((alpha_entry(n, k) * theta.entry(k, m - 2) for k in range(n - 2)), Fraction(0))
        for m in range(2, n)
    ]


def cn_via_recursion(n: int) -> int:
    """Evaluate the recursion bottom-up from C_2 = 1."""
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"recursion requires n >= 2, got n={n}")

    values = {2: 1}
    for m in range(3, n + 1):
        coeffs, inhomogeneous = recursion_coeffs(m)
        total = sum((b * values[k] for k, b in zip(range(2, m), coeffs)), Fraction(0)) + inhomogeneous
        if total.denominator != 1:
            raise IntegralityError(f"recursion produced a non-integral C_{m} = {total}")
        values[m] = total.numerator
    return values[n]


# ---------------------------------------------------------------------
# Generating function
# ---------------------------------------------------------------------

def z_series_check(terms: int) -> list[int]:
    """
    Return [sum_k theta_{t,k} C_{k+2}]_{t < terms} and check each entry
    against u_t; a mismatch raises VerificationError.
    """
    if not isinstance(terms, int) or terms < 1:
        raise DomainError(f"z_series_check needs terms >= 1, got {terms}")

    theta = theta_matrix(terms)
    cn = [schubert_cn(k + 2) for k in range(terms)]

    series = []
    for t in range(terms):
        value = sum((theta.entry(t, k) * cn[k] for k in range(t + 1)), Fraction(0))
        expected = u_coefficient(t)
        if value != expected:
            raise VerificationError("generating-function", f"coefficient x^{t} is {value}, expected {expected}")
        series.append(to_integer(value, context=f"Z(x) coefficient {t}"))

    logger.debug(f"[VERIFY] Z(x) matches through x^{terms - 1}")
    return series
