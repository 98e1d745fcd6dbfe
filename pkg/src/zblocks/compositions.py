"""
h-Special Compositions — Lines on Hypersurfaces
-----------------------------------------------

An h-special composition (I, J) of [2n-2] = {1, ..., 2n-2} has
|I| = |J| = n-1, 1 in I, 2n-2 in J and |I ∩ (J-1)| = h.

Compositions are stored as a bitmask of I (bit i-1 set for i in I).
Enumeration chooses I \\ {1} among {2, ..., 2n-3} with Gosper's hack, so
masks come out in increasing order.

W_{n,h} = 1/(n!(n-1)!) sum_{(I,J)} prod_{i in I} (2n-2-i) prod_{j in J} (j-1)
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from src.arithmetic.exact import elem_sym_all, factorial
from src.exceptions import DomainError


# ---------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------

def _special_h(n: int, i_mask: int) -> int:
    full = (1 << (2 * n - 2)) - 1
    j_mask = full ^ i_mask
    return (i_mask & (j_mask >> 1)).bit_count()


@dataclass(frozen=True)
class Composition:
    n: int
    i_mask: int
    h: int = field(init=False)

    def __post_init__(self):
        size = 2 * self.n - 2
        if self.n < 2:
            raise DomainError(f"Composition needs n >= 2, got {self.n}")
        if self.i_mask >> size:
            raise DomainError(f"Mask {self.i_mask:#b} has bits beyond {size}")
        if self.i_mask.bit_count() != self.n - 1:
            raise DomainError(f"|I| must be {self.n - 1}, mask {self.i_mask:#b} has {self.i_mask.bit_count()}")
        if not self.i_mask & 1:
            raise DomainError("1 must belong to I")
        if self.i_mask >> (size - 1) & 1:
            raise DomainError(f"{size} must belong to J")
        object.__setattr__(self, "h", _special_h(self.n, self.i_mask))

    @property
    def I(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, 2 * self.n - 1) if self.i_mask >> (i - 1) & 1)

    @property
    def J(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, 2 * self.n - 1) if not self.i_mask >> (j - 1) & 1)

    def weight(self) -> int:
        """prod_{i in I} (2n-2-i) prod_{j in J} (j-1)."""
        return _mask_weight(self.n, self.i_mask)


def _mask_weight(n: int, i_mask: int) -> int:
    top = 2 * n - 2
    weight = 1
    for element in range(1, top + 1):
        if i_mask >> (element - 1) & 1:
            weight *= top - element
        else:
            weight *= element - 1
    return weight


# ---------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------

def _middle_masks(width: int, k: int) -> Iterator[int]:
    """All width-bit masks with k bits set, increasing (Gosper's hack)."""
    if k == 0:
        yield 0
        return
    if k > width:
        return
    x = (1 << k) - 1
    limit = 1 << width
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def _special_masks(n: int) -> Iterator[int]:
    """I-masks of every composition with 1 in I and 2n-2 in J."""
    for middle in _middle_masks(2 * n - 4, n - 2):
        yield 1 | (middle << 1)


def enumerate_h_special(n: int, h: int) -> Iterator[Composition]:
    """Yield P^(h)_{2n-2} in increasing bitmask order."""
    if n < 2:
        raise DomainError(f"enumerate_h_special needs n >= 2, got {n}")
    if not 1 <= h <= n - 1:
        raise DomainError(f"h must lie in [1, {n - 1}], got {h}")
    for mask in _special_masks(n):
        if _special_h(n, mask) == h:
            yield Composition(n, mask)


@lru_cache(maxsize=None)
def composition_table(n: int) -> dict[int, tuple[int, int]]:
    """
    One pass over all special compositions of [2n-2]:
    {h: (number of compositions, sum of their weights)}.
    """
    if n < 2:
        raise DomainError(f"composition_table needs n >= 2, got {n}")
    table = {h: [0, 0] for h in range(1, n)}
    for mask in _special_masks(n):
        entry = table[_special_h(n, mask)]
        entry[0] += 1
        entry[1] += _mask_weight(n, mask)
    return {h: (count, total) for h, (count, total) in table.items()}


# ---------------------------------------------------------------------
# W factors
# ---------------------------------------------------------------------

def w_factor(n: int, h: int) -> Fraction:
    """W_{n,h}."""
    if n < 2 or not 1 <= h <= n - 1:
        raise DomainError(f"w_factor needs n >= 2 and 1 <= h <= n-1, got ({n}, {h})")
    _, total = composition_table(n)[h]
    return Fraction(total, factorial(n) * factorial(n - 1))


def w_sum_identity(n: int) -> tuple[Fraction, Fraction]:
    """
    (sum_h W_{n,h} by enumeration,
     (2n-3)^2 (2n-4)! / (n!(n-1)!) (-1)^(n-2) e_{n-2}(G_{2n-4}))
    with G_{2n-4} = {1 - (2n-3)/k}_{k=1}^{2n-4}.
    """
    if n < 3:
        raise DomainError(f"w_sum_identity requires n >= 3, got n={n}")
    d = 2 * n - 3
    lhs = sum((w_factor(n, h) for h in range(1, n)), Fraction(0))
    e = elem_sym_all(1 - Fraction(d, k) for k in range(1, d))
    sign = -1 if (n - 2) % 2 else 1
    rhs = Fraction(d * d * factorial(d - 1), factorial(n) * factorial(n - 1)) * sign * e[n - 2]
    return lhs, rhs
