"""
Pieri lattice of Gr(1, n): the intersection number
sigma_1^(2m) sigma_{1,1}^(n-1-m) as a path count.

States are pairs (a, b) with n-1 >= a >= b >= 0 standing for sigma_{a,b}.
Multiplying by sigma_1 moves to (a+1, b) or (a, b+1) whenever the result
is still a state. sigma_{1,1}^(n-1-m) = sigma_{n-1-m,n-1-m}, so the
product equals the number of paths from that corner to the top class
(n-1, n-1), which is the Catalan number K_m.
"""

from functools import lru_cache

from src.exceptions import DomainError


@lru_cache(maxsize=None)
def _paths_to_top(n: int, a: int, b: int) -> int:
    top = n - 1
    if a == top and b == top:
        return 1
    count = 0
    if a + 1 <= top:
        count += _paths_to_top(n, a + 1, b)
    if b + 1 <= a:
        count += _paths_to_top(n, a, b + 1)
    return count


def catalan_path_count(n: int, m: int) -> int:
    """Number of sigma_1 paths from sigma_{n-1-m,n-1-m} to sigma_{n-1,n-1}."""
    if n < 2 or not 0 <= m <= n - 1:
        raise DomainError(f"catalan_path_count needs n >= 2 and 0 <= m <= n-1, got ({n}, {m})")
    start = n - 1 - m
    return _paths_to_top(n, start, start)
