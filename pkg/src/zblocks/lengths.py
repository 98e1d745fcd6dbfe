"""
Z-Block Lengths — Lines on Hypersurfaces
----------------------------------------

A z-block of width w and bulk b is a two-row diagram with w boxes per
row, the last b boxes of the top row sitting above the first b boxes of
the bottom row. A labeling fills each row with a permutation of 1..w.
Reading the b shared columns top to bottom defines a partial injection
on labels; its closed orbits are the cycles of the labeling.

The length L_lambda counts labelings whose cycle profile is exactly
lambda (lambda_k = number of k-cycles). Cycles are placed first and the
rest of the block must be cycle-free:

    L_lambda[w, b] = placements(lambda) * L_0[w - s, b - s],  s = sum k lambda_k
    L_0[w, b]      = w!^2 - sum_{s=1}^{b} C(b,s) C(w,s) s!^2 L_0[w-s, b-s]

A k-cycle on chosen columns and labels has k!(k-1)! labelings.
"""

import threading
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from src.arithmetic.exact import binomial, factorial
from src.exceptions import DomainError


# ---------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class ZBlock:
    width: int
    bulk: int

    def __post_init__(self):
        if self.width < 0 or self.bulk < 0:
            raise DomainError(f"ZBlock needs width, bulk >= 0, got ({self.width}, {self.bulk})")
        if self.bulk > self.width:
            raise DomainError(f"ZBlock bulk {self.bulk} exceeds width {self.width}")


@dataclass(frozen=True)
class CycleProfile:
    """counts[k-1] is the number of k-cycles."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise DomainError(f"CycleProfile counts must be >= 0, got {self.counts}")

    @property
    def columns(self) -> int:
        """Number of shared columns the cycles occupy."""
        return sum(k * c for k, c in enumerate(self.counts, start=1))

    @property
    def cycles(self) -> int:
        """|lambda|."""
        return sum(self.counts)

    @property
    def key(self) -> tuple[int, ...]:
        """counts without trailing zeros; profiles padded differently share a key."""
        counts = list(self.counts)
        while counts and counts[-1] == 0:
            counts.pop()
        return tuple(counts)


# ---------------------------------------------------------------------
# Zero profile
# ---------------------------------------------------------------------

_ZERO_LENGTHS: dict[tuple[int, int], int] = {}
_ZERO_LOCK = threading.Lock()


def _zero_length(width: int, bulk: int) -> int:
    cached = _ZERO_LENGTHS.get((width, bulk))
    if cached is not None:
        return cached

    with _ZERO_LOCK:
        # Fill by increasing bulk; (w - s, b - s) always has a smaller bulk.
        for b in range(bulk + 1):
            w = width - bulk + b
            if (w, b) in _ZERO_LENGTHS:
                continue
            value = factorial(w) ** 2
            for s in range(1, b + 1):
                value -= binomial(b, s) * binomial(w, s) * factorial(s) ** 2 * _ZERO_LENGTHS[(w - s, b - s)]
            _ZERO_LENGTHS[(w, b)] = value
    return _ZERO_LENGTHS[(width, bulk)]


def zero_profile_length(block: ZBlock) -> int:
    """L_0[w, b]: labelings with no cycle at all. May be 0."""
    return _zero_length(block.width, block.bulk)


def residual(block: ZBlock, profile: CycleProfile) -> ZBlock:
    """The block left over once the profile's cycle columns are removed."""
    used = profile.columns
    if used > block.bulk:
        raise DomainError(f"Profile {profile.counts} needs {used} shared columns, block has bulk {block.bulk}")
    return ZBlock(block.width - used, block.bulk - used)


# ---------------------------------------------------------------------
# Lengths
# ---------------------------------------------------------------------

def _placements(block: ZBlock, profile: CycleProfile) -> int:
    """Ways to lay out the profile's cycles on chosen columns and labels."""
    columns, labels = block.bulk, block.width
    total = 1
    for k, count in enumerate(profile.counts, start=1):
        same_size = 1
        for _ in range(count):
            same_size *= binomial(columns, k) * binomial(labels, k) * factorial(k) * factorial(k - 1)
            columns -= k
            labels -= k
        total *= same_size // factorial(count)
    return total


def zblock_length(block: ZBlock, profile: CycleProfile) -> int:
    """L_lambda[block]. Raises DomainError when the profile cannot fit."""
    if len(profile.key) > block.bulk or profile.columns > block.bulk:
        raise DomainError(
            f"Profile {profile.counts} is infeasible for block (width={block.width}, bulk={block.bulk})"
        )
    return _placements(block, profile) * zero_profile_length(residual(block, profile))


def _profiles_up_to(size: int, budget: int, k: int = 1) -> Iterator[tuple[int, ...]]:
    """All (lambda_k, ..., lambda_size) with sum j lambda_j <= budget."""
    if k > size:
        yield ()
        return
    for count in range(budget // k + 1):
        for rest in _profiles_up_to(size, budget - k * count, k + 1):
            yield (count,) + rest


def feasible_profiles(block: ZBlock) -> list[CycleProfile]:
    """
    Profiles with at least one labeling, as tuples of length bulk,
    ordered by the reversed tuple (larger cycles vary slowest).
    """
    profiles = [
        CycleProfile(counts)
        for counts in _profiles_up_to(block.bulk, block.bulk)
    ]
    profiles = [p for p in profiles if zblock_length(block, p) > 0]
    return sorted(profiles, key=lambda p: p.counts[::-1])


# ---------------------------------------------------------------------
# Weighted sums
# ---------------------------------------------------------------------

def _check_nh(n: int, h: int) -> None:
    if n < 2 or not 1 <= h <= n - 1:
        raise DomainError(f"Weighted length sum needs n >= 2 and 1 <= h <= n-1, got ({n}, {h})")


def weighted_length_sum(n: int, h: int) -> int:
    """sum_lambda 2^|lambda| L_lambda over width n-1, bulk h; closed form n!(n-1)!/(n-h)."""
    _check_nh(n, h)
    return factorial(n) * factorial(n - 1) // (n - h)


def weighted_length_sum_enumerated(n: int, h: int) -> int:
    """The same sum, profile by profile."""
    _check_nh(n, h)
    block = ZBlock(n - 1, h)
    return sum(2 ** p.cycles * zblock_length(block, p) for p in feasible_profiles(block))


# ---------------------------------------------------------------------
# Brute force
# ---------------------------------------------------------------------

def _labeling_profile(top: tuple[int, ...], bottom: tuple[int, ...], bulk: int) -> tuple[int, ...]:
    width = len(top)
    step = {top[width - bulk + i]: bottom[i] for i in range(bulk)}
    counts = [0] * bulk
    seen = set()
    for start in step:
        if start in seen:
            continue
        length, label = 0, start
        while label in step and label not in seen:
            seen.add(label)
            label = step[label]
            length += 1
        if label == start:
            counts[length - 1] += 1
    return tuple(counts)


def brute_force_profile_counts(block: ZBlock) -> dict[tuple[int, ...], int]:
    """Classify all (w!)^2 labelings by cycle profile. Keys have length bulk."""
    counts: dict[tuple[int, ...], int] = {}
    labels = range(block.width)
    rows = list(permutations(labels))
    for top in rows:
        for bottom in rows:
            profile = _labeling_profile(top, bottom, block.bulk)
            counts[profile] = counts.get(profile, 0) + 1
    return counts
