from fractions import Fraction

import pytest

from src.arithmetic.exact import binomial, factorial
from src.exceptions import CapacityError, DomainError
from src.zblocks.bombieri import bombieri_cn, bombieri_decomposition
from src.zblocks.compositions import (
    Composition,
    composition_table,
    enumerate_h_special,
    w_factor,
    w_sum_identity,
)
from src.zblocks.lengths import (
    CycleProfile,
    ZBlock,
    brute_force_profile_counts,
    feasible_profiles,
    residual,
    weighted_length_sum,
    weighted_length_sum_enumerated,
    zblock_length,
    zero_profile_length,
)
from tests.known_values import KNOWN_CN


# -----------------------------------------------------------------------
# Helpers
# -----------------------------------------------------------------------
def profiles_of(block: ZBlock) -> list[tuple[int, ...]]:
    return [p.counts for p in feasible_profiles(block)]


def all_blocks(max_width: int):
    for width in range(max_width + 1):
        for bulk in range(width + 1):
            yield ZBlock(width, bulk)


# -----------------------------------------------------------------------
# Tests: compositions
# -----------------------------------------------------------------------
def test_single_composition_for_n_two():
    comps = list(enumerate_h_special(2, 1))
    assert len(comps) == 1
    assert comps[0].I == (1,) and comps[0].J == (2,)


def test_one_special_composition_for_cubic():
    comps = list(enumerate_h_special(3, 1))
    assert [(c.I, c.J) for c in comps] == [((1, 2), (3, 4))]


def test_four_two_special_compositions_of_six():
    assert len(list(enumerate_h_special(4, 2))) == 4


def test_enumeration_is_in_increasing_mask_order():
    masks = [c.i_mask for c in enumerate_h_special(6, 3)]
    assert masks == sorted(masks)


@pytest.mark.parametrize("n", range(2, 13))
def test_composition_counts_sum_to_central_binomial(n):
    """I \\ {1} is any (n-2)-subset of {2, ..., 2n-3}."""
    table = composition_table(n)
    assert sum(count for count, _ in table.values()) == binomial(2 * n - 4, n - 2)


def test_cubic_composition_weight():
    """I = (1, 2), J = (3, 4): (3 * 2) * (2 * 3)."""
    (comp,) = enumerate_h_special(3, 1)
    assert comp.weight() == 36


@pytest.mark.parametrize("n", range(2, 8))
def test_weights_of_enumerated_compositions_match_table(n):
    table = composition_table(n)
    for h in range(1, n):
        comps = list(enumerate_h_special(n, h))
        assert (len(comps), sum(c.weight() for c in comps)) == table[h]


def test_enumeration_rejects_h_out_of_range():
    with pytest.raises(DomainError):
        list(enumerate_h_special(4, 4))
    with pytest.raises(DomainError):
        list(enumerate_h_special(4, 0))


def test_composition_rejects_missing_one():
    """Mask 0b0110 puts 1 in J."""
    with pytest.raises(DomainError, match="1 must belong to I"):
        Composition(3, 0b0110)


# -----------------------------------------------------------------------
# Tests: W factors
# -----------------------------------------------------------------------
@pytest.mark.parametrize("n, h, expected", [
    (2, 1, Fraction(1, 2)),
    (3, 1, Fraction(3)),
    (3, 2, Fraction(3, 4)),
    (4, 1, Fraction(25)),
    (4, 2, Fraction(725, 36)),
    (4, 3, Fraction(25, 16)),
])
def test_w_factor(n, h, expected):
    assert w_factor(n, h) == expected


def test_w_sum_identity_cubic():
    assert w_sum_identity(3) == (Fraction(15, 4), Fraction(15, 4))


def test_w_sum_identity_quintic():
    lhs, rhs = w_sum_identity(4)
    assert lhs == rhs == Fraction(725, 36) + 25 + Fraction(25, 16)


@pytest.mark.parametrize("n", range(5, 13))
def test_w_sum_identity_holds(n):
    lhs, rhs = w_sum_identity(n)
    assert lhs == rhs


def test_w_sum_identity_rejects_n_two():
    with pytest.raises(DomainError):
        w_sum_identity(2)


# -----------------------------------------------------------------------
# Tests: z-block lengths
# -----------------------------------------------------------------------
@pytest.mark.parametrize("width, bulk, counts, expected", [
    (3, 0, (), 36),
    (10, 7, (1, 1, 1), 54867456000),
    (3, 3, (1, 1, 0), 18),
    (3, 3, (3, 0, 0), 6),
    (3, 3, (0, 0, 1), 12),
    (3, 2, (0, 1), 6),
    (3, 2, (0, 0), 12),
])
def test_zblock_length(width, bulk, counts, expected):
    assert zblock_length(ZBlock(width, bulk), CycleProfile(counts)) == expected


def test_zero_profile_impossible_on_full_cubic_block():
    """Three shared columns over three labels always close a cycle."""
    assert zero_profile_length(ZBlock(3, 3)) == 0


def test_residual_removes_cycle_columns():
    assert residual(ZBlock(10, 7), CycleProfile((1, 1, 1))) == ZBlock(4, 1)


def test_infeasible_profile_rejected():
    with pytest.raises(DomainError, match="infeasible"):
        zblock_length(ZBlock(3, 2), CycleProfile((0, 0, 1)))


def test_zblock_rejects_bulk_above_width():
    with pytest.raises(DomainError):
        ZBlock(2, 3)


@pytest.mark.parametrize("width, bulk, expected", [
    (2, 1, [(0,), (1,)]),
    (3, 3, [(3, 0, 0), (1, 1, 0), (0, 0, 1)]),
    (3, 2, [(0, 0), (1, 0), (2, 0), (0, 1)]),
])
def test_feasible_profiles(width, bulk, expected):
    assert profiles_of(ZBlock(width, bulk)) == expected


@pytest.mark.parametrize("block", list(all_blocks(5)), ids=lambda b: f"w{b.width}b{b.bulk}")
def test_lengths_partition_all_labelings(block):
    """Every labeling has exactly one profile."""
    total = sum(zblock_length(block, p) for p in feasible_profiles(block))
    assert total == factorial(block.width) ** 2


@pytest.mark.parametrize("block", list(all_blocks(4)), ids=lambda b: f"w{b.width}b{b.bulk}")
def test_lengths_match_brute_force(block):
    expected = {p.counts: zblock_length(block, p) for p in feasible_profiles(block)}
    assert brute_force_profile_counts(block) == expected


@pytest.mark.slow
@pytest.mark.parametrize("bulk", range(6))
def test_lengths_match_brute_force_width_five(bulk):
    """Width 5 reaches 4- and 5-cycles, where k!(k-1)! differs from k!*2."""
    block = ZBlock(5, bulk)
    expected = {p.counts: zblock_length(block, p) for p in feasible_profiles(block)}
    assert brute_force_profile_counts(block) == expected


# -----------------------------------------------------------------------
# Tests: weighted length sums
# -----------------------------------------------------------------------
@pytest.mark.parametrize("n, h, expected", [(4, 1, 48), (4, 2, 72), (4, 3, 144), (2, 1, 2)])
def test_weighted_length_sum(n, h, expected):
    assert weighted_length_sum(n, h) == expected


@pytest.mark.parametrize("n", range(2, 10))
def test_enumerated_sum_equals_closed_form(n):
    for h in range(1, n):
        assert weighted_length_sum_enumerated(n, h) == factorial(n) * factorial(n - 1) // (n - h)


def test_weighted_length_sum_rejects_h_equal_n():
    with pytest.raises(DomainError):
        weighted_length_sum(4, 4)


# -----------------------------------------------------------------------
# Tests: Bombieri expansion
# -----------------------------------------------------------------------
def test_cubic_decomposition():
    """27 = 3 * (4 + 2) + 3/4 * (8 + 4)."""
    terms = bombieri_decomposition(3)
    assert [(t.h, t.w, t.weighted_sum) for t in terms] == [(1, 3, 6), (2, Fraction(3, 4), 12)]
    assert sum(t.contribution for t in terms) == 27


def test_quintic_decomposition():
    """2875 = 25*48 + 725/36*72 + 25/16*144."""
    terms = bombieri_decomposition(4)
    assert [(t.w, t.weighted_sum) for t in terms] == [
        (25, 48),
        (Fraction(725, 36), 72),
        (Fraction(25, 16), 144),
    ]
    assert [t.compositions for t in terms] == [1, 4, 1]


@pytest.mark.parametrize("n", range(2, 10))
def test_bombieri_reproduces_sequence(n):
    assert bombieri_cn(n) == KNOWN_CN[n]


@pytest.mark.slow
@pytest.mark.parametrize("n", [10, 11, 12])
def test_bombieri_reproduces_sequence_large(n):
    value = bombieri_cn(n)
    assert value == KNOWN_CN[n]
    assert value % 2 == 1


def test_bombieri_capacity_names_the_binomial():
    with pytest.raises(CapacityError, match=r"C\(26, 13\)"):
        bombieri_cn(15)


def test_bombieri_guard_is_configurable():
    with pytest.raises(CapacityError):
        bombieri_cn(5, max_n_guard=4)
