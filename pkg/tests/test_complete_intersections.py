from itertools import permutations

import pytest

from src.exceptions import DomainError
from src.intersections.complete import ci_dimension_check, ci_grid, ci_lines, ci_table
from src.schubert.closed_form import schubert_cn
from tests.known_values import CI_TABLE_CODIM2


# -----------------------------------------------------------------------
# Tests: ci_dimension_check
# -----------------------------------------------------------------------
def test_cubic_surface_lives_in_p3():
    t = ci_dimension_check([3])
    assert t.ambient_dim == 3
    assert t.half_degrees == (1,)
    assert t.even_count == 0


def test_two_quadrics_live_in_p4():
    t = ci_dimension_check([2, 2])
    assert t.ambient_dim == 4
    assert t.even_count == 2


def test_degrees_are_stored_sorted():
    assert ci_dimension_check([5, 3]).degrees == (3, 5)


def test_odd_dimension_sum_rejected():
    with pytest.raises(DomainError, match="Dimension mismatch"):
        ci_dimension_check([2, 3])


def test_empty_degrees_rejected():
    with pytest.raises(DomainError):
        ci_dimension_check([])


def test_degree_zero_rejected():
    with pytest.raises(DomainError):
        ci_dimension_check([0, 1])


# -----------------------------------------------------------------------
# Tests: ci_lines
# -----------------------------------------------------------------------
@pytest.mark.parametrize("degrees, expected", sorted(CI_TABLE_CODIM2.items()))
def test_codimension_two_table(degrees, expected):
    assert ci_lines(ci_dimension_check(degrees)) == expected


@pytest.mark.parametrize("d", range(3, 18, 2))
def test_hypersurface_case_matches_schubert(d):
    """A single odd degree d = 2n-3 is the hypersurface count C_n."""
    assert ci_lines(ci_dimension_check([d])) == schubert_cn((d + 3) // 2)


@pytest.mark.parametrize("degrees", [(2, 4), (3, 5), (1, 2, 3, 4), (2, 2, 3)])
def test_factor_order_does_not_matter(degrees):
    t = ci_dimension_check(degrees)
    expected = ci_lines(t)
    for order in permutations(range(t.codim)):
        assert ci_lines(t, order=order) == expected


def test_all_odd_degrees_give_odd_counts():
    for d1 in range(1, 10, 2):
        for d2 in range(d1, 10, 2):
            assert ci_lines(ci_dimension_check([d1, d2])) % 2 == 1


def test_four_even_degrees_flagged():
    t = ci_dimension_check([2, 2, 2, 2])
    assert t.ambiguous_even_rule
    assert ci_lines(t) > 0


# -----------------------------------------------------------------------
# Tests: ci_table
# -----------------------------------------------------------------------
def test_codimension_one_table():
    assert ci_table(1, 5, workers=1) == {(1,): 1, (3,): 27, (5,): 2875}


def test_codimension_two_table_has_the_25_published_cells():
    assert ci_table(2, 9, workers=1) == CI_TABLE_CODIM2


def test_codimension_two_smallest_table():
    assert ci_table(2, 2, workers=1) == {(1, 1): 1, (2, 2): 16}


def test_grid_upper_triangle_only():
    grid = ci_grid(ci_table(2, 4, workers=1), 4)
    assert grid.loc[2, 4] == "1280"
    assert grid.loc[4, 2] == ""
    assert grid.loc[1, 2] == ""
    assert list(grid.index) == [1, 2, 3, 4]


def test_grid_rejects_other_codimensions():
    with pytest.raises(DomainError):
        ci_grid({(3,): 27}, 3)


def test_table_rejects_zero_codim():
    with pytest.raises(DomainError):
        ci_table(0, 5)
