import pytest

from src.exceptions import DomainError
from src.formulas.classical import (
    dominici_cn,
    harris_cn,
    libgober_cn,
    zagier_product_cn,
    zagier_stirling_cn,
)
from src.schubert.closed_form import schubert_cn
from tests.known_values import KNOWN_CN


FROM_TWO   = [zagier_product_cn, zagier_stirling_cn]
FROM_THREE = [libgober_cn, dominici_cn, harris_cn]


# -----------------------------------------------------------------------
# Tests: published sequence
# -----------------------------------------------------------------------
@pytest.mark.parametrize("formula", FROM_TWO)
@pytest.mark.parametrize("n", sorted(KNOWN_CN))
def test_formulas_valid_from_two(formula, n):
    """Zagier's two forms reproduce every published value."""
    assert formula(n) == KNOWN_CN[n]


@pytest.mark.parametrize("formula", FROM_THREE)
@pytest.mark.parametrize("n", [n for n in sorted(KNOWN_CN) if n >= 3])
def test_formulas_valid_from_three(formula, n):
    """Libgober, Dominici and Harris reproduce every published value."""
    assert formula(n) == KNOWN_CN[n]


@pytest.mark.parametrize("n", range(21, 31))
def test_formulas_agree_beyond_the_published_table(n):
    """No reference values past n = 20: the five forms and Schubert must coincide."""
    values = {formula.__name__: formula(n) for formula in FROM_TWO + FROM_THREE}
    assert set(values.values()) == {schubert_cn(n)}, values


# -----------------------------------------------------------------------
# Tests: domain
# -----------------------------------------------------------------------
@pytest.mark.parametrize("formula", FROM_THREE)
def test_n_two_rejected_where_the_form_needs_n_three(formula):
    with pytest.raises(DomainError, match="n >= 3"):
        formula(2)


@pytest.mark.parametrize("formula", FROM_TWO + FROM_THREE)
def test_n_below_two_rejected(formula):
    with pytest.raises(DomainError):
        formula(1)


def test_harris_cubic_needs_the_empty_subset_term():
    """Dropping the K_{n-2} term would give 9 here."""
    assert harris_cn(3) == 27


def test_zagier_product_cubic_not_63():
    """The linear factors carry +kx."""
    assert zagier_product_cn(3) == 27
