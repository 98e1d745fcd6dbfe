import json
from datetime import datetime
from unittest.mock import patch

import pytest

from src.exceptions import DomainError, VerificationError
from src.schubert.closed_form import schubert_cn
from src.validation.storage import save_verify_report
from src.validation.verify import (
    SUITES,
    SuiteResult,
    asymptotic_bound_holds,
    check_w_sum,
    parity_holds,
    run_suite,
    run_verification,
    summary_frame,
)
from tests.known_values import KNOWN_CN


# -----------------------------------------------------------------------
# Helpers
# -----------------------------------------------------------------------
def failing_suite(max_n: int) -> int:
    raise VerificationError("cross-method", f"n={max_n}: forced mismatch")


COMPUTED_RANGE = range(2, 31)


def computed_sequence() -> dict[int, int]:
    return {n: schubert_cn(n) for n in COMPUTED_RANGE}


def make_results() -> list[SuiteResult]:
    return [
        SuiteResult(name="parity", passed=True, checks=4),
        SuiteResult(name="cross-method", passed=False, checks=0, detail="n=5: forced mismatch"),
    ]


# -----------------------------------------------------------------------
# Tests: predicates
# -----------------------------------------------------------------------
@pytest.mark.parametrize("n", sorted(KNOWN_CN))
def test_published_values_are_odd(n):
    assert parity_holds(KNOWN_CN[n])


@pytest.mark.parametrize("n", sorted(KNOWN_CN))
def test_published_values_respect_the_bound(n):
    assert asymptotic_bound_holds(n, KNOWN_CN[n])


def test_bound_rejects_an_oversized_value():
    """(n-1) log 4 + log 3 at n = 3 is log 48."""
    assert not asymptotic_bound_holds(3, 49)
    assert asymptotic_bound_holds(3, 48)


@pytest.mark.parametrize("n", COMPUTED_RANGE)
def test_computed_values_are_odd_and_bounded(n):
    """Beyond the published table: C_21 .. C_30 from the closed form."""
    value = schubert_cn(n)
    assert parity_holds(value)
    assert asymptotic_bound_holds(n, value)


def test_computed_sequence_strictly_increases():
    values = computed_sequence()
    assert values[2] > 0
    assert all(values[n] < values[n + 1] for n in COMPUTED_RANGE[:-1])


# -----------------------------------------------------------------------
# Tests: suites
# -----------------------------------------------------------------------
@pytest.mark.parametrize("name", list(SUITES))
def test_every_suite_passes_up_to_six(name):
    result = run_suite(name, 6)
    assert result.passed, result.detail
    assert result.checks > 0


def test_run_verification_keeps_suite_order():
    results = run_verification(5, workers=1)
    assert [r.name for r in results] == list(SUITES)
    assert all(r.passed for r in results)


def test_w_sum_catches_a_table_mismatch(monkeypatch):
    """The per-composition weights are checked against the one-pass table."""
    monkeypatch.setattr("src.validation.verify.composition_table", lambda n: {h: (0, 0) for h in range(1, n)})
    with pytest.raises(VerificationError, match="enumerated"):
        check_w_sum(4)


def test_failing_suite_is_reported_not_raised():
    with patch.dict(SUITES, {"cross-method": failing_suite}):
        results = run_verification(5, workers=1)

    failed = [r for r in results if not r.passed]
    assert [r.name for r in failed] == ["cross-method"]
    assert "forced mismatch" in failed[0].detail


def test_run_verification_rejects_max_below_two():
    with pytest.raises(DomainError):
        run_verification(1, workers=1)


@pytest.mark.slow
def test_full_default_range_passes():
    results = run_verification(12, workers=1)
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_summary_frame_columns_and_status():
    frame = summary_frame(make_results())
    assert list(frame.columns) == ["suite", "status", "checks", "detail"]
    assert list(frame["status"]) == ["PASS", "FAIL"]


# -----------------------------------------------------------------------
# Tests: save_verify_report
# -----------------------------------------------------------------------
def test_report_file_name_and_payload(tmp_path):
    timestamp = datetime(2026, 1, 5, 10, 0, 0)
    path = save_verify_report(make_results(), max_n=5, timestamp=timestamp, output_dir=tmp_path)

    assert path == tmp_path / "verify_2026-01-05_10-00-00.json"
    payload = json.loads(path.read_text())
    assert payload["max_n"] == 5
    assert payload["passed"] is False
    assert [s["suite"] for s in payload["suites"]] == ["parity", "cross-method"]


def test_report_creates_missing_directory(tmp_path):
    output_dir = tmp_path / "nested" / "reports"
    path = save_verify_report(make_results()[:1], max_n=3, output_dir=output_dir)
    assert path.parent == output_dir
    assert json.loads(path.read_text())["passed"] is True
