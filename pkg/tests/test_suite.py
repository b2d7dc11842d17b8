r"""Tests the acceptance suites behind the verify command."""
import pytest
from postlie.errors import UnknownFamily
from postlie.suite import (
    DERIVED,
    SUITES,
    THEOREM,
    Check,
    SuiteResult,
    run_suite,
    suite_to_json,
)

# suites that solve large windows or current algebras
SLOW_SUITES = [s for s in SUITES if s != "prop-p"]


def test_check_rows() -> None:
    """A row passes when the computed value equals the expected one."""
    good = Check("dim", 3, 3, DERIVED)
    bad = Check("dim", 3, 4, THEOREM)
    assert good.passed and not bad.passed
    assert good.line().startswith("[PASS] dim")
    assert "computed 4 (theorem)" in bad.line()
    assert SuiteResult("x", [good]).passed
    assert not SuiteResult("x", [good, bad]).passed


def test_loop_correspondence_suite() -> None:
    """The loop lift suite passes and serializes every row."""
    result = run_suite("prop-p")
    assert result.passed
    data = suite_to_json(result)
    assert data["suite"] == "prop-p"
    assert data["passed"]
    assert len(data["checks"]) == len(result.checks) == 4
    assert all(row["passed"] for row in data["checks"])
    assert all(isinstance(row["computed"], str) for row in data["checks"])


def test_unknown_suite() -> None:
    """Unknown ids are rejected."""
    with pytest.raises(UnknownFamily):
        run_suite("th9")


@pytest.mark.slow
@pytest.mark.parametrize("suite", SLOW_SUITES)
def test_suite_passes(suite: str) -> None:
    """Every acceptance suite reproduces its expected values."""
    result = run_suite(suite)
    failed = [c.line() for c in result.checks if not c.passed]
    assert not failed, failed
