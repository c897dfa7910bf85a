"""The verification suite itself."""

import pytest

from heegaardtubes import BridgeParams, ensure_all_passed, run_verification
from heegaardtubes.errors import InvalidParameterError, VerificationError
from heegaardtubes.verify import CheckResult, check_pairing_oracle


def test_all_checks_pass_up_to_n3():
    results = run_verification(3)
    names = [r.name for r in results]
    assert "pairing-oracle n=2" in names
    assert "components n=3" in names
    assert "worked-examples" in names
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    ensure_all_passed(results)


def test_sampling_kicks_in_beyond_exhaustive_range():
    result = check_pairing_oracle(BridgeParams(6), oracle_cap=8, sample_size=40)
    assert result.passed
    assert "sampled" in result.detail


def test_oracle_cap_skips_cleanly():
    result = check_pairing_oracle(BridgeParams(6), oracle_cap=5, sample_size=10)
    assert result.passed
    assert "skipped" in result.detail


def test_ensure_all_passed_raises():
    with pytest.raises(VerificationError):
        ensure_all_passed([CheckResult("x", False, "boom")])


def test_n_max_validated():
    with pytest.raises(InvalidParameterError):
        run_verification(1)
