"""
Unit tests for base_verifier module

Tests cover:
1. Verifier initialization
2. Abstract items()/check() enforcement
3. (records, error) contract of run()
4. Ordered fan-out across worker threads
5. Range validation helper
"""
import time

import pytest

from cyclonorm.core.exceptions import PreconditionError
from cyclonorm.core.models import SweepRecord
from cyclonorm.verifiers.base_verifier import BaseVerifier


# ============================================================================
# TEST FIXTURES
# ============================================================================

class SquareVerifier(BaseVerifier):
    """Concrete verifier for testing base functionality"""

    command = "square"

    def items(self, context):
        return list(self.bounded_range(context, 1))

    def check(self, item):
        # later items finish first when run in parallel
        time.sleep(0.001 * (10 - item % 10))
        return SweepRecord(command=self.command, n=item, value=item * item, ok=item != 13)


@pytest.fixture
def square_verifier(settings):
    return SquareVerifier(settings)


# ============================================================================
# INITIALIZATION TESTS
# ============================================================================

class TestInitialization:
    """Tests for verifier construction"""

    def test_name_is_class_name(self, square_verifier):
        assert square_verifier.name == "SquareVerifier"

    def test_jobs_from_settings(self, threaded_settings):
        assert SquareVerifier(threaded_settings).jobs == 4

    def test_default_settings(self):
        assert BaseVerifier().jobs == 1


class TestAbstractMethods:
    """Tests for methods subclasses must provide"""

    def test_items_not_implemented(self):
        with pytest.raises(NotImplementedError, match="BaseVerifier must implement items"):
            BaseVerifier().items({})

    def test_check_not_implemented(self):
        with pytest.raises(NotImplementedError, match="must implement check"):
            BaseVerifier().check(5)


# ============================================================================
# RUN TESTS
# ============================================================================

class TestRun:
    """Tests for the (records, error) contract"""

    def test_success(self, square_verifier):
        records, error = square_verifier.run({"min": 1, "max": 5})
        assert error is None
        assert [r.value for r in records] == [1, 4, 9, 16, 25]

    def test_precondition_becomes_error_string(self, square_verifier):
        records, error = square_verifier.run({"min": 0, "max": 5})
        assert records == []
        assert error.startswith("[SquareVerifier] precondition violated")

    def test_inverted_range(self, square_verifier):
        _, error = square_verifier.run({"min": 9, "max": 2})
        assert "exceeds --max" in error

    def test_errors_surface_before_iteration(self, square_verifier):
        with pytest.raises(PreconditionError):
            square_verifier.iter_records({"min": 0, "max": 5})

    def test_threaded_order_matches_serial(self, settings, threaded_settings):
        context = {"min": 1, "max": 30}
        serial, _ = SquareVerifier(settings).run(context)
        threaded, _ = SquareVerifier(threaded_settings).run(context)
        assert [r.n for r in threaded] == list(range(1, 31))
        assert threaded == serial

    def test_all_ok(self, square_verifier):
        records, _ = square_verifier.run({"min": 1, "max": 12})
        assert BaseVerifier.all_ok(records)
        records, _ = square_verifier.run({"min": 1, "max": 13})
        assert not BaseVerifier.all_ok(records)

    def test_all_ok_ignores_records_without_verdict(self):
        assert BaseVerifier.all_ok([SweepRecord(command="sweep unit", n=2, value=3)])


class TestFormatError:
    def test_format_error(self, square_verifier):
        assert square_verifier._format_error("boom") == "[SquareVerifier] boom"


class TestBoundedRange:
    def test_inclusive(self):
        assert list(BaseVerifier.bounded_range({"min": 5, "max": 7}, 5)) == [5, 6, 7]

    def test_floor_enforced(self):
        with pytest.raises(PreconditionError, match="at least 5"):
            BaseVerifier.bounded_range({"min": 4, "max": 7}, 5)
