"""
Pytest configuration and shared fixtures.

This file is automatically discovered by pytest and provides
fixtures that can be used across all test files.
"""
import io

import pytest

from cyclonorm.core.config import Settings
from cyclonorm.core.models import SweepRecord
from cyclonorm.core.polyring import IntPoly
from cyclonorm.main import run


# ===== Reference tables =====

@pytest.fixture
def domino_table_11():
    """Placements of 0..5 dominos on the 11-cycle"""
    return [1, 11, 44, 77, 55, 11]


@pytest.fixture
def domino_table_17():
    """Placements of 0..8 dominos on the 17-cycle"""
    return [1, 17, 119, 442, 935, 1122, 714, 204, 17]


@pytest.fixture
def class_numbers_imaginary():
    """h(-p) for small primes p = 3 mod 4"""
    return {7: 1, 11: 1, 19: 1, 23: 3, 31: 3, 43: 1, 47: 5, 67: 1, 163: 1}


# ===== Polynomial Fixtures =====

@pytest.fixture
def r1():
    """1 - x + x^2"""
    return IntPoly((1, -1, 1))


@pytest.fixture
def r2():
    """1 - x - x^2"""
    return IntPoly((1, -1, -1))


@pytest.fixture
def one_minus_x():
    return IntPoly((1, -1))


# ===== Settings / Records =====

@pytest.fixture
def settings():
    """Default settings, single worker"""
    return Settings()


@pytest.fixture
def threaded_settings():
    """Four workers"""
    return Settings(jobs=4)


@pytest.fixture
def sample_record():
    return SweepRecord(
        command="domino",
        n=11,
        value=[1, 11, 44, 77, 55, 11],
        method="closed_form",
    )


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep a developer's CYCLONORM_* variables out of the tests"""
    for name in ("CYCLONORM_JOBS", "CYCLONORM_LOG_LEVEL", "CYCLONORM_FORMAT"):
        monkeypatch.delenv(name, raising=False)


# ===== CLI =====

@pytest.fixture
def cli():
    """Run the command line and capture (exit_code, stdout, stderr)"""

    def _run(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    return _run
