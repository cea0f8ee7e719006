import pytest

from tftlib import FieldCtx


@pytest.fixture(scope="session")
def ctx():
    """Default field, shared across the suite; tests measure counter deltas."""
    return FieldCtx()


@pytest.fixture(scope="session")
def ctx5():
    return FieldCtx(5)
