import pytest


@pytest.fixture(autouse=True)
def _no_guard_env(monkeypatch):
    # Keep enumeration guards at their defaults unless a test sets them.
    monkeypatch.delenv("TREEDEGREE_GUARD", raising=False)
