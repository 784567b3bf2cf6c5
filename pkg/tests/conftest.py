import pytest

from polarcographs.catalog import MiningCache


@pytest.fixture(scope="session")
def cache():
    """One mining cache for the whole run; records are reused across criteria."""
    return MiningCache()
