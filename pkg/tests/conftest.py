import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from isoform.catalog import enumerate_suite, load_catalog  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def suite(catalog):
    return enumerate_suite(catalog)
