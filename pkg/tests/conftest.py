import os

import pytest

from setcodes.config.settings import Settings
from setcodes.core.patterns import trial_rng


def pytest_collection_modifyitems(config, items):
    if os.getenv("SETCODES_ACCEPTANCE") == "1":
        return
    skip = pytest.mark.skip(reason="full-scale run; set SETCODES_ACCEPTANCE=1")
    for item in items:
        if "acceptance" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def settings() -> Settings:
    return Settings(log_level="WARNING", guard=2_000_000, cache_dir=None, workers=2)


@pytest.fixture
def rng():
    return trial_rng(1234, 0)
