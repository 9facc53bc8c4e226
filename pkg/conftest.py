# conftest.py

import os

import pytest

os.environ.setdefault('PMOD4_LOG_TO_FILE', '0')
os.environ.setdefault('PMOD4_MAX_WORKERS', '1')

from config import RUN_EXTENDED, RUN_SLOW  # noqa: E402


def pytest_collection_modifyitems(config, items):
    skip_slow = pytest.mark.skip(reason="set PMOD4_RUN_SLOW=1 to run")
    skip_extended = pytest.mark.skip(reason="set PMOD4_RUN_EXTENDED=1 to run")
    for item in items:
        if 'extended' in item.keywords and not RUN_EXTENDED:
            item.add_marker(skip_extended)
        elif 'slow' in item.keywords and not (RUN_SLOW or RUN_EXTENDED):
            item.add_marker(skip_slow)
