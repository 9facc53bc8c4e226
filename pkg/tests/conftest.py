from __future__ import annotations

import pytest

from database import DatabaseManager
from partitions import PartitionEngine


@pytest.fixture
def memory_db() -> DatabaseManager:
    db = DatabaseManager('sqlite://')
    db.create_all()
    yield db
    db.close()


@pytest.fixture(scope='session')
def batch_engine() -> PartitionEngine:
    return PartitionEngine(policy=('batch', 'hrr'), cross_check=False)
