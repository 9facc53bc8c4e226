# partitions/engine.py

import threading
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from tqdm import tqdm

from config import CROSS_CHECK, EXACT_PARTITION_LIMIT, MAX_WORKERS, PARTITION_POLICY
from logs import get_logger
from partitions.rademacher import hrr
from partitions.recurrence import batch_mod4, exact
from partitions.table import PartitionTable
from utils.errors import PartitionMismatchError, PartitionSourceError

log = get_logger(__name__)

SOURCES = ('table', 'batch', 'hrr', 'exact')
DEFAULT_BATCH_LIMIT = 2 * 10 ** 7


class PartitionEngine:
    """
    Answers p(n) mod 4 from an ordered list of sources.

    Args:
        table (PartitionTable): Optional ingested or cached table.
        policy (tuple): Source names in priority order, drawn from SOURCES.
        cross_check (bool): Ask every available source and demand agreement.
        batch_limit (int): Largest n the batch recurrence may be grown to.
        db (DatabaseManager): Optional persistent cache for hrr results.
    """

    def __init__(self, table=None, policy=PARTITION_POLICY, cross_check=CROSS_CHECK,
                 batch_limit=DEFAULT_BATCH_LIMIT, db=None):
        unknown = [s for s in policy if s not in SOURCES]
        if unknown:
            raise ValueError(f"unknown partition sources: {unknown}")
        self.table = table
        self.policy = tuple(policy)
        self.cross_check = cross_check
        self.batch_limit = batch_limit
        self.db = db
        self._batch = None
        self._lock = threading.Lock()
        self._db_lock = threading.Lock()

    # ----- individual sources -----

    def _ensure_batch(self, N):
        with self._lock:
            if self._batch is None or len(self._batch) <= N:
                size = max(N, 2 * len(self._batch) if self._batch is not None else N)
                size = min(size, self.batch_limit)
                self._batch = batch_mod4(size)
            return self._batch

    def _from_table(self, n):
        return None if self.table is None else self.table.get(n)

    def _from_batch(self, n):
        if n > self.batch_limit:
            return None
        return int(self._ensure_batch(n)[n])

    def _from_hrr(self, n):
        if self.db is not None:
            with self._db_lock:
                cached = self.db.get_partition_residue(n)
            if cached is not None:
                return cached
        residue = hrr(n) % 4
        if self.db is not None:
            with self._db_lock:
                self.db.add_partition_residue(n, residue, 'hrr')
        return residue

    def _hrr_bulk(self, todo, progress=False):
        found = {}
        if self.db is not None:
            with self._db_lock:
                found = self.db.get_partition_residues(todo)
        missing = [n for n in todo if n not in found]
        if missing:
            log.info("certifying %d partition values with hrr", len(missing))
            if MAX_WORKERS > 1 and len(missing) > 1:
                with ProcessPoolExecutor(max_workers=MAX_WORKERS) as pool:
                    values = list(tqdm(pool.map(hrr, missing), total=len(missing), desc='hrr', disable=not progress))
            else:
                values = [hrr(n) for n in tqdm(missing, desc='hrr', disable=not progress)]
            computed = {n: v % 4 for n, v in zip(missing, values)}
            if self.db is not None:
                with self._db_lock:
                    self.db.add_partition_residues(list(computed.items()), 'hrr')
            found.update(computed)
        return found

    def _from_exact(self, n):
        if n > EXACT_PARTITION_LIMIT:
            return None
        return exact(n) % 4

    def _ask(self, source, n):
        return getattr(self, f'_from_{source}')(n)

    # ----- dispatch -----

    def partition_mod4(self, n, policy=None):
        """p(n) mod 4 from the first source in ``policy`` able to answer."""
        if n < 0:
            return 0
        policy = self.policy if policy is None else tuple(policy)
        answers = {}
        for source in policy:
            value = self._ask(source, n)
            if value is None:
                continue
            if not self.cross_check:
                return value
            answers[source] = value
        if not answers:
            raise PartitionSourceError(f"no source in {policy} can supply p({n}) mod 4")
        if len(set(answers.values())) > 1:
            raise PartitionMismatchError(f"sources disagree on p({n}) mod 4: {answers}")
        return next(iter(answers.values()))

    def residues(self, ns, policy=None, progress=False):
        """
        Bulk p(n) mod 4 for many arguments.

        Table and batch answers are vectorised; hrr runs in worker processes for
        whatever remains, since mpmath precision is process-global.
        """
        policy = self.policy if policy is None else tuple(policy)
        ns = np.asarray(sorted(set(int(n) for n in ns)), dtype=np.int64)
        result = {}
        pending = ns
        if self.cross_check:
            return {int(n): self.partition_mod4(int(n), policy) for n in ns}
        for source in policy:
            if len(pending) == 0:
                break
            if source == 'table' and self.table is not None:
                found, values = self.table.lookup(pending.astype(np.uint64))
                result.update(zip(pending[found].tolist(), values[found].tolist()))
                pending = pending[~found]
            elif source == 'batch':
                reachable = pending[pending <= self.batch_limit]
                if len(reachable):
                    batch = self._ensure_batch(int(reachable.max()))
                    result.update(zip(reachable.tolist(), batch[reachable].tolist()))
                    pending = pending[pending > self.batch_limit]
            elif source == 'hrr':
                result.update(self._hrr_bulk(pending.tolist(), progress))
                pending = pending[:0]
            elif source == 'exact':
                reachable = pending[pending <= EXACT_PARTITION_LIMIT]
                result.update((n, exact(n) % 4) for n in reachable.tolist())
                pending = pending[pending > EXACT_PARTITION_LIMIT]
        if len(pending):
            raise PartitionSourceError(
                f"{len(pending)} arguments not covered by {policy}, smallest {int(pending[0])}"
            )
        return result

    def as_table(self, ns):
        return PartitionTable.from_mapping(self.residues(ns), source='computed')


_default_engine = None


def default_engine():
    global _default_engine
    if _default_engine is None:
        _default_engine = PartitionEngine()
    return _default_engine


def partition_mod4(n, policy=None, engine=None):
    """Module-level dispatch through the shared default engine."""
    return (engine or default_engine()).partition_mod4(n, policy)
