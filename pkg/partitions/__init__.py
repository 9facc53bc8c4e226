# __init__.py inside the partitions/ directory

from .engine import PartitionEngine, default_engine, partition_mod4
from .rademacher import dedekind_sum, dedekind_sum_direct, hrr, kloosterman_a
from .recurrence import batch_mod4, exact, exact_range
from .table import PartitionTable, export_tsv, ingest_text, load_binary, load_table, parse_text, save_binary

__all__ = [
    'PartitionEngine', 'default_engine', 'partition_mod4',
    'dedekind_sum', 'dedekind_sum_direct', 'hrr', 'kloosterman_a',
    'batch_mod4', 'exact', 'exact_range',
    'PartitionTable', 'export_tsv', 'ingest_text', 'load_binary', 'load_table', 'parse_text', 'save_binary',
]
