from __future__ import annotations

import random
import sys
from fractions import Fraction
from math import gcd
from pathlib import Path

import mpmath
import numpy as np
import pytest
from mpmath import mp
from sympy import npartitions

from partitions import (
    PartitionEngine,
    PartitionTable,
    batch_mod4,
    dedekind_sum,
    dedekind_sum_direct,
    exact,
    export_tsv,
    hrr,
    ingest_text,
    kloosterman_a,
    load_binary,
    parse_text,
    save_binary,
)
from partitions.rademacher import tail_bound, terms_needed
from partitions.recurrence import _pentagonal_mod4_packed, unpack_residues
from utils.errors import (
    ExactLimitError,
    PartitionMismatchError,
    PartitionSourceError,
    TableFormatError,
)


def test_batch_small_values() -> None:
    assert batch_mod4(4).tolist() == [1, 1, 2, 3, 1]
    assert batch_mod4(0).tolist() == [1]


def test_batch_matches_exact() -> None:
    residues = batch_mod4(3000)
    assert all(int(residues[n]) == exact(n) % 4 for n in range(3001))


def test_packed_batch_matches_bytewise() -> None:
    N = 5003
    packed = unpack_residues(_pentagonal_mod4_packed(N), N)
    assert np.array_equal(packed, batch_mod4(N, packed=False))
    assert np.array_equal(batch_mod4(N, packed=True), batch_mod4(N, packed=False))


def test_exact_values() -> None:
    assert exact(0) == 1
    assert exact(4) == 5
    assert exact(100) == 190569292
    assert exact(-3) == 0
    with pytest.raises(ExactLimitError):
        exact(10 ** 6 + 1)


def test_dedekind_reciprocity_matches_definition() -> None:
    for k in range(1, 51):
        for h in range(k):
            assert dedekind_sum(h, k) == dedekind_sum_direct(h, k)
    assert dedekind_sum(1, 3) == Fraction(1, 18)


def test_dedekind_sum_with_common_factor() -> None:
    assert dedekind_sum(2, 4) == 0
    assert dedekind_sum(0, 7) == 0
    for h, k in ((6, 9), (10, 25), (-4, 14), (12, 30), (21, 49)):
        assert dedekind_sum(h, k) == dedekind_sum_direct(h, k)
        assert dedekind_sum(h, k) == dedekind_sum(h // gcd(h, k), k // gcd(h, k))


def test_dedekind_sum_scaled_by_twelve_k_is_integral() -> None:
    for k in (97, 120):
        for h in range(1, k):
            if gcd(h, k) == 1:
                scaled = 12 * k * dedekind_sum(h, k)
                assert scaled.denominator == 1
                assert scaled == 12 * k * dedekind_sum_direct(h, k)


def test_kloosterman_integer_phase_matches_sawtooth_phase() -> None:
    with mp.workdps(30):
        for k in (2, 5, 12, 35):
            for n in (0, 7, 1000):
                fast = kloosterman_a(k, n)
                slow = kloosterman_a(k, n, direct=True)
                assert abs(fast - slow) < mpmath.mpf(10) ** -25


def test_tail_bound_shrinks() -> None:
    n = 10 ** 4
    N = terms_needed(n)
    assert tail_bound(n, N) < 0.2
    assert tail_bound(n, N - 1) >= 0.2
    assert tail_bound(n, 2 * N) < tail_bound(n, N)


def test_hrr_small() -> None:
    assert hrr(0) == 1
    assert hrr(1) == 1
    assert hrr(4) == 5
    assert hrr(100) == exact(100)


def test_hrr_matches_independent_oracle() -> None:
    for n in (2, 3, 57, 1000, 10 ** 4):
        assert hrr(n) == int(npartitions(n))


def test_hrr_leaves_working_precision_alone() -> None:
    before = mp.dps
    assert hrr(123456) == int(npartitions(123456))
    assert mp.dps == before


def test_hrr_residues_sampled() -> None:
    rng = random.Random(2024)
    residues = batch_mod4(20000)
    for n in rng.sample(range(2, 20001), 25):
        assert hrr(n) % 4 == int(residues[n])


def test_parse_text_basic() -> None:
    table = parse_text("parts = [[1, 1], [2, 2]];")
    assert dict(table.items()) == {1: 1, 2: 2}
    assert table.source == 'ingested-text'
    assert len(parse_text("parts = [];")) == 0
    assert len(parse_text("  parts\n=\n[ ]\n;\n")) == 0


def test_parse_text_reduces_large_values() -> None:
    big = 10 ** 4000 + 7
    table = parse_text(f"parts = [[1000, {big}], [1001, {3 * big}]];")
    assert table.get(1000) == big % 4
    assert table.get(1001) == (3 * big) % 4


def test_parse_text_errors_carry_position() -> None:
    with pytest.raises(TableFormatError) as excinfo:
        parse_text("parts = [[1, 1],\n  [2 2]];")
    assert excinfo.value.line == 2
    assert excinfo.value.offset == 6
    with pytest.raises(TableFormatError):
        parse_text("parts = [[1, 1]]")
    with pytest.raises(TableFormatError):
        parse_text("values = [];")


def test_parse_text_duplicates() -> None:
    assert parse_text("parts = [[7, 15], [7, 15]];").get(7) == 3
    with pytest.raises(TableFormatError):
        parse_text("parts = [[7, 15], [7, 14]];")


def test_known_prefix_is_enforced() -> None:
    with pytest.raises(TableFormatError):
        parse_text("parts = [[4, 4]];")


def test_ingest_text_file(tmp_path: Path) -> None:
    path = tmp_path / 'values.txt'
    path.write_text("parts = [[0, 1],\n [4, 5],\n [101238639001, 437441385]];\n", encoding='utf-8')
    table = ingest_text(path)
    assert table.get(101238639001) == 1
    assert table.get(4) == 1
    empty = tmp_path / 'empty.txt'
    empty.write_text('', encoding='utf-8')
    with pytest.raises(TableFormatError):
        ingest_text(empty)


def test_ingest_text_reports_position_of_malformed_pair(tmp_path: Path) -> None:
    path = tmp_path / 'broken.txt'
    path.write_text("parts = [[0, 1],\n [4, 5] [7, 15]];\n", encoding='utf-8')
    with pytest.raises(TableFormatError) as info:
        ingest_text(path)
    assert (info.value.line, info.value.offset) == (2, 9)
    # the mapping is released, so the file can be rewritten and read again
    path.write_text("parts = [[0, 1],\n [4, 5], [7, 15]];\n", encoding='utf-8')
    assert ingest_text(path).get(7) == 3


def test_binary_round_trip(tmp_path: Path) -> None:
    path = tmp_path / 'one.p4tb'
    table = PartitionTable.from_mapping({0: 1})
    save_binary(table, path)
    assert load_binary(path) == table
    assert path.stat().st_size == 13 + 9


def test_binary_round_trip_large(tmp_path: Path) -> None:
    rng = np.random.default_rng(5)
    keys = np.unique(rng.integers(5, 2 ** 40, size=10 ** 6, dtype=np.uint64))
    table = PartitionTable(keys, rng.integers(0, 4, size=len(keys), dtype=np.uint8))
    path = tmp_path / 'big.p4tb'
    save_binary(table, path)
    assert load_binary(path) == table


def test_text_then_binary_is_identity(tmp_path: Path) -> None:
    table = parse_text("parts = [[0, 1], [1, 1], [2, 2], [3, 3], [50, 204226]];")
    path = tmp_path / 't.p4tb'
    save_binary(table, path)
    assert load_binary(path) == table


def test_binary_rejects_corruption(tmp_path: Path) -> None:
    path = tmp_path / 'x.p4tb'
    save_binary(PartitionTable.from_mapping({0: 1, 1: 1, 2: 2}), path)
    data = path.read_bytes()

    bad_magic = tmp_path / 'magic.p4tb'
    bad_magic.write_bytes(b'XXXX' + data[4:])
    with pytest.raises(TableFormatError, match='magic'):
        load_binary(bad_magic)

    truncated = tmp_path / 'short.p4tb'
    truncated.write_bytes(data[:-3])
    with pytest.raises(TableFormatError, match='truncated'):
        load_binary(truncated)

    records = bytearray(data)
    records[13:22], records[22:31] = data[22:31], data[13:22]
    unsorted = tmp_path / 'unsorted.p4tb'
    unsorted.write_bytes(bytes(records))
    with pytest.raises(TableFormatError, match='sorted'):
        load_binary(unsorted)


def test_tsv_export(tmp_path: Path) -> None:
    path = tmp_path / 'values.tsv'
    export_tsv(PartitionTable.from_mapping({3: 3, 1: 1}), path)
    assert path.read_text(encoding='utf-8') == "1\t1\n3\t3\n"


def test_engine_policies() -> None:
    table = PartitionTable.from_mapping({4: 1, 10 ** 9: 2})
    engine = PartitionEngine(table=table, policy=('table', 'batch', 'hrr'))
    assert engine.partition_mod4(4) == 1
    assert engine.partition_mod4(10 ** 9) == 2
    assert engine._batch is None
    for policy in (('batch',), ('hrr',), ('exact',)):
        assert engine.partition_mod4(4, policy) == 1
    with pytest.raises(PartitionSourceError):
        engine.partition_mod4(5, ('table',))


def test_engine_cross_check() -> None:
    engine = PartitionEngine(policy=('batch', 'hrr', 'exact'), cross_check=True)
    assert engine.partition_mod4(10 ** 4) == exact(10 ** 4) % 4
    lying = PartitionEngine(table=PartitionTable.from_mapping({6: 0}), policy=('table', 'batch'), cross_check=True)
    with pytest.raises(PartitionMismatchError):
        lying.partition_mod4(6)


def test_engine_bulk_residues(memory_db) -> None:
    engine = PartitionEngine(policy=('batch', 'hrr'), batch_limit=1000, db=memory_db)
    ns = [1, 5, 999, 1500, 2000]
    result = engine.residues(ns)
    assert result == {n: exact(n) % 4 for n in ns}
    assert memory_db.count_partition_residues() == 2
    assert memory_db.get_partition_residue(2000) == exact(2000) % 4


@pytest.mark.extended
def test_hrr_largest_needed_value() -> None:
    if hasattr(sys, 'set_int_max_str_digits'):
        sys.set_int_max_str_digits(0)
    value = hrr(101238639001)
    text = str(value)
    assert len(text) == 354444
    assert text[:8] == '43744138'
    assert text[-8:] == '19363129'
    assert value % 4 == 1
