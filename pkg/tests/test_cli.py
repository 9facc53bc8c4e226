from __future__ import annotations

from pathlib import Path

import pytest

from cli import EXIT_INPUT, EXIT_OK, run
from partitions import exact, load_table


def test_partition(capsys) -> None:
    assert run(['partition', '4']) == EXIT_OK
    assert capsys.readouterr().out.strip() == '5'
    assert run(['partition', '100', '--method', 'hrr']) == EXIT_OK
    assert capsys.readouterr().out.strip() == '190569292'
    assert run(['partition', '100', '--mod4']) == EXIT_OK
    assert capsys.readouterr().out.strip() == '0'


def test_partition_rejects_bad_arguments() -> None:
    assert run(['partition', '-1']) == EXIT_INPUT
    assert run(['partition', '-1', '--mod4']) == EXIT_INPUT
    assert run(['partition', str(10 ** 6 + 1)]) == EXIT_INPUT


def test_partition_mod4_past_recurrence_limit_uses_hrr(monkeypatch, capsys) -> None:
    def no_batch(n):
        raise AssertionError(f"sieve of length {n} requested")

    monkeypatch.setattr('cli.commands.DEFAULT_BATCH_LIMIT', 1000)
    monkeypatch.setattr('cli.commands.batch_mod4', no_batch)
    assert run(['partition', '2000', '--mod4']) == EXIT_OK
    assert capsys.readouterr().out.strip() == str(exact(2000) % 4)


def test_partition_from_table(tmp_path: Path, capsys) -> None:
    path = tmp_path / 'values.txt'
    path.write_text("parts = [[4, 5], [5, 7]];\n", encoding='utf-8')
    assert run(['partition', '5', '--method', 'table', '--values', str(path)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == '3'
    assert run(['partition', '5', '--method', 'table']) == EXIT_INPUT


def test_classno(capsys) -> None:
    assert run(['classno', '23']) == EXIT_OK
    assert capsys.readouterr().out.strip() == '3'
    assert run(['classno', '24']) == EXIT_INPUT


def test_hilbert(capsys) -> None:
    assert run(['hilbert', '23', '--mod4']) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == '1 3491750 -5151296875 12771880859375'
    assert lines[1] == '1 2 1 3'


def test_named_series(capsys) -> None:
    assert run(['series', '--name', 'Delta', '--prec', '4']) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ['1\t1', '2\t-24', '3\t252']
    assert run(['series', '--name', 'Delta', '--prec', '4', '--mod4']) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ['1\t1', '2\t0', '3\t0']


def test_series_errors() -> None:
    assert run(['series', '--prec', '4']) == EXIT_INPUT
    assert run(['series', 'PD', '--prec', '4']) == EXIT_INPUT
    assert run(['series', '--name', 'j', '--prec', '4', '--mod4']) == EXIT_OK


def test_unknown_identity_is_a_usage_error() -> None:
    with pytest.raises(SystemExit):
        run(['verify-identity', '--id', '3'])


def test_ingest(tmp_path: Path, capsys) -> None:
    text = tmp_path / 'values.txt'
    text.write_text("parts = [[0, 1], [4, 5], [7, 15]];\n", encoding='utf-8')
    out = tmp_path / 'values.p4tb'
    tsv = tmp_path / 'values.tsv'
    assert run(['ingest', '--text', str(text), '--out', str(out), '--tsv', str(tsv)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == '3 residues'
    assert load_table(out) == load_table(text)
    assert tsv.exists()


def test_ingest_rejects_malformed_text(tmp_path: Path) -> None:
    text = tmp_path / 'bad.txt'
    text.write_text("parts = [[0, 1] [4, 5]];\n", encoding='utf-8')
    assert run(['ingest', '--text', str(text)]) == EXIT_INPUT


def test_normalize(tmp_path: Path, capsys) -> None:
    members = tmp_path / 'set.json'
    members.write_text('[23, 47]', encoding='utf-8')
    assert run(['normalize', '--D', '23', '--set', str(members), '--prec', '6']) == EXIT_OK
    coeffs = dict(line.split('\t') for line in capsys.readouterr().out.splitlines())
    # Delta^5 H(1/Delta) starts at q^2 and P(23; q) at q
    assert all(coeffs.get(str(n), '0') == '0' for n in range(3))
    assert coeffs['3'] == '1'
    members.write_text('[23, 24]', encoding='utf-8')
    assert run(['normalize', '--D', '23', '--set', str(members), '--prec', '6']) == EXIT_INPUT


def test_normalize_outside_the_set(tmp_path: Path) -> None:
    members = tmp_path / 'set.json'
    members.write_text('[23]', encoding='utf-8')
    assert run(['normalize', '--D', '47', '--set', str(members), '--prec', '6']) == EXIT_INPUT


def test_borcherds_check(capsys) -> None:
    assert run(['borcherds-check', '--D', '23', '--prec', '40']) == EXIT_OK
    assert 'True' in capsys.readouterr().out
