# partitions/table.py

import mmap
import os

import numpy as np
import regex

from logs import get_logger
from utils.errors import TableFormatError

log = get_logger(__name__)

MAGIC = b'P4TB'
VERSION = 1
HEADER_SIZE = 13
RECORD_DTYPE = np.dtype([('n', '<u8'), ('v', 'u1')])

_KNOWN_PREFIX = (1, 1, 2, 3, 1)

_TOKEN = regex.compile(
    rb'(?P<ws>\s+)|(?P<word>[A-Za-z_]\w*)|(?P<int>[-+]?\d+)|(?P<punct>[=\[\],;])|(?P<bad>.)',
    regex.DOTALL,
)


class PartitionTable:
    """
    Sorted map n -> p(n) mod 4.

    Parameters:
    - keys: strictly increasing nonnegative integers.
    - values: residues in {0, 1, 2, 3}, aligned with keys.
    - source: 'ingested-text', 'ingested-binary' or 'computed'.
    """

    def __init__(self, keys, values, source='computed'):
        keys = np.asarray(keys, dtype=np.uint64)
        values = np.asarray(values, dtype=np.uint8)
        if keys.shape != values.shape:
            raise TableFormatError("keys and values differ in length")
        if len(keys) > 1 and not np.all(keys[1:] > keys[:-1]):
            raise TableFormatError("keys are not strictly increasing")
        if np.any(values > 3):
            raise TableFormatError("values must be residues modulo 4")
        self.keys = keys
        self.values = values
        self.source = source
        self._check_known_prefix()

    def _check_known_prefix(self):
        for n, expected in enumerate(_KNOWN_PREFIX):
            got = self.get(n)
            if got is not None and got != expected:
                raise TableFormatError(f"p({n}) mod 4 should be {expected}, table has {got}")

    @classmethod
    def from_mapping(cls, mapping, source='computed'):
        items = sorted((int(n), int(v) % 4) for n, v in mapping.items())
        return cls([n for n, _ in items], [v for _, v in items], source)

    @classmethod
    def from_array(cls, residues, start=0, source='computed'):
        residues = np.asarray(residues, dtype=np.uint8)
        return cls(np.arange(start, start + len(residues), dtype=np.uint64), residues, source)

    def __len__(self):
        return len(self.keys)

    def __contains__(self, n):
        return self.get(n) is not None

    def get(self, n):
        if n < 0 or len(self.keys) == 0:
            return None
        i = int(np.searchsorted(self.keys, np.uint64(n)))
        if i < len(self.keys) and int(self.keys[i]) == n:
            return int(self.values[i])
        return None

    def lookup(self, ns):
        """Vectorised lookup; returns (found_mask, values) aligned with ns."""
        ns = np.asarray(ns, dtype=np.uint64)
        if len(self.keys) == 0:
            return np.zeros(len(ns), dtype=bool), np.zeros(len(ns), dtype=np.uint8)
        idx = np.searchsorted(self.keys, ns)
        idx_clipped = np.minimum(idx, len(self.keys) - 1)
        found = self.keys[idx_clipped] == ns
        return found, np.where(found, self.values[idx_clipped], 0).astype(np.uint8)

    def items(self):
        return zip(self.keys.tolist(), self.values.tolist())

    def merged(self, other):
        """Union of two tables; conflicting residues are an error."""
        mapping = dict(self.items())
        for n, v in other.items():
            if mapping.get(n, v) != v:
                raise TableFormatError(f"conflicting residues for p({n})")
            mapping[n] = v
        return PartitionTable.from_mapping(mapping, self.source)

    def __eq__(self, other):
        if not isinstance(other, PartitionTable):
            return NotImplemented
        return np.array_equal(self.keys, other.keys) and np.array_equal(self.values, other.values)

    __hash__ = None

    def __repr__(self):
        return f"PartitionTable({len(self)} entries, source={self.source!r})"


def _residue_of_decimal(token):
    """Residue mod 4 of a decimal integer token without converting it whole."""
    negative = token.startswith(b'-')
    digits = token.lstrip(b'+-')
    r = int(digits[-2:]) % 4
    return (-r) % 4 if negative else r


def _position(data, offset):
    prefix = bytes(data[:offset])
    line = prefix.count(b'\n') + 1
    line_start = prefix.rfind(b'\n') + 1
    return line, offset - line_start + 1


def _tokens(data):
    for match in _TOKEN.finditer(data):
        kind = match.lastgroup
        if kind == 'ws':
            continue
        yield kind, match.group(), match.start()
    yield 'eof', b'', len(data)


def _read_pairs(data, tokens):
    def fail(message, offset):
        line, column = _position(data, offset)
        raise TableFormatError(message, line, column)

    def expect(kind, text=None):
        got_kind, got_text, offset = next(tokens)
        if got_kind != kind or (text is not None and got_text != text):
            shown = got_text.decode(errors='replace')[:20] or 'end of file'
            wanted = text.decode() if text is not None else kind
            fail(f"expected {wanted!r}, found {shown!r}", offset)
        return got_text, offset

    word, offset = expect('word')
    if word != b'parts':
        fail(f"expected 'parts', found {word.decode(errors='replace')!r}", offset)
    expect('punct', b'=')
    expect('punct', b'[')

    mapping = {}
    kind, text, offset = next(tokens)
    if not (kind == 'punct' and text == b']'):
        while True:
            if not (kind == 'punct' and text == b'['):
                fail(f"expected '[' opening a pair, found {text.decode(errors='replace')[:20]!r}", offset)
            n_text, n_offset = expect('int')
            n = int(n_text)
            if n < 0:
                fail("partition argument must be nonnegative", n_offset)
            expect('punct', b',')
            v_text, _ = expect('int')
            expect('punct', b']')
            v = _residue_of_decimal(v_text)
            if mapping.get(n, v) != v:
                fail(f"duplicate key {n} with conflicting value", n_offset)
            mapping[n] = v
            kind, text, offset = next(tokens)
            if kind == 'punct' and text == b']':
                break
            if not (kind == 'punct' and text == b','):
                fail(f"expected ',' or ']', found {text.decode(errors='replace')[:20]!r}", offset)
            kind, text, offset = next(tokens)
    expect('punct', b';')
    expect('eof')
    return mapping


def _parse_parts(data):
    tokens = _tokens(data)
    try:
        return _read_pairs(data, tokens)
    finally:
        # drops the scanner and its export of data so an mmap can be closed
        tokens.close()


def parse_text(text):
    """Parse the ``parts = [[n, p(n)], ...];`` format from a string or bytes."""
    if isinstance(text, str):
        text = text.encode()
    return PartitionTable.from_mapping(_parse_parts(text), source='ingested-text')


def ingest_text(path):
    """
    Read a ``parts = [[n, value], ...];`` file; values are reduced mod 4.

    Large files are memory mapped and never decoded as a whole.
    """
    size = os.path.getsize(path)
    with open(path, 'rb') as handle:
        if size == 0:
            return PartitionTable.from_mapping(_parse_parts(b''), source='ingested-text')
        with mmap.mmap(handle.fileno(), 0, access=mmap.ACCESS_READ) as data:
            mapping = _parse_parts(data)
    table = PartitionTable.from_mapping(mapping, source='ingested-text')
    log.info("ingested %d partition residues from %s", len(table), path)
    return table


def save_binary(table, path):
    records = np.empty(len(table), dtype=RECORD_DTYPE)
    records['n'] = table.keys
    records['v'] = table.values
    with open(path, 'wb') as handle:
        handle.write(MAGIC)
        handle.write(bytes([VERSION]))
        handle.write(np.array([len(table)], dtype='<u8').tobytes())
        handle.write(records.tobytes())


def load_binary(path):
    with open(path, 'rb') as handle:
        data = handle.read()
    if len(data) < HEADER_SIZE:
        raise TableFormatError("truncated header")
    if data[:4] != MAGIC:
        raise TableFormatError("bad magic bytes")
    if data[4] != VERSION:
        raise TableFormatError(f"unsupported version {data[4]}")
    count = int(np.frombuffer(data, dtype='<u8', count=1, offset=5)[0])
    if len(data) != HEADER_SIZE + count * RECORD_DTYPE.itemsize:
        raise TableFormatError(f"truncated file: {count} records announced, {len(data) - HEADER_SIZE} payload bytes")
    records = np.frombuffer(data, dtype=RECORD_DTYPE, count=count, offset=HEADER_SIZE)
    keys = records['n'].astype(np.uint64)
    if count > 1 and not np.all(keys[1:] > keys[:-1]):
        raise TableFormatError("records are not sorted by n")
    return PartitionTable(keys, records['v'].astype(np.uint8), source='ingested-binary')


def export_tsv(table, path):
    with open(path, 'w', encoding='utf-8') as handle:
        for n, v in table.items():
            handle.write(f"{n}\t{v}\n")


def load_table(path):
    """Binary cache when the file starts with the magic bytes, text format otherwise."""
    with open(path, 'rb') as handle:
        head = handle.read(len(MAGIC))
    return load_binary(path) if head == MAGIC else ingest_text(path)
