from __future__ import annotations

import json

import numpy as np
import pytest
from pydantic import ValidationError

from congruence import DiscriminantSet
from linalg import (
    RelationVector,
    annihilates,
    brute_kernel,
    howell,
    kernel,
    kernel_relations,
    last_nonzero,
    read_relations,
    span,
    summary,
    verify_relation,
    write_relations,
)
from utils.errors import InputError


def test_howell_small_cases() -> None:
    assert (howell(np.eye(3, dtype=np.int64)) == np.eye(3, dtype=np.int64)).all()
    assert howell([[2]]).tolist() == [[2]]
    assert howell([[3, 1]]).tolist() == [[1, 3]]
    assert howell(np.zeros((2, 3))).shape == (0, 3)


def test_howell_keeps_two_torsion() -> None:
    # span of (2, 1) contains (0, 2), which needs its own row
    H = howell([[2, 1]])
    assert span(H, 2) == span([[2, 1]], 2)
    assert len(H) == 2


def test_howell_preserves_span() -> None:
    rng = np.random.default_rng(7)
    for _ in range(30):
        M = rng.integers(0, 4, size=(4, 4))
        assert span(howell(M), 4) == span(M, 4)


def test_kernel_of_row() -> None:
    assert kernel([[1, 3]]) == [(1, 1)]


def test_kernel_of_zero_matrix_is_everything() -> None:
    gens = kernel(np.zeros((2, 2), dtype=np.int64))
    assert len(span(gens, 2)) == 16


def test_kernel_of_identity_is_trivial() -> None:
    assert kernel(np.eye(4, dtype=np.int64)) == []


def test_kernel_matches_enumeration() -> None:
    rng = np.random.default_rng(2024)
    for _ in range(100):
        ncols = int(rng.integers(1, 7))
        nrows = int(rng.integers(1, 7))
        M = rng.integers(0, 4, size=(nrows, ncols))
        # bias towards even entries so 2-torsion shows up
        M[rng.random(M.shape) < 0.4] &= 2
        gens = kernel(M)
        assert all(annihilates(M, v) for v in gens)
        assert span(gens, ncols) == brute_kernel(M)


def test_kernel_generators_are_ordered() -> None:
    M = [[1, 1, 1, 1], [0, 2, 0, 2]]
    gens = kernel(M)
    keys = [(last_nonzero(v), v) for v in gens]
    assert keys == sorted(keys)
    assert len({last_nonzero(v) for v in gens}) == len(gens)


def test_brute_kernel_limit() -> None:
    with pytest.raises(ValueError):
        brute_kernel(np.zeros((1, 9)))


def _dset() -> DiscriminantSet:
    return DiscriminantSet.of([23, 47])


def test_relation_vector_validation() -> None:
    with pytest.raises(ValidationError):
        RelationVector(dset=_dset(), coeffs=[1])
    with pytest.raises(ValidationError):
        RelationVector(dset=_dset(), coeffs=[1, 4])
    with pytest.raises(ValidationError):
        RelationVector(dset=_dset(), coeffs=[1, 1], modulus=3)


def test_relation_terms_and_max() -> None:
    v = RelationVector.from_terms(_dset(), [(47, 3)])
    assert v.coeffs == [0, 3]
    assert v.terms() == [(47, 3)]
    assert v.max_D == 47
    assert v.max_k == 2
    zero = RelationVector(dset=_dset(), coeffs=[0, 0])
    assert zero.is_zero()
    assert zero.max_D is None


def test_summary() -> None:
    assert summary(RelationVector(dset=_dset(), coeffs=[0, 0])) == (0, [0, 0, 0], {1: [], 2: [], 3: []})
    stats = summary(RelationVector(dset=_dset(), coeffs=[2, 3]))
    assert stats.term_count == 2
    assert stats.counts == [0, 1, 1]
    assert stats.k_lists == {1: [], 2: [1], 3: [2]}


def test_halved() -> None:
    v = RelationVector(dset=_dset(), coeffs=[2, 0]).halved()
    assert v.coeffs == [1, 0]
    assert v.modulus == 2
    with pytest.raises(ValueError):
        RelationVector(dset=_dset(), coeffs=[1, 2]).halved()


def test_verify_relation_with_given_matrix() -> None:
    matrix = np.array([[1, 3], [2, 2], [0, 0]], dtype=np.uint8)
    v = RelationVector(dset=_dset(), coeffs=[1, 1])
    assert verify_relation(v, 3, matrix=matrix)
    # 3 rows is below the Sturm bound of the set
    assert not v.verified
    assert not verify_relation(RelationVector(dset=_dset(), coeffs=[1, 0]), 3, matrix=matrix)


def test_even_relation_halves_to_mod2_relation() -> None:
    matrix = np.array([[1, 1], [3, 1]], dtype=np.uint8)
    v = RelationVector(dset=_dset(), coeffs=[2, 2])
    assert verify_relation(v, 2, matrix=matrix)
    assert verify_relation(v.halved(), 2, matrix=matrix)


def test_kernel_relations() -> None:
    matrix = np.array([[1, 3], [2, 2]], dtype=np.uint8)
    relations = kernel_relations(matrix, _dset())
    assert [r.coeffs for r in relations] == [[1, 1]]


def test_relation_file(tmp_path) -> None:
    dset = _dset()
    path = tmp_path / 'relations.json'
    write_relations(path, dset, [RelationVector(dset=dset, coeffs=[1, 3])])
    document = json.loads(path.read_text(encoding='utf-8'))
    assert document['set'] == [23, 47]
    assert document['relations'] == [{'coeffs': [[23, 1], [47, 3]]}]
    loaded_set, relations = read_relations(path)
    assert loaded_set == dset
    assert relations[0].coeffs == [1, 3]


def test_bad_relation_file(tmp_path) -> None:
    path = tmp_path / 'broken.json'
    path.write_text('{"set": [23], "hS": 3}', encoding='utf-8')
    with pytest.raises(InputError):
        read_relations(path)
    with pytest.raises(InputError):
        read_relations(tmp_path / 'missing.json')
