# linalg/relations.py

import json
from typing import NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from congruence.pipeline import DiscriminantSet, assemble
from linalg.howell import kernel
from logs import get_logger
from utils import k_of
from utils.errors import InputError

log = get_logger(__name__)


class RelationVector(BaseModel):
    """Coefficients c_D, one per member of a discriminant set, modulo 4 (or 2 once halved)."""

    dset: DiscriminantSet
    coeffs: list[int]
    modulus: int = 4
    verified: bool = False

    @model_validator(mode='after')
    def _shape(self):
        if self.modulus not in (2, 4):
            raise ValueError("modulus must be 2 or 4")
        if len(self.coeffs) != self.dset.size:
            raise ValueError(f"{len(self.coeffs)} coefficients for {self.dset.size} discriminants")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            raise ValueError(f"coefficients must lie in 0..{self.modulus - 1}")
        return self

    @classmethod
    def from_terms(cls, dset, terms, modulus=4):
        """Build from (D, c) pairs; members not named get coefficient 0."""
        coeffs = [0] * dset.size
        for D, c in terms:
            coeffs[dset.index(int(D))] = int(c) % modulus
        return cls(dset=dset, coeffs=coeffs, modulus=modulus)

    def terms(self):
        return [(D, c) for D, c in zip(self.dset.members, self.coeffs) if c]

    def is_zero(self):
        return not any(self.coeffs)

    @property
    def max_D(self):
        terms = self.terms()
        return terms[-1][0] if terms else None

    @property
    def max_k(self):
        return None if self.max_D is None else k_of(self.max_D)

    def halved(self):
        """c_D / 2 modulo 2; every coefficient must be even."""
        if self.modulus != 4 or any(c % 2 for c in self.coeffs):
            raise ValueError("only relations with even coefficients can be halved")
        return RelationVector(dset=self.dset, coeffs=[c // 2 for c in self.coeffs], modulus=2)


class RelationSummary(NamedTuple):
    term_count: int
    counts: list
    k_lists: dict


def summary(v):
    """Term count, number of coefficients equal to 1, 2, 3, and the k = (D+1)/24 per coefficient."""
    k_lists = {c: [k_of(D) for D, value in v.terms() if value == c] for c in (1, 2, 3)}
    counts = [len(k_lists[c]) for c in (1, 2, 3)]
    return RelationSummary(sum(counts), counts, k_lists)


def verify_relation(v, prec=None, engine=None, matrix=None, progress=False):
    """
    Check sum_D c_D hol_norm(D) = 0 mod v.modulus through q^prec.

    Args:
        v (RelationVector): The relation; modulus 2 for a halved one.
        prec (int): Last exponent checked; defaults to the set's Sturm bound plus margin.
        engine (PartitionEngine): Partition source.
        matrix (numpy.ndarray): Pre-assembled columns for v.dset, at least prec rows.
        progress (bool): Show tqdm bars.

    Returns:
        bool: True iff every checked coefficient vanishes. A check below the
        Sturm bound is only partial and is logged as such.
    """
    prec = v.dset.default_prec() if prec is None else prec
    if matrix is None:
        matrix = assemble(v.dset, prec, engine, progress)
    combined = (matrix[:prec].astype(np.int64) @ np.asarray(v.coeffs, dtype=np.int64)) % v.modulus
    holds = not combined.any()
    if prec < v.dset.sturm:
        log.info("partial check through q^%d (Sturm bound %d): %s", prec, v.dset.sturm, holds)
    else:
        log.info("full check through q^%d: %s", prec, holds)
    if holds and prec >= v.dset.sturm:
        v.verified = True
    return holds


class _RelationEntry(BaseModel):
    coeffs: list[tuple[int, int]]


class _RelationFile(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    members: list[int] = Field(alias='set')
    hS: int
    sturm: int
    relations: list[_RelationEntry]


def write_relations(path, dset, relations):
    """Write relations as JSON: set, hS, sturm and per relation the nonzero (D, c) pairs, D ascending."""
    document = _RelationFile(
        members=dset.members,
        hS=dset.hS,
        sturm=dset.sturm,
        relations=[_RelationEntry(coeffs=v.terms()) for v in relations],
    )
    with open(path, 'w', encoding='utf-8') as file:
        json.dump(document.model_dump(by_alias=True), file, indent=1)


def read_relations(path):
    """Inverse of ``write_relations``; returns (DiscriminantSet, [RelationVector])."""
    try:
        with open(path, 'r', encoding='utf-8') as file:
            document = _RelationFile.model_validate(json.load(file))
        dset = DiscriminantSet(members=document.members, hS=document.hS, sturm=document.sturm)
        relations = [RelationVector.from_terms(dset, entry.coeffs) for entry in document.relations]
    except (OSError, json.JSONDecodeError, ValidationError, ValueError) as exc:
        raise InputError(f"cannot read relations from {path}: {exc}") from exc
    return dset, relations


def kernel_relations(matrix, dset):
    """Canonical kernel generators of an assembled matrix as RelationVectors over ``dset``."""
    return [RelationVector(dset=dset, coeffs=list(v)) for v in kernel(matrix)]
