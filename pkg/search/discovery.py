# search/discovery.py

import time
from typing import Any

import numpy as np
from pydantic import BaseModel, Field, model_validator

from config import STURM_MARGIN
from congruence.pipeline import DiscriminantSet, assemble, sturm_bound
from linalg.howell import howell
from linalg.relations import RelationVector, kernel_relations, summary, verify_relation
from logs import get_logger
from search.fixtures import IDENTITIES
from search.procedures import enumerate_set
from utils import d_of, timed
from utils.errors import InputError, VerificationError

log = get_logger(__name__)


class SearchReport(BaseModel):
    """Statistics and per-stage outputs of one pipeline run."""

    label: str
    size: int
    hS: int
    sturm: int
    prec: int
    kmax: int | None = None
    stages: dict[str, Any] = Field(default_factory=dict)
    timings: dict[str, float] = Field(default_factory=dict)

    @model_validator(mode='after')
    def _consistent(self):
        if self.sturm != sturm_bound(self.hS):
            raise ValueError("sturm must equal 12 hS + 2")
        return self

    @classmethod
    def for_set(cls, label, dset, prec, **extra):
        return cls(label=label, size=dset.size, hS=dset.hS, sturm=dset.sturm, prec=prec, **extra)

    @property
    def partial(self):
        return self.prec < self.sturm


def _timed_stage(report, name, fn, *args, **kwargs):
    start = time.perf_counter()
    with timed(log, name):
        result = fn(*args, **kwargs)
    report.timings[name] = round(time.perf_counter() - start, 3)
    return result


def find_relations(kmax, margin=STURM_MARGIN, engine=None, progress=False):
    """
    Every relation over S = {eligible D <= 24 kmax - 1}, through the Sturm bound plus ``margin``.

    Args:
        kmax (int): Largest k = (D + 1)/24.
        margin (int): Extra coefficients beyond the Sturm bound.
        engine (PartitionEngine): Partition source; must reach (D_max bound^2 + 1)/24.
        progress (bool): Show tqdm bars.

    Returns:
        tuple: (SearchReport, list[RelationVector]); the report's ``max_ks`` stage
        lists, sorted, the largest k of each canonical generator.
    """
    if kmax < 1:
        raise InputError("kmax must be positive")
    dset = enumerate_set(d_of(kmax))
    prec = dset.sturm + margin
    report = SearchReport.for_set('find-relations', dset, prec, kmax=kmax)
    matrix = _timed_stage(report, 'assemble', assemble, dset, prec, engine, progress)
    relations = _timed_stage(report, 'kernel', kernel_relations, matrix, dset)
    for v in relations:
        if not verify_relation(v, prec, matrix=matrix):
            raise VerificationError(f"kernel generator with max k = {v.max_k} does not annihilate the matrix")
    report.stages['relations'] = len(relations)
    report.stages['max_ks'] = sorted(v.max_k for v in relations)
    report.stages['summaries'] = [summary(v)._asdict() for v in relations]
    log.info("kmax = %d: #S = %d, hS = %d, %d relations", kmax, dset.size, dset.hS, len(relations))
    return report, relations


def contains_relation(relations, v):
    """True iff ``v`` lies in the Z/4-span of ``relations`` (all over the same set)."""
    basis = np.array([r.coeffs for r in relations], dtype=np.int64).reshape(-1, v.dset.size)
    before = howell(basis)
    after = howell(np.vstack([basis, np.asarray(v.coeffs, dtype=np.int64)]))
    return before.shape == after.shape and (before == after).all()


def restrict(v, dset):
    """Re-express a relation over a larger set, with zeros outside its own support."""
    return RelationVector.from_terms(dset, v.terms(), v.modulus)


def verify_identity(identity_id, prec=None, engine=None, progress=False):
    """
    Check a printed identity: set statistics, then the congruence through q^prec.

    Identity 1 is also checked modulo 2 after halving its coefficients.

    Returns:
        SearchReport: ``stages`` holds 'holds', 'holds_mod2' (identity 1) and
        the summary; ``partial`` is True below the Sturm bound.

    Raises:
        InputError: unknown identity.
        VerificationError: the set statistics disagree with the printed ones.
    """
    if identity_id not in IDENTITIES:
        raise InputError(f"unknown identity {identity_id}; expected 1 or 2")
    fixture = IDENTITIES[identity_id]
    v = fixture.relation()
    dset = v.dset
    if dset.hS != fixture.hS or dset.max_D != fixture.max_D:
        raise VerificationError(
            f"identity {identity_id}: hS = {dset.hS}, max D = {dset.max_D}; expected {fixture.hS}, {fixture.max_D}"
        )
    prec = dset.default_prec() if prec is None else prec
    report = SearchReport.for_set(f'identity-{identity_id}', dset, prec)
    matrix = _timed_stage(report, 'assemble', assemble, dset, prec, engine, progress)
    report.stages['summary'] = summary(v)._asdict()
    report.stages['max_D'] = dset.max_D
    report.stages['holds'] = verify_relation(v, prec, matrix=matrix)
    if all(c % 2 == 0 for c in v.coeffs):
        report.stages['holds_mod2'] = verify_relation(v.halved(), prec, matrix=matrix)
    return report


def identity_sum():
    """Identity 1 + identity 2 over the union of their sets."""
    union = DiscriminantSet.of([D for f in IDENTITIES.values() for D, _ in f.terms])
    total = {}
    for fixture in IDENTITIES.values():
        for D, c in fixture.terms:
            total[D] = (total.get(D, 0) + c) % 4
    return RelationVector.from_terms(union, total.items())
