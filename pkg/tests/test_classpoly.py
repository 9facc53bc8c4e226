from __future__ import annotations

import random

import mpmath
import pytest
from mpmath import mp
from pydantic import ValidationError

from classpoly import (
    HilbertClassPolynomial,
    PrecisionPolicy,
    hilbert,
    j_at,
    precision_estimate,
    resubstitution_residual,
    stability_check,
)
from quadforms import QuadForm, class_number, eligible_upto, heegner_points
from utils.errors import CertificationError

H23 = [1, 3491750, -5151296875, 12771880859375]


def test_hilbert_23() -> None:
    poly = hilbert(23)
    assert poly.coeffs == H23
    assert poly.degree == 3
    assert poly.mod4()[-1] == 3


def test_hilbert_23_residual_at_50_digits() -> None:
    with mp.workdps(50):
        roots = [j_at(point, 50) for point in heegner_points(23)]
        assert resubstitution_residual(H23, roots) < mpmath.mpf(10) ** -20


def test_j_matches_kleinj() -> None:
    with mp.workdps(40):
        for form in (QuadForm(1, 1, 6), QuadForm(2, 1, 3), QuadForm(2, -1, 3)):
            point = form.heegner_point()
            expected = 1728 * mpmath.kleinj(point.tau())
            assert abs(j_at(point, 40) - expected) < abs(expected) * mpmath.mpf(10) ** -30


def test_j_real_root_of_h23() -> None:
    with mp.workdps(50):
        j = j_at(QuadForm(1, 1, 6).heegner_point(), 50)
        assert abs(j.imag) < mpmath.mpf(10) ** -30
        assert -3.5e6 < j.real < -3.49e6


def test_conjugate_heegner_points_give_conjugate_values() -> None:
    with mp.workdps(40):
        j = j_at(QuadForm(2, 1, 3).heegner_point(), 40)
        partner = j_at(QuadForm(2, 1, 3).heegner_point().conjugate_partner(), 40)
        assert abs(j - mp.conj(partner)) < mpmath.mpf(10) ** -25


def test_j_at_ten_i_is_dominated_by_inverse_nome() -> None:
    with mp.workdps(60):
        j = j_at(mp.mpc(0, 10), 60)
        q = mp.exp(-20 * mp.pi)
        assert abs(j.imag) < mpmath.mpf(10) ** -30
        assert abs(j.real - (1 / q + 744 + 196884 * q)) < 1


def test_j_at_rejects_lower_half_plane() -> None:
    with pytest.raises(CertificationError):
        j_at(mp.mpc(0, -1), 20)


def test_degree_equals_class_number() -> None:
    for D in eligible_upto(1000).tolist():
        poly = hilbert(D)
        assert poly.degree == class_number(D)
        assert poly.coeffs[0] == 1


@pytest.mark.slow
def test_certification_up_to_2399() -> None:
    for D in eligible_upto(2399).tolist():
        assert hilbert(D).degree == class_number(D)


@pytest.mark.slow
def test_stability_under_precision_doubling() -> None:
    rng = random.Random(7)
    for D in rng.sample(eligible_upto(2399).tolist(), 10):
        assert stability_check(D)


def test_insufficient_precision_is_not_rounded_blindly() -> None:
    with pytest.raises(CertificationError):
        hilbert(719, PrecisionPolicy(digits=16, max_retries=0))


def test_default_precision_from_height() -> None:
    assert precision_estimate(23) == 78
    assert precision_estimate(23, guard=0) == 14
    assert hilbert(71).digits == precision_estimate(71)


def test_low_precision_retries_up_to_certification() -> None:
    assert hilbert(23, PrecisionPolicy(digits=16, max_retries=0)).coeffs == H23
    retried = hilbert(71, PrecisionPolicy(digits=16, max_retries=2))
    assert retried.digits > 16
    assert retried.coeffs == hilbert(71).coeffs


def test_policy_validation() -> None:
    with pytest.raises(ValidationError):
        PrecisionPolicy(tolerance=0.6)
    with pytest.raises(ValidationError):
        HilbertClassPolynomial(D=23, coeffs=[2, 1])


def test_database_cache(memory_db) -> None:
    first = hilbert(47, db=memory_db)
    assert memory_db.get_class_polynomial(47) == first.coeffs
    assert hilbert(47, db=memory_db).coeffs == first.coeffs
