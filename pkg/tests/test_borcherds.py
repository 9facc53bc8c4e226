from __future__ import annotations

from fractions import Fraction

import pytest
from mpmath import mp

from borcherds import (
    BorcherdsLogSeries,
    QuadIrrational,
    borcherds_log,
    congruence_check,
    exponent,
    gauss_sum_check,
    l_expansion,
    l_via_product,
    psi_log,
)
from congruence import twisted_p
from modular import EXACT, MOD4, series_exponents
from partitions import PartitionEngine, PartitionTable
from quadforms import eligible_upto
from utils.errors import IneligibleDiscriminantError, InconsistencyError


def test_psi_log_coefficients() -> None:
    series = psi_log(23, 1, 50)
    assert series.coefficient(1) == QuadIrrational(Fraction(0), Fraction(1))
    assert series.coefficient(23).is_zero()
    assert series.coefficient(2) == QuadIrrational(Fraction(0), Fraction(1, 2))
    assert series.coefficient(0).is_zero()
    shifted = psi_log(23, 3, 50)
    assert shifted.coefficient(3).v == 1
    assert shifted.coefficient(4).is_zero()


def test_psi_log_rejects_ineligible() -> None:
    with pytest.raises(IneligibleDiscriminantError):
        psi_log(24, 1, 10)


def test_gauss_sum_23() -> None:
    value = gauss_sum_check(23)
    with mp.workdps(30):
        assert abs(value.real) < 1e-20
        assert abs(value.imag + mp.sqrt(23)) < 1e-20
    assert abs(gauss_sum_check(23, conjugate=True).imag - mp.sqrt(23)) < 1e-10


def test_gauss_sum_modulus() -> None:
    for D in (23, 47, 71):
        assert abs(abs(gauss_sum_check(D)) - mp.sqrt(D)) < 1e-10


def test_gauss_sums_up_to_200() -> None:
    for D in eligible_upto(200).tolist():
        gauss_sum_check(D, digits=20)


def test_exponents() -> None:
    assert exponent(23, 1) == 1
    assert exponent(23, 2) == -56
    for m in (3, 6, 9, 12, 15):
        assert exponent(23, m) == 0


def test_borcherds_log_is_purely_imaginary() -> None:
    series = borcherds_log(23, 60)
    assert series.is_purely_imaginary()
    assert series.coefficient(1).v == 1


def test_l_via_product_leading_terms() -> None:
    L = l_via_product(23, 40)
    assert L.coefficient(1) == 1
    assert L.coefficient(2) == -111
    assert L.coefficient(0) == 0


def test_l_expansion_leading_terms() -> None:
    L = l_expansion(23, 40)
    assert [L.coefficient(n) for n in range(3)] == [0, 1, -111]


def test_both_constructions_agree() -> None:
    assert l_expansion(23, 80) == l_via_product(23, 80)


@pytest.mark.slow
@pytest.mark.parametrize('D', [23, 47, 71, 95])
def test_both_constructions_agree_to_200(D: int) -> None:
    assert l_expansion(D, 200) == l_via_product(D, 200)


def test_over_root_requires_integral_imaginary_parts() -> None:
    half = BorcherdsLogSeries(23, [QuadIrrational(), QuadIrrational(Fraction(0), Fraction(1, 2))], 2)
    with pytest.raises(InconsistencyError):
        half.over_root()
    real = BorcherdsLogSeries(23, [QuadIrrational(), QuadIrrational(Fraction(1), Fraction(0))], 2)
    assert not real.is_purely_imaginary()
    with pytest.raises(InconsistencyError):
        real.over_root()


def test_congruence_23_and_47(batch_engine) -> None:
    assert congruence_check(23, 300, batch_engine)
    assert congruence_check(47, 300, batch_engine)


def test_congruence_with_exact_exponents(batch_engine) -> None:
    assert congruence_check(23, 100, batch_engine, exact=True)


def test_mod4_expansion_matches_exact_reduction() -> None:
    assert l_expansion(23, 100, 'mod4') == l_expansion(23, 100).reduce()


def test_series_exponents_agree_with_partition_route() -> None:
    from_series = series_exponents(23, 60, EXACT)
    assert from_series == [0] + [exponent(23, m) for m in range(1, 61)]
    assert series_exponents(23, 60, MOD4) == [e % 4 for e in from_series]
    assert series_exponents(47, 0) == [0]


def test_congruence_detects_a_wrong_partition_residue() -> None:
    # p(24) = 1575 enters the q^5 coefficient through m = 5
    truthful = PartitionEngine(policy=('batch',), cross_check=False)
    lying = PartitionEngine(table=PartitionTable.from_mapping({24: 0}), policy=('table', 'batch'), cross_check=False)
    assert congruence_check(23, 40, truthful)
    assert twisted_p(23, 40, lying) != twisted_p(23, 40, truthful)
    assert not congruence_check(23, 40, lying)
    assert not congruence_check(23, 40, lying, exact=True)


@pytest.mark.slow
def test_congruence_for_all_discriminants_up_to_500(batch_engine) -> None:
    for D in eligible_upto(500).tolist():
        assert congruence_check(D, 300, batch_engine), D
