from __future__ import annotations

import pytest

from modular import (
    NamedSeriesId,
    c_r,
    delta_power_mod4,
    f_coefficient,
    gen,
    omega_coefficient,
    r_component,
)
from quadforms import chi_minus12
from series import Mod4LaurentSeries
from utils.errors import UnsupportedSeriesError


def _coeffs(series, start: int, stop: int) -> list[int]:
    return [series.coefficient(n) for n in range(start, stop)]


def test_printed_expansions() -> None:
    assert _coeffs(gen('f', 5), 0, 5) == [1, 1, -2, 3, -3]
    assert _coeffs(gen('omega', 5), 0, 5) == [1, 2, 3, 4, 6]
    assert _coeffs(gen('E4', 4), 0, 4) == [1, 240, 2160, 6720]
    assert _coeffs(gen('j', 4), -1, 4) == [1, 744, 196884, 21493760, 864299970]
    assert _coeffs(gen('Delta', 6), 0, 6) == [0, 1, -24, 252, -1472, 4830]
    assert _coeffs(gen('P', 5), 0, 5) == [1, 1, 2, 3, 5]


def test_valuations_and_precisions() -> None:
    assert gen('j', 10).valuation == -1
    assert gen('DeltaInvMod4', 10, 'mod4').valuation == -1
    assert gen('Delta', 10).valuation == 1
    for name in ('P', 'f', 'omega', 'E4'):
        series = gen(name, 10)
        assert series.valuation == 0
        assert series.prec == 10
    assert gen('j', 10).prec == 10


def test_delta_inverse_mod4() -> None:
    inverse = gen(NamedSeriesId.DeltaInvMod4, 50, 'mod4')
    assert _coeffs(inverse, -1, 2) == [1, 0, 0]
    product = inverse * gen(NamedSeriesId.Delta, 52, 'mod4')
    assert product == Mod4LaurentSeries.constant_series(1, 50)
    assert gen('Delta', 60).reduce() * gen('Delta', 60).reduce().inverse() == Mod4LaurentSeries.constant_series(1, 59)


def test_delta_inverse_has_no_exact_form() -> None:
    with pytest.raises(UnsupportedSeriesError):
        gen('DeltaInvMod4', 10, 'exact')
    with pytest.raises(UnsupportedSeriesError):
        gen('theta', 10)


def test_partitions_agree_with_f_mod4() -> None:
    assert gen('P', 2000, 'mod4') == gen('f', 2000, 'mod4')


def test_exact_and_mod4_generators_agree() -> None:
    for name in ('P', 'f', 'omega', 'Delta', 'E4', 'j'):
        assert gen(name, 300).reduce() == gen(name, 300, 'mod4')


def test_e4_is_one_mod4() -> None:
    assert gen('E4', 2000, 'mod4') == Mod4LaurentSeries.constant_series(1, 2000)


def test_j_times_delta_is_e4_cubed() -> None:
    assert gen('j', 500) * gen('Delta', 501) == gen('E4', 500) ** 3


def test_omega_symmetrisations_are_even() -> None:
    omega = gen('omega', 2000)
    for combined in (omega + omega.negate_q(), omega - omega.negate_q()):
        assert all(c % 2 == 0 for c in combined.values())


def test_mock_theta_identities_match_defining_sums() -> None:
    f = gen('f', 400)
    omega = gen('omega', 400)
    for n in range(400):
        assert f_coefficient(n) == f.coefficient(n)
        assert omega_coefficient(n) == omega.coefficient(n)
    assert [omega_coefficient(t) for t in range(8)] == [1, 2, 3, 4, 6, 8, 10, 14]


def test_c_r_examples() -> None:
    assert all(c_r(0, n) == 0 for n in range(-1, 200))
    assert c_r(1, 23) == 1
    assert c_r(1, -1) == 1
    assert c_r(2, 92) == -56
    assert c_r(5, 22) == 0


def test_c_r_matches_components() -> None:
    prec = 600
    for k in range(12):
        component = r_component(k, prec, 'exact')
        assert [c_r(k, n) for n in range(-1, prec)] == _coeffs(component, -1, prec)


def test_r_components_mod4() -> None:
    prec = 2000
    partitions = gen('P', prec // 24 + 2, 'mod4').substitute_power(24).shift(-1)
    for k in range(12):
        component = r_component(k, prec)
        if k in (1, 5, 7, 11):
            assert component == (partitions * chi_minus12(k)).truncate(prec)
        else:
            assert component.is_zero()
    assert r_component(1, 50).coefficient(-1) == 1
    with pytest.raises(ValueError):
        r_component(12, 10)


def test_delta_powers() -> None:
    power = delta_power_mod4(92, 200)
    assert power.valuation == 92
    assert power.prec >= 200
    assert power.coefficient(92) == 1
    assert delta_power_mod4(3, 40) == gen('Delta', 40, 'mod4') ** 3
