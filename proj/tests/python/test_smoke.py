import math
from fractions import Fraction

import pytest

import mvcount


def test_prototype_counts():
    assert mvcount.e_value(5, 1) == 2
    assert mvcount.e_value(1, 6) == Fraction(-1, 12)
    assert mvcount.prototypes(5, 1) == [(1, -1, -1), (1, 1, -1)]
    assert mvcount.ek_coeff(1, 4) == Fraction(11, 12)
    assert mvcount.check_e_and_a(36, 6)


def test_arithmetic():
    assert mvcount.sl2_order(6) == 144
    assert mvcount.sk_sum(1, 3) == 38
    assert mvcount.ebar1(2) == Fraction(35, 12)
    assert mvcount.ebar6(1) == Fraction(1, 30)


def test_counts_and_oracle():
    assert mvcount.chi_W2(9) == Fraction(-1, 2)
    assert mvcount.chi_G(25, 1, "leading") == Fraction(-13, 6)
    assert mvcount.cd_count("h2", 6) == 45
    assert mvcount.h2_permutation_oracle(5) == mvcount.cd_count("h2", 5)


def test_volumes():
    assert mvcount.volume_exact("gothic") == (Fraction(13, 31104), 4)
    assert mvcount.convert_convention("p4") == (Fraction(28, 135), 4)
    est = mvcount.volume_estimate("h2", 800)
    assert est["exact_target"] == {"coeff": "1/960", "pi_power": 4}
    assert abs(est["value"] - math.pi**4 / 960) / (math.pi**4 / 960) < 0.05
    assert len(est["checkpoints"]) == 4


def test_validation_errors():
    with pytest.raises(ValueError):
        mvcount.e_value(7, 1)
    with pytest.raises(mvcount.DomainError):
        mvcount.chi_G(8, 1, "exact")
