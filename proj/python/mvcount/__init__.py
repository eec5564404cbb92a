"""Exact Euler characteristics of Teichmueller curves and volume estimates."""

from fractions import Fraction

from . import _mvcount
from ._mvcount import DomainError, check_e_and_a, volume_estimate

__all__ = [
    "DomainError",
    "cd_count",
    "check_e_and_a",
    "chi_G",
    "chi_W2",
    "e_value",
    "ebar1",
    "ebar6",
    "ek_coeff",
    "h2_permutation_oracle",
    "prototypes",
    "sk_sum",
    "sl2_order",
    "volume_estimate",
    "volume_exact",
    "convert_convention",
]


def _exact(fn):
    def wrapper(*args, **kwargs):
        return Fraction(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


e_value = _exact(_mvcount.e_value)
ek_coeff = _exact(_mvcount.ek_coeff)
ebar1 = _exact(_mvcount.ebar1)
ebar6 = _exact(_mvcount.ebar6)
chi_G = _exact(_mvcount.chi_G)
chi_W2 = _exact(_mvcount.chi_W2)
cd_count = _exact(_mvcount.cd_count)
h2_permutation_oracle = _exact(_mvcount.h2_permutation_oracle)
prototypes = _mvcount.prototypes


def sl2_order(d):
    return int(_mvcount.sl2_order(d))


def sk_sum(k, D):
    return int(_mvcount.sk_sum(k, D))


def volume_exact(locus):
    """Target volume as (Fraction, power of pi)."""
    v = _mvcount.volume_exact(locus)
    return Fraction(v["coeff"]), v["pi_power"]


def convert_convention(locus):
    v = _mvcount.convert_convention(locus)
    return Fraction(v["coeff"]), v["pi_power"]
