#pragma once

#include <cstdint>
#include <vector>

#include "mvcount/rational.hpp"

namespace mvcount::zagier {

struct EulerFactor {
  std::uint64_t p;
  Rational value;
};

/// gamma_{p^r}(d^2) from the prime-power case tables.
Rational gauss_gamma(std::uint64_t p, unsigned r, std::uint64_t d);

/// P_k(p, d^2) = 1 + sum_j (p^j, 2k)^2 / p^(2j) * gamma_{p^j}(d^2).
EulerFactor euler_factor(std::uint64_t k, std::uint64_t p, std::uint64_t d);

/// e*_k(d^2) as a multiple of pi^-2: the product over p | 2kd of explicit
/// factors times the tail prod (1 + p^-2) = 15/pi^2.
PiQuantity estar(std::uint64_t k, std::uint64_t d);

/// pi^2/(72 k^2) d^3 e*_k(d^2) assembled from Euler factors.
Rational ebar_euler(std::uint64_t k, std::uint64_t d);

/// (5/12) d^3 sum_{ac | d} mu(a) / (c^3 a^2).
Rational ebar1_exact(std::uint64_t d);

/// Four-term combination of ebar1 at d, d_2, d_3, d_6.
Rational ebar6_exact(std::uint64_t d);

/// kappa(d) in {2, 3/2, 4/3, 1} by gcd(6, d) in {1, 2, 3, 6}.
Rational kappa(std::uint64_t d);

/// (60 / a(d)) sum_{m|d} mu(d/m) ebar6(m^2); equals kappa(d).
Rational ebar6_moebius_ratio(std::uint64_t d);

/// The lemma's identity on the ebar1 scale, for squarefree k.
bool check_technical_lemma(std::uint64_t k, std::uint64_t d);

struct AsymptoticReport {
  std::uint64_t d_max;
  // windows [d_max/8, d_max/4], [d_max/4, d_max/2], [d_max/2, d_max]
  std::uint64_t window_lo[3];
  std::uint64_t window_hi[3];
  double max_delta1[3];
  double max_delta6[3];
  double ratio1;  // upper window max over previous window max
  double ratio6;
  bool non_increasing1;
  bool non_increasing6;
};

/// delta_1(d) = |e(d^2,1) - (5/12) a(d)| / d^(5/2).
double delta1(std::uint64_t d);
/// delta_6(d) = |e(d^2,6) - kappa(d) a(d) / 60| / d^(5/2).
double delta6(std::uint64_t d);

AsymptoticReport asymptotic_check_e(std::uint64_t d_max, unsigned threads = 0);

}  // namespace mvcount::zagier
