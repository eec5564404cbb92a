#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mvcount/counting.hpp"
#include "mvcount/euler.hpp"
#include "mvcount/rational.hpp"

namespace mvcount::volume {

using counting::Locus;

enum class Estimator { direct, closed };

std::string_view to_string(Estimator e);
Estimator parse_estimator(std::string_view s);

/// S_k(D) = sum_{d<=D} sum_{m|d, k|m} sigma(d/m) a(m).
Integer sk_sum(std::uint64_t k, std::uint64_t D);
/// lim S_k(D)/D^4 = pi^4/360 * prod_{p|k} (p+1)/(p^2+p+1).
PiQuantity sk_asymptotic_constant(std::uint64_t k);

PiQuantity volume_exact(Locus l);

/// Sum over m <= D of J_2(m) sum_{j <= D/m} sigma(j), J_2 Jordan's totient.
Integer h2_correction_sum(std::uint64_t D);

/// Closed-form lattice-point sum for the gothic component r in {1,2,3,6},
/// an inclusion-exclusion of S_k over floor(D/r).
Rational gothic_summand(std::uint64_t r, std::uint64_t D);
/// Its limit after division by D^4.
PiQuantity gothic_summand_limit(std::uint64_t r);

/// Exact partial sum sum_{d<=D} |C_d| via the closed S_k combination.
Rational closed_sum(Locus l, std::uint64_t D);

/// smm(m).total for 1 <= m <= M (entry 0 unused).
std::vector<Rational> smm_table(Locus l, std::uint64_t M, euler::Mode mode,
                                unsigned threads = 0);
/// sum_{d<=D} cd_count(d) = sum_m smm(m) sum_{j<=D/m} sigma(j), for D <= M.
Rational direct_sum(const std::vector<Rational>& smm_totals, std::uint64_t D);

struct Checkpoint {
  std::uint64_t D;
  double value;
  Rational exact_sum;
};

struct VolumeEstimate {
  Locus locus;
  std::uint64_t D;
  Estimator estimator;
  euler::Mode mode;
  double value;
  PiQuantity exact_target;
  double relative_error;
  /// 2 V(D) - V(floor(D/2)).
  double extrapolated;
  double extrapolated_relative_error;
  /// At floor(D/8), floor(D/4), floor(D/2), D.
  std::vector<Checkpoint> series;
};

VolumeEstimate volume_estimate(Locus l, std::uint64_t D, Estimator estimator,
                               euler::Mode mode, unsigned threads = 0);

/// Volume in the quadratic-differential convention: 2^4 2^3 3! vol(P3)
/// and 2^8 2^3 vol(P4).
PiQuantity convert_convention(Locus l);
/// The factor chain itself.
Integer convention_factor(Locus l);

}  // namespace mvcount::volume
