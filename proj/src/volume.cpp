#include "mvcount/volume.hpp"

#include <array>
#include <cmath>
#include <string>

#include "mvcount/arith.hpp"
#include "mvcount/parallel.hpp"

namespace mvcount::volume {

using arith::u64;

std::string_view to_string(Estimator e) {
  return e == Estimator::direct ? "direct" : "closed";
}

Estimator parse_estimator(std::string_view s) {
  if (s == "direct") return Estimator::direct;
  if (s == "closed") return Estimator::closed;
  throw DomainError("unknown estimator mode: " + std::string(s));
}

namespace {

using u128 = unsigned __int128;

Integer from_u128(u128 v) {
  Integer hi = to_integer(static_cast<std::uint64_t>(v >> 64));
  Integer lo = to_integer(static_cast<std::uint64_t>(v));
  return (hi << 64) + lo;
}

// prefix[j] = sigma(1) + ... + sigma(j)
std::vector<u64> sigma_prefix(u64 N) {
  std::vector<u64> s = arith::sigma1_table(N);
  for (u64 j = 1; j <= N; ++j) s[j] += s[j - 1];
  return s;
}

// sum over m <= D with k | m of weight[m] * prefix[D/m]
Integer weighted_sum(const std::vector<u64>& weight,
                     const std::vector<u64>& prefix, u64 k, u64 D) {
  // weight <= D^3 and prefix <= D^2, so each term fits easily in 128 bits
  u128 total = 0;
  for (u64 m = k; m <= D; m += k)
    total += static_cast<u128>(weight[m]) * prefix[D / m];
  return from_u128(total);
}

void require_k(u64 k) {
  MVCOUNT_REQUIRE(k >= 1 && arith::is_squarefree(k),
                  "S_k needs squarefree k, got " + std::to_string(k));
}

struct CombinationRow {
  u64 r;
  Rational scale;
  std::array<Rational, 4> coeff;  // on S_1, S_2, S_3, S_6
};

const std::array<u64, 4> kSk = {1, 2, 3, 6};

CombinationRow gothic_row(u64 r) {
  switch (r) {
    case 1:
      return {1, Rational(13, 120), {1, Rational(1, 2), Rational(1, 3), Rational(1, 6)}};
    case 2: return {2, Rational(13, 360), {3, -3, 1, -1}};
    case 3: return {3, Rational(13, 240), {2, 1, -2, -1}};
    case 6: return {6, Rational(13, 120), {1, -1, -1, 1}};
    default:
      throw DomainError("gothic component must be 1, 2, 3 or 6");
  }
}

}  // namespace

Integer sk_sum(u64 k, u64 D) {
  require_k(k);
  MVCOUNT_REQUIRE(D >= 1, "sk_sum: D must be positive");
  return weighted_sum(arith::sl2_order_table(D), sigma_prefix(D), k, D);
}

PiQuantity sk_asymptotic_constant(u64 k) {
  MVCOUNT_REQUIRE(k == 1 || k == 2 || k == 3 || k == 6,
                  "sk_asymptotic_constant: k must be 1, 2, 3 or 6");
  Rational c(1, 360);
  for (const auto& pp : arith::factorize(k).factors) {
    u64 p = pp.prime;
    c *= Rational(p + 1, p * p + p + 1);
  }
  return {c, 4};
}

PiQuantity volume_exact(Locus l) {
  switch (l) {
    case Locus::H2: return {Rational(1, 960), 4};
    case Locus::P3: return {Rational(5, 6912), 4};
    case Locus::P4: return {Rational(7, 69120), 4};
    case Locus::G: return {Rational(13, 31104), 4};
  }
  throw InternalError("volume_exact: unknown locus");
}

Integer h2_correction_sum(u64 D) {
  MVCOUNT_REQUIRE(D >= 1, "h2_correction_sum: D must be positive");
  std::vector<u64> jordan = arith::sl2_order_table(D);
  for (u64 m = 1; m <= D; ++m) jordan[m] /= m;  // J_2(m) = a(m)/m
  return weighted_sum(jordan, sigma_prefix(D), 1, D);
}

Rational gothic_summand(u64 r, u64 D) {
  CombinationRow row = gothic_row(r);
  const u64 x = D / r;
  if (x == 0) return 0;
  const auto weight = arith::sl2_order_table(x);
  const auto prefix = sigma_prefix(x);
  Rational total = 0;
  for (std::size_t i = 0; i < kSk.size(); ++i)
    total += row.coeff[i] * Rational(weighted_sum(weight, prefix, kSk[i], x));
  return row.scale * total;
}

PiQuantity gothic_summand_limit(u64 r) {
  CombinationRow row = gothic_row(r);
  Rational total = 0;
  for (std::size_t i = 0; i < kSk.size(); ++i)
    total += row.coeff[i] * sk_asymptotic_constant(kSk[i]).coeff;
  return {row.scale * total / pow(Rational(r), 4), 4};
}

Rational closed_sum(Locus l, u64 D) {
  MVCOUNT_REQUIRE(D >= 1, "closed_sum: D must be positive");
  auto S = [](u64 k, u64 x) { return x == 0 ? Rational(0) : Rational(sk_sum(k, x)); };
  switch (l) {
    case Locus::H2:
      return Rational(3, 8) * S(1, D) -
             Rational(3, 4) * Rational(h2_correction_sum(D));
    case Locus::P3:
      return Rational(5, 24) * S(1, D) + Rational(5, 48) * S(2, D) +
             Rational(5, 24) * (S(1, D / 2) - S(2, D / 2));
    case Locus::P4:
      return Rational(7, 12) * S(1, D / 2);
    case Locus::G: {
      Rational total = 0;
      for (u64 r : {1, 2, 3, 6}) total += gothic_summand(r, D);
      return total;
    }
  }
  throw InternalError("closed_sum: unknown locus");
}

std::vector<Rational> smm_table(Locus l, u64 M, euler::Mode mode,
                                unsigned threads) {
  std::vector<Rational> out(M + 1, Rational(0));
  parallel_for(1, M + 1, threads,
               [&](u64 m) { out[m] = counting::smm(l, m, mode).total; });
  return out;
}

Rational direct_sum(const std::vector<Rational>& smm_totals, u64 D) {
  MVCOUNT_REQUIRE(D < smm_totals.size(), "direct_sum: table too short");
  const auto prefix = sigma_prefix(D);
  Rational total = 0;
  for (u64 m = 1; m <= D; ++m)
    if (!smm_totals[m].is_zero())
      total += smm_totals[m] * Rational(prefix[D / m]);
  return total;
}

VolumeEstimate volume_estimate(Locus l, u64 D, Estimator estimator,
                               euler::Mode mode, unsigned threads) {
  MVCOUNT_REQUIRE(D >= 12, "volume_estimate: D must be at least 12");
  VolumeEstimate est{};
  est.locus = l;
  est.D = D;
  est.estimator = estimator;
  est.mode = mode;
  est.exact_target = volume_exact(l);
  const double target = est.exact_target.to_double();
  const unsigned dim = counting::complex_dim(l);

  std::vector<Rational> table;
  if (estimator == Estimator::direct) table = smm_table(l, D, mode, threads);

  for (u64 x : {D / 8, D / 4, D / 2, D}) {
    Rational sum = estimator == Estimator::direct ? direct_sum(table, x)
                                                  : closed_sum(l, x);
    Rational norm = pow(Rational(x), dim);
    est.series.push_back({x, (sum / norm).to_double(), sum});
  }
  est.value = est.series[3].value;
  est.relative_error = std::abs(est.value - target) / target;
  est.extrapolated = 2.0 * est.series[3].value - est.series[2].value;
  est.extrapolated_relative_error = std::abs(est.extrapolated - target) / target;
  return est;
}

Integer convention_factor(Locus l) {
  switch (l) {
    case Locus::P3: return Integer(16 * 8 * 6);
    case Locus::P4: return Integer(256 * 8);
    default:
      throw DomainError("convert_convention: only p3 and p4 are supported");
  }
}

PiQuantity convert_convention(Locus l) {
  return Rational(convention_factor(l)) * volume_exact(l);
}

}  // namespace mvcount::volume
