#include <cmath>

#include "doctest.h"
#include "mvcount/arith.hpp"
#include "mvcount/counting.hpp"
#include "mvcount/volume.hpp"

using namespace mvcount;
using counting::Locus;
using euler::Mode;
using std::uint64_t;
using volume::Estimator;

namespace {

// straight from the definition: sum_{d<=D} sum_{m|d, k|m} sigma(d/m) a(m)
Integer brute_sk(uint64_t k, uint64_t D) {
  Integer total = 0;
  for (uint64_t d = 1; d <= D; ++d)
    for (uint64_t m : arith::divisors(d))
      if (m % k == 0) total += arith::sigma(1, d / m) * arith::sl2_order(m);
  return total;
}

Rational brute_direct(Locus l, uint64_t D, Mode mode) {
  Rational total = 0;
  for (uint64_t d = 1; d <= D; ++d) total += counting::cd_count(l, d, mode);
  return total;
}

}  // namespace

TEST_CASE("sk_sum examples") {
  CHECK(volume::sk_sum(1, 3) == 38);
  CHECK(volume::sk_sum(2, 2) == 6);
  CHECK(volume::sk_sum(1, 1) == 1);
  CHECK_THROWS_AS(volume::sk_sum(4, 10), DomainError);
  CHECK_THROWS_AS(volume::sk_sum(1, 0), DomainError);
}

TEST_CASE("sk_sum agrees with the definition") {
  for (uint64_t k : {1, 2, 3, 5, 6, 10})
    for (uint64_t D : {1, 2, 7, 36, 97, 250}) REQUIRE(volume::sk_sum(k, D) == brute_sk(k, D));
  Integer s3 = 0;
  for (uint64_t d = 1; d <= 3000; ++d) s3 += arith::sigma(3, d);
  CHECK(volume::sk_sum(1, 3000) == s3);
}

TEST_CASE("asymptotic constants") {
  CHECK(volume::sk_asymptotic_constant(1) == PiQuantity(Rational(1, 360), 4));
  CHECK(volume::sk_asymptotic_constant(2) == PiQuantity(Rational(1, 840), 4));
  CHECK(volume::sk_asymptotic_constant(6) == PiQuantity(Rational(12, 360 * 91), 4));
  CHECK(volume::sk_asymptotic_constant(3) == PiQuantity(Rational(4, 360 * 13), 4));
  CHECK_THROWS_AS(volume::sk_asymptotic_constant(5), DomainError);
}

TEST_CASE("target volumes") {
  CHECK(volume::volume_exact(Locus::G) == PiQuantity(Rational(13, 31104), 4));
  CHECK(volume::volume_exact(Locus::H2) == PiQuantity(Rational(1, 960), 4));
  CHECK(volume::volume_exact(Locus::P3) == PiQuantity(Rational(5, 6912), 4));
  CHECK(volume::volume_exact(Locus::P4) == PiQuantity(Rational(7, 69120), 4));
  // prime factorizations of the denominators
  CHECK(Rational(13, 31104) == Rational(13, 128 * 243));
  CHECK(Rational(1, 960) == Rational(1, 64 * 3 * 5));
  CHECK(Rational(5, 6912) == Rational(5, 256 * 27));
  CHECK(Rational(7, 69120) == Rational(7, 512 * 27 * 5));
}

TEST_CASE("gothic summand limits") {
  const Rational base = Rational(1, 25 * 7);
  CHECK(volume::gothic_summand_limit(1).coeff == Rational(17 * 43, 128 * 81) * base);
  CHECK(volume::gothic_summand_limit(2).coeff == Rational(43, 256 * 81) * base);
  CHECK(volume::gothic_summand_limit(3).coeff == Rational(17, 128 * 243) * base);
  CHECK(volume::gothic_summand_limit(6).coeff == Rational(1, 256 * 243) * base);
  Rational sum = 0;
  for (uint64_t r : {1, 2, 3, 6}) sum += volume::gothic_summand_limit(r).coeff;
  CHECK(sum == Rational(4550, 256 * 243 * 25 * 7));
  CHECK(sum == Rational(13, 31104));
  CHECK_THROWS_AS(volume::gothic_summand(4, 100), DomainError);
}

TEST_CASE("AEZ conversion") {
  CHECK(volume::convention_factor(Locus::P3) == 768);
  CHECK(volume::convention_factor(Locus::P4) == 2048);
  CHECK(volume::convert_convention(Locus::P3) == PiQuantity(Rational(5, 9), 4));
  CHECK(volume::convert_convention(Locus::P4) == PiQuantity(Rational(28, 135), 4));
  CHECK(Rational(768) * Rational(5, 6912) == Rational(5, 9));
  CHECK_THROWS_AS(volume::convert_convention(Locus::G), DomainError);
}

TEST_CASE("direct_sum equals summing cd_count") {
  for (Locus l : {Locus::H2, Locus::P3, Locus::P4, Locus::G}) {
    Mode mode = counting::default_mode(l);
    auto table = volume::smm_table(l, 150, mode, 1);
    for (uint64_t D : {1, 13, 60, 150})
      REQUIRE(volume::direct_sum(table, D) == brute_direct(l, D, mode));
  }
}

TEST_CASE("P4 closed form equals the direct sum") {
  auto table = volume::smm_table(Locus::P4, 400, Mode::main_term, 1);
  for (uint64_t D = 1; D <= 400; ++D)
    REQUIRE(volume::direct_sum(table, D) == volume::closed_sum(Locus::P4, D));
}

TEST_CASE("P3 closed form equals the direct sum") {
  auto table = volume::smm_table(Locus::P3, 400, Mode::main_term, 1);
  for (uint64_t D = 1; D <= 400; ++D)
    REQUIRE(volume::direct_sum(table, D) == volume::closed_sum(Locus::P3, D));
}

TEST_CASE("gothic leading closed form equals the direct sum") {
  auto table = volume::smm_table(Locus::G, 400, Mode::leading, 1);
  for (uint64_t D = 1; D <= 400; ++D)
    REQUIRE(volume::direct_sum(table, D) == volume::closed_sum(Locus::G, D));
}

TEST_CASE("H2 closed form differs from the direct sum by O(D^2)") {
  auto table = volume::smm_table(Locus::H2, 800, Mode::exact, 1);
  double worst = 0;
  for (uint64_t D = 100; D <= 800; D += 50) {
    Rational gap = volume::direct_sum(table, D) - volume::closed_sum(Locus::H2, D);
    worst = std::max(worst, std::abs(gap.to_double()) / (double(D) * D));
  }
  CHECK(worst < 5.0);
}

TEST_CASE("volume_estimate bookkeeping") {
  auto est = volume::volume_estimate(Locus::H2, 400, Estimator::direct, Mode::exact, 1);
  REQUIRE(est.series.size() == 4);
  CHECK(est.series[0].D == 50);
  CHECK(est.series[3].D == 400);
  for (std::size_t i = 1; i < 4; ++i) CHECK(est.series[i - 1].D < est.series[i].D);
  const double target = std::pow(M_PI, 4) / 960;
  CHECK(est.relative_error == doctest::Approx(std::abs(est.value - target) / target));
  CHECK(est.extrapolated == doctest::Approx(2 * est.series[3].value - est.series[2].value));
  CHECK(est.relative_error < 0.05);
  CHECK_THROWS_AS(volume::volume_estimate(Locus::H2, 11, Estimator::direct, Mode::exact, 1),
                  DomainError);
  CHECK(volume::parse_estimator("closed") == Estimator::closed);
  CHECK_THROWS_AS(volume::parse_estimator("fast"), DomainError);
}

TEST_CASE("closed and direct estimates converge to the same limit") {
  auto closed = volume::volume_estimate(Locus::P3, 2000, Estimator::closed, Mode::main_term, 1);
  auto direct = volume::volume_estimate(Locus::P3, 2000, Estimator::direct, Mode::main_term, 1);
  CHECK(closed.value == doctest::Approx(direct.value));
  CHECK(closed.relative_error < 0.02);
}
