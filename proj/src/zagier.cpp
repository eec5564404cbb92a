#include "mvcount/zagier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "mvcount/arith.hpp"
#include "mvcount/parallel.hpp"
#include "mvcount/prototypes.hpp"

namespace mvcount::zagier {

using arith::u64;

namespace {

Rational power_of(u64 p, unsigned e) { return Rational(arith::ipow(p, e)); }

}  // namespace

Rational gauss_gamma(u64 p, unsigned r, u64 d) {
  MVCOUNT_REQUIRE(arith::is_prime(p), "gauss_gamma: p must be prime");
  MVCOUNT_REQUIRE(d >= 1, "gauss_gamma: d must be positive");
  if (r == 0) return 1;
  const unsigned nu = 2 * arith::valuation(p, d);
  if (p == 2) {
    if (r % 2 == 0) return nu + 2 == r ? power_of(2, r / 2) : Rational(0);
    return nu + 1 >= r ? power_of(2, (r - 1) / 2) : Rational(0);
  }
  if (r % 2 == 0) return nu >= r ? power_of(p, r / 2 - 1) * (p - 1) : Rational(0);
  return nu + 1 == r ? power_of(p, (r - 1) / 2) : Rational(0);
}

EulerFactor euler_factor(u64 k, u64 p, u64 d) {
  MVCOUNT_REQUIRE(k >= 1 && arith::is_squarefree(k),
                  "euler_factor: k must be squarefree");
  MVCOUNT_REQUIRE(arith::is_prime(p), "euler_factor: p must be prime");
  // gamma_{p^j}(d^2) vanishes for j > nu_p(d^2) + 2
  const unsigned top = 2 * arith::valuation(p, d) + 2;
  Rational value = 1;
  u64 pj = 1;
  for (unsigned j = 1; j <= top; ++j) {
    pj *= p;
    u64 g = std::gcd(pj, 2 * k);
    value += Rational(Integer(g) * g, Integer(pj) * pj) * gauss_gamma(p, j, d);
  }
  return {p, value};
}

PiQuantity estar(u64 k, u64 d) {
  MVCOUNT_REQUIRE(d >= 1, "estar: d must be positive");
  std::set<u64> primes;
  for (u64 n : {u64{2}, k, d})
    for (const auto& pp : arith::factorize(n).factors) primes.insert(pp.prime);
  Rational coeff = 15;
  for (u64 p : primes)
    coeff *= euler_factor(k, p, d).value / (Rational(1) + Rational(1, p * p));
  return {coeff, -2};
}

Rational ebar_euler(u64 k, u64 d) {
  PiQuantity scale{Rational(Integer(d) * d * d, Integer(72) * k * k), 2};
  PiQuantity value = scale * estar(k, d);
  MVCOUNT_CHECK(value.pi_power == 0, "ebar_euler: pi powers did not cancel");
  return value.coeff;
}

Rational ebar1_exact(u64 d) {
  MVCOUNT_REQUIRE(d >= 1, "ebar1_exact: d must be positive");
  Rational sum = 0;
  for (u64 a : arith::divisors(d)) {
    int mu = arith::moebius(a);
    if (mu == 0) continue;
    for (u64 c : arith::divisors(d / a))
      sum += Rational(mu) / (Rational(Integer(Integer(c) * c * c)) * Rational(a * a));
  }
  return Rational(5, 12) * Rational(Integer(Integer(d) * d * d)) * sum;
}

Rational ebar6_exact(u64 d) {
  MVCOUNT_REQUIRE(d >= 1, "ebar6_exact: d must be positive");
  auto term = [d](u64 m) {
    u64 dm = arith::coprime_part(d, m);
    return pow(Rational(d / dm), 3) * ebar1_exact(dm);
  };
  return ebar1_exact(d) - Rational(3, 5) * term(2) - Rational(4, 5) * term(3) +
         Rational(12, 25) * term(6);
}

Rational kappa(u64 d) {
  switch (std::gcd<u64>(d, 6)) {
    case 1: return 2;
    case 2: return Rational(3, 2);
    case 3: return Rational(4, 3);
    default: return 1;
  }
}

Rational ebar6_moebius_ratio(u64 d) {
  Rational sum = 0;
  for (u64 m : arith::divisors(d)) {
    int mu = arith::moebius(d / m);
    if (mu != 0) sum += Rational(mu) * ebar6_exact(m);
  }
  return Rational(60) * sum / Rational(arith::sl2_order(d));
}

bool check_technical_lemma(u64 k, u64 d) {
  MVCOUNT_REQUIRE(k >= 1 && arith::is_squarefree(k),
                  "check_technical_lemma: k must be squarefree");
  MVCOUNT_REQUIRE(d >= 1, "check_technical_lemma: d must be positive");
  Rational lhs = 0;
  for (u64 m : arith::divisors(d)) {
    int mu = arith::moebius(d / m);
    if (mu == 0) continue;
    u64 mk = arith::coprime_part(m, k);
    lhs += Rational(mu) * pow(Rational(m / mk), 3) * ebar1_exact(mk);
  }
  Rational factor = 1;
  for (const auto& pp : arith::factorize(std::gcd(k, d)).factors) {
    u64 p = pp.prime;
    unsigned nu = arith::valuation(p, d);
    factor *= power_of(p, 3 * nu - 3) * Rational(p * p * p - 1);
  }
  const u64 dk = arith::coprime_part(d, k);
  Rational inner = 0;
  for (u64 m : arith::divisors(dk)) {
    int mu = arith::moebius(dk / m);
    if (mu != 0) inner += Rational(mu) * ebar1_exact(m);
  }
  return lhs == factor * inner;
}

namespace {

double e_square(u64 d, u64 k) {
  if (d == 1) return -1.0 / 12.0;
  return prototypes::e_sum(d * d, k).get_d();
}

}  // namespace

double delta1(u64 d) {
  MVCOUNT_REQUIRE(d >= 1, "delta1: d must be positive");
  double main = 5.0 / 12.0 * arith::sl2_order(d).get_d();
  return std::abs(e_square(d, 1) - main) / std::pow(double(d), 2.5);
}

double delta6(u64 d) {
  MVCOUNT_REQUIRE(d >= 1, "delta6: d must be positive");
  double main = kappa(d).to_double() * arith::sl2_order(d).get_d() / 60.0;
  return std::abs(e_square(d, 6) - main) / std::pow(double(d), 2.5);
}

AsymptoticReport asymptotic_check_e(u64 d_max, unsigned threads) {
  MVCOUNT_REQUIRE(d_max >= 24, "asymptotic_check_e: d_max must be at least 24");
  AsymptoticReport rep{};
  rep.d_max = d_max;
  const u64 lo = d_max / 8;
  std::vector<double> del1(d_max + 1, 0.0), del6(d_max + 1, 0.0);
  parallel_for(lo, d_max + 1, threads, [&](u64 d) {
    del1[d] = delta1(d);
    del6[d] = delta6(d);
  });
  for (int w = 0; w < 3; ++w) {
    rep.window_lo[w] = d_max >> (3 - w);
    rep.window_hi[w] = w == 2 ? d_max : d_max >> (2 - w);
    rep.max_delta1[w] = *std::max_element(del1.begin() + rep.window_lo[w],
                                          del1.begin() + rep.window_hi[w] + 1);
    rep.max_delta6[w] = *std::max_element(del6.begin() + rep.window_lo[w],
                                          del6.begin() + rep.window_hi[w] + 1);
  }
  rep.ratio1 = rep.max_delta1[2] / rep.max_delta1[1];
  rep.ratio6 = rep.max_delta6[2] / rep.max_delta6[1];
  rep.non_increasing1 = rep.max_delta1[2] <= rep.max_delta1[1];
  rep.non_increasing6 = rep.max_delta6[2] <= rep.max_delta6[1];
  return rep;
}

}  // namespace mvcount::zagier
