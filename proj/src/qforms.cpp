#include "mvcount/qforms.hpp"

#include <algorithm>

#include "mvcount/arith.hpp"
#include "mvcount/prototypes.hpp"

namespace mvcount::qforms {

using arith::u64;

QExpansion::QExpansion(u64 N) : N_(N), coeffs_(N + 1, Rational(0)) {}

const Rational& QExpansion::coeff(u64 n) const {
  MVCOUNT_REQUIRE(n <= N_, "q-expansion read beyond its precision");
  return coeffs_[n];
}

void QExpansion::set(u64 n, Rational value) {
  MVCOUNT_REQUIRE(n <= N_, "q-expansion write beyond its precision");
  coeffs_[n] = std::move(value);
}

QExpansion operator*(const QExpansion& f, const QExpansion& g) {
  const u64 N = std::min(f.N_, g.N_);
  QExpansion out(N);
  std::vector<u64> g_support;
  for (u64 j = 0; j <= N; ++j)
    if (!g.coeffs_[j].is_zero()) g_support.push_back(j);
  for (u64 i = 0; i <= N; ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (u64 j : g_support) {
      if (i + j > N) break;
      out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return out;
}

QExpansion theta_expansion(u64 N) {
  MVCOUNT_REQUIRE(N >= 1, "theta_expansion: N must be positive");
  QExpansion out(N);
  out.set(0, 1);
  for (u64 l = 1; l * l <= N; ++l) out.set(l * l, 2);
  return out;
}

QExpansion g2k_expansion(u64 k, u64 N) {
  MVCOUNT_REQUIRE(k >= 1 && N >= 1, "g2k_expansion: k and N must be positive");
  QExpansion out(N);
  out.set(0, Rational(-1, 24));
  for (u64 a = 1; 4 * k * a <= N; ++a) out.set(4 * k * a, arith::sigma(1, a));
  return out;
}

QExpansion fk_expansion(u64 k, u64 N) {
  return g2k_expansion(k, N) * theta_expansion(N);
}

Rational ek_coeff(u64 k, u64 n) {
  MVCOUNT_REQUIRE(k >= 1, "ek_coeff: k must be positive");
  const u64 mod = 4 * k;
  Rational total = 0;
  const u64 root = arith::isqrt(n);
  for (u64 b = 0; b <= root; ++b) {
    u64 rest = n - b * b;
    if (rest % mod != 0) continue;
    Rational term =
        rest == 0 ? Rational(-1, 24) : Rational(arith::sigma(1, rest / mod));
    total += b == 0 ? term : term + term;  // b and -b
  }
  return total;
}

bool check_e_and_a(u64 D, u64 k) {
  auto dec = prototypes::conductor_decompose(D);
  Rational rhs = 0;
  for (u64 m : arith::divisors(dec.f)) rhs += prototypes::e_value(D / (m * m), k);
  return ek_coeff(k, D) == rhs;
}

}  // namespace mvcount::qforms
