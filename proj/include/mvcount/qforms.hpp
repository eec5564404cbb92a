#pragma once

#include <cstdint>
#include <vector>

#include "mvcount/rational.hpp"

namespace mvcount::qforms {

/// Formal power series in q = exp(pi i tau), truncated after q^N.
class QExpansion {
 public:
  explicit QExpansion(std::uint64_t N);

  std::uint64_t precision() const { return N_; }
  /// Coefficient of q^n; n must not exceed precision().
  const Rational& coeff(std::uint64_t n) const;
  void set(std::uint64_t n, Rational value);

  /// Cauchy product, valid up to the smaller of the two precisions.
  friend QExpansion operator*(const QExpansion& f, const QExpansion& g);

 private:
  std::uint64_t N_;
  std::vector<Rational> coeffs_;
};

QExpansion theta_expansion(std::uint64_t N);
/// G_2(2k tau) in the variable q = exp(pi i tau).
QExpansion g2k_expansion(std::uint64_t k, std::uint64_t N);
/// F_k = G_2(2k tau) theta(tau) by series multiplication.
QExpansion fk_expansion(std::uint64_t k, std::uint64_t N);

/// Sum over b^2 = n mod 4k, |b| <= sqrt(n), of sigma((n - b^2)/4k),
/// with sigma(0) = -1/24.
Rational ek_coeff(std::uint64_t k, std::uint64_t n);

/// e_k(D) against the divisor sum of prototype counts over the conductor.
bool check_e_and_a(std::uint64_t D, std::uint64_t k);

}  // namespace mvcount::qforms
