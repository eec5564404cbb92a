#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mvcount/rational.hpp"

namespace mvcount::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// n together with its prime factorization, primes increasing.
struct FactoredInteger {
  u64 value = 1;
  std::vector<PrimePower> factors;
};

/// Smallest-prime-factor table. Built once on first use; read-only afterwards.
class Sieve {
 public:
  explicit Sieve(u64 bound);

  u64 bound() const { return bound_; }
  /// Smallest prime factor of n, for 2 <= n <= bound().
  u64 spf(u64 n) const { return spf_[n]; }

 private:
  u64 bound_;
  std::vector<std::uint32_t> spf_;
};

inline constexpr u64 kDefaultSieveBound = 10'000'000;

/// Process-wide sieve. The bound is read from MVCOUNT_SIEVE_BOUND if set.
const Sieve& sieve();

FactoredInteger factorize(u64 n);
std::vector<u64> divisors(u64 n);
bool is_prime(u64 n);
bool is_squarefree(u64 n);
unsigned valuation(u64 p, u64 n);
u64 isqrt(u64 n);
bool is_square(u64 n);
u64 ipow(u64 base, unsigned exponent);

int moebius(u64 n);
Integer sigma(unsigned k, u64 n);
/// Number of divisors of n, as a machine integer.
u64 divisor_count(u64 n);
/// |SL_2(Z/dZ)| = d * sum_{m|d} mu(d/m) m^2.
Integer sl2_order(u64 d);
/// Largest divisor of d coprime to m.
u64 coprime_part(u64 d, u64 m);

struct SquarefreeSplit {
  u64 square_root;  // c0
  i64 squarefree;   // c', carries the sign of c
};
/// c = c0^2 * c' with c' squarefree.
SquarefreeSplit squarefree_decompose(i64 c);

/// 1-indexed coefficient sequence; entry 0 is unused.
using Sequence = std::vector<Rational>;

Sequence make_sequence(u64 N);
/// (f*g)(n) = sum_{ab=n} f(a) g(b) for 1 <= n <= N.
Sequence dirichlet_convolve(const Sequence& f, const Sequence& g, u64 N);

struct HermiteTriple {
  u64 a;
  u64 s;
  u64 c;
  bool operator==(const HermiteTriple&) const = default;
};
/// Hermite normal forms (a s; 0 c) of the index-n sublattices of Z^2.
std::vector<HermiteTriple> hermite_sublattices(u64 n);

/// Dense tables 0..N (entry 0 is 0).
std::vector<u64> sigma1_table(u64 N);
std::vector<u64> sl2_order_table(u64 N);
std::vector<int> moebius_table(u64 N);

}  // namespace mvcount::arith
