#include "mvcount/prototypes.hpp"

#include <numeric>
#include <string>

#include "mvcount/arith.hpp"

namespace mvcount::prototypes {

using arith::i64;
using arith::u64;

void require_discriminant(u64 D) {
  MVCOUNT_REQUIRE(D >= 1 && (D % 4 == 0 || D % 4 == 1),
                  "not a discriminant: " + std::to_string(D));
}

DiscriminantDecomposition conductor_decompose(u64 D) {
  require_discriminant(D);
  if (arith::is_square(D)) return {D, arith::isqrt(D), 1, true};
  u64 s = 1, t = 1;
  for (const auto& [p, e] : arith::factorize(D).factors) {
    s *= arith::ipow(p, e / 2);
    if (e % 2) t *= p;
  }
  if (t % 4 == 1) return {D, s, t, false};
  // t = 2,3 mod 4 forces 4 | D, hence s even
  MVCOUNT_CHECK(s % 2 == 0, "conductor_decompose: inconsistent factorization");
  return {D, s / 2, 4 * t, false};
}

namespace {

// Calls visit(b, N) for every b with |b| < sqrt(D), b^2 = D mod 4k,
// N = (D - b^2) / 4k, in increasing b.
template <class Visit>
void scan_b(u64 D, u64 k, Visit&& visit) {
  const u64 mod = 4 * k;
  u64 root = arith::isqrt(D);
  if (root * root == D) --root;  // strict inequality b^2 < D
  for (i64 b = -static_cast<i64>(root); b <= static_cast<i64>(root); ++b) {
    u64 b2 = static_cast<u64>(b * b);
    if ((D - b2) % mod != 0) continue;
    visit(b, (D - b2) / mod);
  }
}

bool gcd_condition(u64 f, i64 b, u64 c_abs) {
  u64 g = std::gcd(f, static_cast<u64>(b < 0 ? -b : b));
  if (g == 1) return true;
  u64 c0 = arith::squarefree_decompose(static_cast<i64>(c_abs)).square_root;
  return std::gcd(g, c0) == 1;
}

}  // namespace

std::vector<Prototype> enumerate_prototypes(u64 D, u64 k) {
  require_discriminant(D);
  MVCOUNT_REQUIRE(D >= 2, "enumerate_prototypes: D must be at least 2");
  MVCOUNT_REQUIRE(k >= 1, "enumerate_prototypes: k must be positive");
  const u64 f = conductor_decompose(D).f;
  std::vector<Prototype> out;
  scan_b(D, k, [&](i64 b, u64 N) {
    for (u64 a : arith::divisors(N)) {
      u64 c_abs = N / a;
      if (!gcd_condition(f, b, c_abs)) continue;
      out.push_back({static_cast<i64>(a), b, -static_cast<i64>(c_abs), k, D});
    }
  });
  return out;
}

Integer e_sum(u64 D, u64 k) {
  require_discriminant(D);
  MVCOUNT_REQUIRE(D >= 2, "e_sum: D must be at least 2");
  MVCOUNT_REQUIRE(k >= 1, "e_sum: k must be positive");
  const u64 f = conductor_decompose(D).f;
  // a <= N < D/4, and there are at most 2 sqrt(D) values of b
  unsigned __int128 total = 0;
  scan_b(D, k, [&](i64 b, u64 N) {
    u64 g = std::gcd(f, static_cast<u64>(b < 0 ? -b : b));
    if (g == 1) {
      std::uint64_t s = 0;
      for (u64 a : arith::divisors(N)) s += a;
      total += s;
      return;
    }
    for (u64 a : arith::divisors(N))
      if (gcd_condition(f, b, N / a)) total += a;
  });
  MVCOUNT_CHECK(total >> 64 == 0, "e_sum: overflow");
  return to_integer(static_cast<std::uint64_t>(total));
}

Rational e_value(u64 D, u64 k) {
  MVCOUNT_REQUIRE(k >= 1, "e_value: k must be positive");
  if (D == 1) return Rational(-1, 12);
  return Rational(e_sum(D, k));
}

}  // namespace mvcount::prototypes
