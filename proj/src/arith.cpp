#include "mvcount/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

namespace mvcount::arith {

Sieve::Sieve(u64 bound) : bound_(bound < 2 ? 2 : bound), spf_(bound_ + 1, 0) {
  for (u64 i = 2; i <= bound_; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    if (i > bound_ / i) continue;
    for (u64 j = i * i; j <= bound_; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

const Sieve& sieve() {
  static std::once_flag once;
  static std::unique_ptr<Sieve> instance;
  std::call_once(once, [] {
    u64 bound = kDefaultSieveBound;
    if (const char* env = std::getenv("MVCOUNT_SIEVE_BOUND")) {
      try {
        bound = std::stoull(env);
      } catch (const std::exception&) {
        bound = kDefaultSieveBound;
      }
    }
    if (bound > 0xffffffffULL) bound = 0xffffffffULL;
    instance = std::make_unique<Sieve>(bound);
  });
  return *instance;
}

FactoredInteger factorize(u64 n) {
  MVCOUNT_REQUIRE(n >= 1, "factorize: n must be positive");
  FactoredInteger out;
  out.value = n;
  const Sieve& s = sieve();
  auto push = [&](u64 p) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  };
  u64 m = n;
  if (m > s.bound()) {
    for (u64 p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
      while (m % p == 0) {
        push(p);
        m /= p;
      }
      if (m <= s.bound()) break;
    }
    if (m > s.bound()) {
      push(m);
      m = 1;
    }
  }
  while (m > 1) {
    u64 p = s.spf(m);
    push(p);
    m /= p;
  }
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    std::size_t size = out.size();
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < size; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  auto f = factorize(n).factors;
  return f.size() == 1 && f[0].exponent == 1;
}

bool is_squarefree(u64 n) {
  MVCOUNT_REQUIRE(n >= 1, "is_squarefree: n must be positive");
  for (const auto& pp : factorize(n).factors)
    if (pp.exponent > 1) return false;
  return true;
}

unsigned valuation(u64 p, u64 n) {
  MVCOUNT_REQUIRE(p >= 2 && n >= 1, "valuation: bad arguments");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_square(u64 n) {
  u64 r = isqrt(n);
  return r * r == n;
}

u64 ipow(u64 base, unsigned exponent) {
  u64 out = 1;
  while (exponent--) out *= base;
  return out;
}

int moebius(u64 n) {
  MVCOUNT_REQUIRE(n >= 1, "moebius: n must be positive");
  int mu = 1;
  for (const auto& pp : factorize(n).factors) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Integer sigma(unsigned k, u64 n) {
  MVCOUNT_REQUIRE(n >= 1, "sigma: n must be positive");
  Integer total = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    Integer term = 1, power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= pk;
      term += power;
    }
    total *= term;
  }
  return total;
}

u64 divisor_count(u64 n) {
  MVCOUNT_REQUIRE(n >= 1, "divisor_count: n must be positive");
  u64 c = 1;
  for (const auto& pp : factorize(n).factors) c *= pp.exponent + 1;
  return c;
}

Integer sl2_order(u64 d) {
  MVCOUNT_REQUIRE(d >= 1, "sl2_order: d must be positive");
  // multiplicative: a(p^e) = p^(3e-2) (p^2 - 1)
  Integer total = 1;
  for (const auto& [p, e] : factorize(d).factors) {
    Integer pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), p, 3 * e - 2);
    total *= pp * (Integer(p) * p - 1);
  }
  return total;
}

u64 coprime_part(u64 d, u64 m) {
  MVCOUNT_REQUIRE(d >= 1 && m >= 1, "coprime_part: arguments must be positive");
  for (u64 g = std::gcd(d, m); g > 1; g = std::gcd(d, g)) d /= g;
  return d;
}

SquarefreeSplit squarefree_decompose(i64 c) {
  MVCOUNT_REQUIRE(c != 0, "squarefree_decompose: c must be nonzero");
  u64 mag = c < 0 ? static_cast<u64>(-(c + 1)) + 1 : static_cast<u64>(c);
  u64 root = 1, free = 1;
  for (const auto& [p, e] : factorize(mag).factors) {
    root *= ipow(p, e / 2);
    if (e % 2) free *= p;
  }
  i64 sf = static_cast<i64>(free);
  return {root, c < 0 ? -sf : sf};
}

Sequence make_sequence(u64 N) { return Sequence(N + 1, Rational(0)); }

Sequence dirichlet_convolve(const Sequence& f, const Sequence& g, u64 N) {
  MVCOUNT_REQUIRE(f.size() > N && g.size() > N,
                  "dirichlet_convolve: sequences shorter than N");
  Sequence out = make_sequence(N);
  for (u64 a = 1; a <= N; ++a) {
    if (f[a].is_zero()) continue;
    for (u64 b = 1; a * b <= N; ++b) {
      if (g[b].is_zero()) continue;
      out[a * b] += f[a] * g[b];
    }
  }
  return out;
}

std::vector<HermiteTriple> hermite_sublattices(u64 n) {
  MVCOUNT_REQUIRE(n >= 1, "hermite_sublattices: n must be positive");
  std::vector<HermiteTriple> out;
  for (u64 a : divisors(n))
    for (u64 s = 0; s < a; ++s) out.push_back({a, s, n / a});
  return out;
}

std::vector<u64> sigma1_table(u64 N) {
  std::vector<u64> t(N + 1, 0);
  for (u64 d = 1; d <= N; ++d)
    for (u64 m = d; m <= N; m += d) t[m] += d;
  return t;
}

std::vector<int> moebius_table(u64 N) {
  std::vector<int> mu(N + 1, 1);
  mu[0] = 0;
  std::vector<bool> composite(N + 1, false);
  for (u64 p = 2; p <= N; ++p) {
    if (composite[p]) continue;
    for (u64 m = p; m <= N; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = -mu[m];
    }
    if (p <= N / p)
      for (u64 m = p * p; m <= N; m += p * p) mu[m] = 0;
  }
  return mu;
}

std::vector<u64> sl2_order_table(u64 N) {
  // m^3 must fit; bound well above any practical estimator range
  MVCOUNT_REQUIRE(N <= 2'000'000, "sl2_order_table: N too large for 64 bits");
  std::vector<u64> t(N + 1, 0);
  for (u64 m = 1; m <= N; ++m) t[m] = m * m * m;
  std::vector<bool> composite(N + 1, false);
  for (u64 p = 2; p <= N; ++p) {
    if (composite[p]) continue;
    for (u64 m = p; m <= N; m += p) {
      if (m > p) composite[m] = true;
      t[m] = t[m] / (p * p) * (p * p - 1);
    }
  }
  return t;
}

}  // namespace mvcount::arith
