#include "mvcount/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "mvcount/arith.hpp"
#include "mvcount/counting.hpp"
#include "mvcount/euler.hpp"
#include "mvcount/ideals.hpp"
#include "mvcount/parallel.hpp"
#include "mvcount/prototypes.hpp"
#include "mvcount/qforms.hpp"
#include "mvcount/volume.hpp"
#include "mvcount/zagier.hpp"

namespace mvcount::verify {

using arith::i64;
using arith::u64;

namespace {

struct Failure {
  std::string message;
};

template <class... Args>
[[noreturn]] void fail(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  throw Failure{os.str()};
}

struct Check {
  std::string name;
  std::function<std::string(unsigned)> body;
};

// ---------------------------------------------------------------- arith

std::vector<Check> arith_checks() {
  return {
      {"sl2_order multiplicative on coprime m, n <= 500",
       [](unsigned) {
         auto a = arith::sl2_order_table(250000);
         for (u64 m = 1; m <= 500; ++m)
           for (u64 n = 1; n <= 500; ++n)
             if (std::gcd(m, n) == 1 && a[m * n] != a[m] * a[n])
               fail("a(", m * n, ") != a(", m, ") a(", n, ")");
         return std::string("250000 pairs scanned");
       }},
      {"(sigma * a)(n) = sigma_3(n) for n <= 10^4",
       [](unsigned) {
         const u64 N = 10000;
         auto s = arith::make_sequence(N), a = arith::make_sequence(N);
         for (u64 n = 1; n <= N; ++n) {
           s[n] = Rational(arith::sigma(1, n));
           a[n] = Rational(arith::sl2_order(n));
         }
         auto c = arith::dirichlet_convolve(s, a, N);
         for (u64 n = 1; n <= N; ++n)
           if (c[n] != Rational(arith::sigma(3, n))) fail("mismatch at n = ", n);
         return std::string();
       }},
      {"Moebius inversion roundtrip up to N = 2000",
       [](unsigned) {
         const u64 N = 2000;
         std::mt19937_64 rng(20240611);
         auto f = arith::make_sequence(N), one = arith::make_sequence(N),
              mu = arith::make_sequence(N);
         for (u64 n = 1; n <= N; ++n) {
           f[n] = Rational(static_cast<long>(rng() % 2001) - 1000,
                           static_cast<long>(rng() % 97) + 1);
           one[n] = 1;
           mu[n] = arith::moebius(n);
         }
         auto F = arith::dirichlet_convolve(f, one, N);
         auto back = arith::dirichlet_convolve(F, mu, N);
         for (u64 n = 1; n <= N; ++n)
           if (back[n] != f[n]) fail("roundtrip differs at n = ", n);
         return std::string();
       }},
      {"hermite_sublattices(n) has sigma(n) entries of index n, n <= 200",
       [](unsigned) {
         for (u64 n = 1; n <= 200; ++n) {
           auto list = arith::hermite_sublattices(n);
           if (Integer(static_cast<unsigned long>(list.size())) != arith::sigma(1, n))
             fail("wrong count at n = ", n);
           std::set<std::tuple<u64, u64, u64>> seen;
           for (const auto& t : list) {
             if (t.a * t.c != n || t.s >= t.a) fail("bad triple at n = ", n);
             seen.insert({t.a, t.s, t.c});
           }
           if (seen.size() != list.size()) fail("duplicate triple at n = ", n);
         }
         return std::string();
       }},
      {"a(d) = p^(3 nu - 2) (p^2 - 1) a(d_p) for d <= 2000, p | d",
       [](unsigned) {
         for (u64 d = 2; d <= 2000; ++d)
           for (const auto& pp : arith::factorize(d).factors) {
             u64 p = pp.prime;
             Integer rhs;
             mpz_ui_pow_ui(rhs.get_mpz_t(), p, 3 * pp.exponent - 2);
             rhs *= Integer(p * p - 1) * arith::sl2_order(arith::coprime_part(d, p));
             if (rhs != arith::sl2_order(d)) fail("fails at d = ", d, ", p = ", p);
           }
         return std::string();
       }},
  };
}

// ---------------------------------------------------------------- prototypes

std::vector<Check> prototype_checks() {
  return {
      {"prototype invariants and b -> -b symmetry, D <= 5000, k in {1,6}",
       [](unsigned threads) {
         std::vector<std::string> errors(5001);
         parallel_for(2, 5001, threads, [&](u64 D) {
           if (D % 4 != 0 && D % 4 != 1) return;
           const u64 f = prototypes::conductor_decompose(D).f;
           for (u64 k : {1, 6}) {
             auto list = prototypes::enumerate_prototypes(D, k);
             std::multiset<std::tuple<i64, i64, i64>> set;
             for (const auto& p : list) {
               if (p.a <= 0 || p.c >= 0 ||
                   static_cast<i64>(D) != p.b * p.b - 4 * static_cast<i64>(k) * p.a * p.c) {
                 errors[D] = "discriminant invariant";
                 return;
               }
               u64 c0 = arith::squarefree_decompose(p.c).square_root;
               if (std::gcd(std::gcd(f, static_cast<u64>(std::llabs(p.b))), c0) != 1) {
                 errors[D] = "gcd invariant";
                 return;
               }
               set.insert({p.a, p.b, p.c});
             }
             u64 zero_b = 0;
             for (const auto& p : list) {
               if (p.b == 0) ++zero_b;
               if (set.count({p.a, -p.b, p.c}) != set.count({p.a, p.b, p.c})) {
                 errors[D] = "b -> -b is not an involution";
                 return;
               }
             }
             if ((list.size() - zero_b) % 2 != 0) {
               errors[D] = "parity of non-fixed prototypes";
               return;
             }
           }
         });
         for (u64 D = 0; D <= 5000; ++D)
           if (!errors[D].empty()) fail(errors[D], " at D = ", D);
         return std::string();
       }},
      {"e(D,1) by enumeration equals Moebius-inverted e_1 for non-square D <= 1000",
       [](unsigned) {
         for (u64 D = 5; D <= 1000; ++D) {
           if ((D % 4 != 0 && D % 4 != 1) || arith::is_square(D)) continue;
           u64 f = prototypes::conductor_decompose(D).f;
           Rational inv = 0;
           for (u64 m : arith::divisors(f)) {
             int mu = arith::moebius(m);
             if (mu != 0) inv += Rational(mu) * qforms::ek_coeff(1, D / (m * m));
           }
           if (inv != prototypes::e_value(D, 1)) fail("mismatch at D = ", D);
         }
         return std::string();
       }},
  };
}

// ---------------------------------------------------------------- qforms

std::vector<Check> qform_checks() {
  return {
      {"F_k product coefficients equal e_k(n) for k in {1,6}, n <= 4000",
       [](unsigned) {
         for (u64 k : {1, 6}) {
           auto F = qforms::fk_expansion(k, 4000);
           for (u64 n = 0; n <= 4000; ++n)
             if (F.coeff(n) != qforms::ek_coeff(k, n))
               fail("k = ", k, ", n = ", n);
         }
         return std::string();
       }},
      {"e_k(D) = sum_{m|f} e(D/m^2, k) for D <= 4000, k in {1,6}",
       [](unsigned threads) {
         std::vector<int> bad(4001, 0);
         parallel_for(1, 4001, threads, [&](u64 D) {
           if (D % 4 != 0 && D % 4 != 1) return;
           for (u64 k : {1, 6})
             if (!qforms::check_e_and_a(D, k)) bad[D] = static_cast<int>(k);
         });
         for (u64 D = 1; D <= 4000; ++D)
           if (bad[D]) fail("fails at D = ", D, ", k = ", bad[D]);
         return std::string();
       }},
      {"e_6(n) vanishes when n is not a square mod 24, n <= 1000",
       [](unsigned) {
         std::set<u64> squares;
         for (u64 b = 0; b < 24; ++b) squares.insert(b * b % 24);
         for (u64 n = 0; n <= 1000; ++n)
           if (!squares.count(n % 24) && !qforms::ek_coeff(6, n).is_zero())
             fail("nonzero at n = ", n);
         return std::string();
       }},
  };
}

// ---------------------------------------------------------------- zagier

std::vector<Check> zagier_checks() {
  return {
      {"Euler factors are finite sums, p <= 50, d <= 200",
       [](unsigned) {
         for (u64 p = 2; p <= 50; ++p) {
           if (!arith::is_prime(p)) continue;
           for (u64 d = 1; d <= 200; ++d) {
             unsigned top = 2 * arith::valuation(p, d) + 2;
             for (unsigned r = top + 1; r <= top + 6; ++r)
               if (!zagier::gauss_gamma(p, r, d).is_zero())
                 fail("gamma nonzero beyond the bound, p = ", p, ", d = ", d);
           }
         }
         return std::string();
       }},
      {"ebar1 by divisor sum equals the Euler-product route, d <= 500",
       [](unsigned) {
         for (u64 d = 1; d <= 500; ++d)
           if (zagier::ebar1_exact(d) != zagier::ebar_euler(1, d))
             fail("mismatch at d = ", d);
         return std::string();
       }},
      {"ebar6 combination equals the k = 6 Euler product, d <= 500",
       [](unsigned) {
         for (u64 d = 1; d <= 500; ++d)
           if (zagier::ebar6_exact(d) != zagier::ebar_euler(6, d))
             fail("mismatch at d = ", d);
         return std::string();
       }},
      {"(12/5) sum_{m|d} mu(d/m) ebar1(m^2) = a(d), d <= 2000",
       [](unsigned) {
         for (u64 d = 1; d <= 2000; ++d) {
           Rational s = 0;
           for (u64 m : arith::divisors(d)) {
             int mu = arith::moebius(d / m);
             if (mu != 0) s += Rational(mu) * zagier::ebar1_exact(m);
           }
           if (Rational(12, 5) * s != Rational(arith::sl2_order(d)))
             fail("fails at d = ", d);
         }
         return std::string();
       }},
      {"technical lemma for k in {2,3,6}, d <= 500",
       [](unsigned) {
         for (u64 k : {2, 3, 6})
           for (u64 d = 1; d <= 500; ++d)
             if (!zagier::check_technical_lemma(k, d))
               fail("fails at k = ", k, ", d = ", d);
         return std::string();
       }},
      {"(60/a(d)) sum_{m|d} mu(d/m) ebar6(m^2) = kappa(d), d <= 2000",
       [](unsigned) {
         for (u64 d = 1; d <= 2000; ++d)
           if (zagier::ebar6_moebius_ratio(d) != zagier::kappa(d))
             fail("fails at d = ", d);
         return std::string();
       }},
      {"e(d^2,1) and e(d^2,6) error terms: half-range maxima do not grow, d <= 1000",
       [](unsigned threads) {
         auto rep = zagier::asymptotic_check_e(1000, threads);
         std::ostringstream os;
         os << "delta1 " << rep.max_delta1[1] << " -> " << rep.max_delta1[2]
            << ", delta6 " << rep.max_delta6[1] << " -> " << rep.max_delta6[2];
         if (!rep.non_increasing1 || !rep.non_increasing6) fail(os.str());
         return os.str();
       }},
  };
}

// ---------------------------------------------------------------- ideals

// x in the Z-span of g1, g2 (nondegenerate)?
bool in_span(const ideals::QuadPair& g1, const ideals::QuadPair& g2,
             const ideals::QuadPair& x) {
  i64 det = g1.a1 * g2.a2 - g2.a1 * g1.a2;
  i64 u = x.a1 * g2.a2 - g2.a1 * x.a2;
  i64 v = g1.a1 * x.a2 - x.a1 * g1.a2;
  return u % det == 0 && v % det == 0;
}

std::vector<Check> ideal_checks() {
  return {
      {"basis generators lie in b_r and span an index-6 sublattice, d <= 200",
       [](unsigned) {
         for (u64 d = 2; d <= 200; ++d)
           for (u64 r : {1, 2, 3, 6}) {
             auto spec = ideals::ideal_basis(d, 6, r);
             if (!ideals::ideal_membership(spec, spec.g1) ||
                 !ideals::ideal_membership(spec, spec.g2))
               fail("generator outside b_r at d = ", d, ", r = ", r);
             i64 det = std::llabs(spec.g1.a1 * spec.g2.a2 - spec.g2.a1 * spec.g1.a2);
             if (det != static_cast<i64>(6 * d)) fail("index wrong at d = ", d);
           }
         return std::string();
       }},
      {"ideal_equal agrees with lattice equality, d <= 100",
       [](unsigned) {
         for (u64 d = 2; d <= 100; ++d)
           for (u64 r : {1, 2, 3, 6})
             for (u64 s : {1, 2, 3, 6}) {
               auto A = ideals::ideal_basis(d, 6, r), B = ideals::ideal_basis(d, 6, s);
               bool eq = in_span(A.g1, A.g2, B.g1) && in_span(A.g1, A.g2, B.g2) &&
                         in_span(B.g1, B.g2, A.g1) && in_span(B.g1, B.g2, A.g2);
               if (eq != ideals::ideal_equal(d, 6, r, s))
                 fail("d = ", d, ", r = ", r, ", s = ", s);
             }
         return std::string();
       }},
      {"coordinate swap exchanges b_r and b_{6/r}, d <= 100",
       [](unsigned) {
         for (u64 d = 2; d <= 100; ++d)
           for (u64 r : {1, 2, 3, 6}) {
             auto A = ideals::ideal_basis(d, 6, r);
             auto B = ideals::ideal_basis(d, 6, ideals::galois_conjugate(r, 6));
             for (const auto& g : {A.g1, A.g2})
               if (!ideals::ideal_membership(B, g.conjugate()))
                 fail("d = ", d, ", r = ", r);
           }
         return std::string();
       }},
      {"class_count(d,6) equals the number of distinct b_r, d <= 500",
       [](unsigned) {
         for (u64 d = 2; d <= 500; ++d) {
           std::vector<u64> reps;
           for (u64 r : {1, 2, 3, 6}) {
             bool fresh = true;
             for (u64 s : reps)
               if (ideals::ideal_equal(d, 6, r, s)) fresh = false;
             if (fresh) reps.push_back(r);
           }
           if (reps.size() != ideals::class_count(d, 6)) fail("d = ", d);
         }
         return std::string();
       }},
      {"gram matrices have symplectic type (1,6), d <= 200",
       [](unsigned) {
         for (u64 d = 2; d <= 200; ++d)
           for (u64 r : ideals::component_list(d)) {
             auto e = ideals::symplectic_divisors(ideals::gram_matrix(d, 6, r));
             if (e.first != 1 || e.second != 6) fail("d = ", d, ", r = ", r);
           }
         return std::string();
       }},
      {"polarization restricts to (lcm(d,r), lcm(d,6/r)), d <= 500",
       [](unsigned) {
         for (u64 d = 2; d <= 500; ++d)
           for (u64 r : ideals::component_list(d)) {
             auto p = ideals::polarization_restriction(d, 6, r);
             if (p.first != static_cast<i64>(std::lcm(d, r)) ||
                 p.second != static_cast<i64>(std::lcm(d, 6 / r)))
               fail("d = ", d, ", r = ", r);
           }
         return std::string();
       }},
  };
}

// ---------------------------------------------------------------- euler

std::vector<Check> euler_checks() {
  using euler::Mode;
  return {
      {"chi(X_{d^2}) = (d^3/72) sum_{r|d} mu(r)/r^2, d <= 5000",
       [](unsigned) {
         for (u64 d = 1; d <= 5000; ++d) {
           Rational s = 0;
           for (u64 r : arith::divisors(d)) s += Rational(arith::moebius(r), r * r);
           if (euler::chi_X_square(d) != Rational(Integer(d) * d * d, 72) * s)
             fail("d = ", d);
         }
         return std::string();
       }},
      {"-6 chi(W_{m^2}(2)) is a nonnegative integer, zero only at m = 2",
       [](unsigned) {
         for (u64 m = 2; m <= 2000; ++m) {
           Rational c = Rational(-6) * euler::chi_W2(m * m);
           if (!c.is_integer() || c.sign() < 0) fail("m = ", m);
           if (c.is_zero() != (m == 2)) fail("zero pattern at m = ", m);
         }
         return std::string();
       }},
      {"gothic curves exist exactly for D = 0,1,4,9,12,16 mod 24, D <= 2000",
       [](unsigned) {
         const std::set<u64> ok = {0, 1, 4, 9, 12, 16};
         for (u64 D = 6; D <= 2000; ++D) {
           if ((D % 4 != 0 && D % 4 != 1) || arith::is_square(D)) continue;
           bool emitted = true;
           try {
             euler::chi_G(D, 1, Mode::exact);
           } catch (const DomainError&) {
             emitted = false;
           }
           if (emitted != (ok.count(D % 24) > 0)) fail("D = ", D);
         }
         return std::string();
       }},
      {"gothic main_term and leading differ by O(d^(5/2)), d <= 2000",
       [](unsigned threads) {
         std::vector<double> dev(2001, 0.0);
         std::vector<int> positive(2001, 0);
         parallel_for(2, 2001, threads, [&](u64 d) {
           u64 r = 1;
           Rational main = euler::chi_G(d * d, r, Mode::main_term).value;
           Rational lead = euler::chi_G(d * d, r, Mode::leading).value;
           if (main.sign() > 0) positive[d] = 1;
           dev[d] = std::abs((main - lead).to_double()) / std::pow(double(d), 2.5);
         });
         for (u64 d = 2; d <= 2000; ++d)
           if (positive[d]) fail("main_term positive at d = ", d);
         double lower = *std::max_element(dev.begin() + 500, dev.begin() + 1001);
         double upper = *std::max_element(dev.begin() + 1000, dev.begin() + 2001);
         std::ostringstream os;
         os << "max on [500,1000] " << lower << ", on [1000,2000] " << upper;
         if (upper > lower) fail(os.str());
         return os.str();
       }},
      {"remark value lies in the boundary sandwich, 2 <= d <= 2000",
       [](unsigned) {
         for (u64 d = 2; d <= 2000; ++d) {
           Rational main = euler::chi_G(d * d, 1, Mode::main_term).value;
           Rational rem = euler::chi_G(d * d, 1, Mode::remark).value;
           Rational gap = euler::chi_boundary_gap(d, 1);
           if (rem - main < Rational(0) || rem - main > gap) fail("d = ", d);
         }
         return std::string();
       }},
      {"gothic components offered for d^2 equal component_list(d)",
       [](unsigned) {
         for (u64 d = 2; d <= 300; ++d) {
           std::vector<u64> offered;
           for (u64 r : {1, 2, 3, 6}) {
             try {
               euler::chi_G(d * d, r, Mode::main_term);
               offered.push_back(r);
             } catch (const DomainError&) {
             }
           }
           if (offered != ideals::component_list(d)) fail("d = ", d);
         }
         return std::string();
       }},
  };
}

// ---------------------------------------------------------------- counting

std::vector<Check> counting_checks() {
  using counting::Locus;
  return {
      {"permutation oracle equals cd_count(h2, d), d <= 8",
       [](unsigned threads) {
         for (u64 d = 1; d <= 8; ++d) {
           Rational oracle = counting::h2_permutation_oracle(
               d, counting::Commutator::hvHV, threads);
           Rational cd = counting::cd_count(Locus::H2, d, euler::Mode::exact);
           if (oracle != cd) fail("d = ", d, ": oracle ", oracle, " vs ", cd);
         }
         return std::string();
       }},
      {"both commutator conventions give the same count, d <= 6",
       [](unsigned threads) {
         for (u64 d = 1; d <= 6; ++d)
           if (counting::h2_permutation_oracle(d, counting::Commutator::hvHV, threads) !=
               counting::h2_permutation_oracle(d, counting::Commutator::HVhv, threads))
             fail("d = ", d);
         return std::string();
       }},
      {"cd_count is the sigma-weighted divisor sum over Hermite lattices",
       [](unsigned) {
         for (u64 d = 1; d <= 300; ++d) {
           Rational s = 0;
           for (u64 m : arith::divisors(d)) {
             auto lattices = arith::hermite_sublattices(d / m).size();
             s += Rational(static_cast<unsigned long>(lattices)) *
                  counting::smm(Locus::H2, m, euler::Mode::exact).total;
           }
           if (s != counting::cd_count(Locus::H2, d, euler::Mode::exact))
             fail("d = ", d);
         }
         return std::string();
       }},
      {"gothic leading counts are nonnegative, m <= 5000",
       [](unsigned) {
         for (u64 m = 1; m <= 5000; ++m)
           if (counting::smm(Locus::G, m, euler::Mode::leading).total.sign() < 0)
             fail("m = ", m);
         return std::string();
       }},
      {"P3 second component appears iff m = 2 mod 4, on D = 1 mod 8",
       [](unsigned) {
         for (u64 m = 1; m <= 2000; ++m) {
           auto c = counting::smm(Locus::P3, m, euler::Mode::main_term);
           bool has2 = false;
           for (const auto& x : c.contributions)
             if (x.component == 2u) {
               has2 = true;
               if (x.D % 8 != 1) fail("discriminant ", x.D, " for m = ", m);
             }
           if (has2 != (m % 4 == 2)) fail("gating at m = ", m);
         }
         return std::string();
       }},
  };
}

// ---------------------------------------------------------------- volume

std::vector<Check> volume_checks() {
  using counting::Locus;
  using volume::Estimator;
  auto volume_check = [](Locus l, u64 D, euler::Mode mode, double tol,
                         double extrapolated_tol) {
    return [=](unsigned threads) {
      auto est = volume::volume_estimate(l, D, Estimator::direct, mode, threads);
      std::ostringstream os;
      os << "relative error " << est.relative_error << ", extrapolated "
         << est.extrapolated_relative_error;
      if (est.relative_error > tol || est.extrapolated_relative_error > extrapolated_tol)
        fail(os.str());
      return os.str();
    };
  };
  return {
      {"S_1(D) = sum_{d<=D} sigma_3(d) for D <= 10^5",
       [](unsigned) {
         const u64 N = 100000;
         auto a = arith::sl2_order_table(N);
         auto s = arith::sigma1_table(N);
         // increment S_1(n) - S_1(n-1) = sum_{m|n} sigma(n/m) a(m)
         std::vector<unsigned __int128> inc(N + 1, 0);
         for (u64 m = 1; m <= N; ++m)
           for (u64 j = 1; m * j <= N; ++j)
             inc[m * j] += static_cast<unsigned __int128>(a[m]) * s[j];
         Integer total = 0;
         for (u64 n = 1; n <= N; ++n) {
           Integer sig3 = arith::sigma(3, n);
           unsigned __int128 v = inc[n];
           Integer got = (to_integer(static_cast<std::uint64_t>(v >> 64)) << 64) +
                         to_integer(static_cast<std::uint64_t>(v));
           if (got != sig3) fail("increment differs at n = ", n);
           total += sig3;
         }
         if (volume::sk_sum(1, N) != total) fail("S_1(10^5) differs");
         for (u64 D : {1, 2, 3, 10, 97, 1000, 4321})
           if (volume::sk_sum(1, D) != [&] {
                 Integer t = 0;
                 for (u64 n = 1; n <= D; ++n) t += arith::sigma(3, n);
                 return t;
               }())
             fail("S_1(", D, ") differs");
         return std::string();
       }},
      {"S_k(10^5) / (c_k 10^20) in [0.99, 1.01] for k in {1,2,3,6}",
       [](unsigned) {
         std::ostringstream os;
         for (u64 k : {1, 2, 3, 6}) {
           double ratio = volume::sk_sum(k, 100000).get_d() /
                          (volume::sk_asymptotic_constant(k).to_double() * 1e20);
           os << "k=" << k << ":" << ratio << " ";
           if (ratio < 0.99 || ratio > 1.01) fail(os.str());
         }
         return os.str();
       }},
      {"S_k deviation is O(1/D) with a non-growing envelope, D = 1000 .. 64000",
       [](unsigned) {
         // the second-order term changes sign with D mod k, so compare against two steps back
         for (u64 k : {1, 2, 3, 6}) {
           double c = volume::sk_asymptotic_constant(k).to_double();
           std::vector<double> dev;
           for (u64 D = 1000; D <= 64000; D *= 2) {
             dev.push_back(
                 std::abs(volume::sk_sum(k, D).get_d() / (c * std::pow(double(D), 4)) - 1));
             if (double(D) * dev.back() > 8) fail("k = ", k, ", D = ", D, ": D * deviation > 8");
           }
           for (std::size_t i = 2; i < dev.size(); ++i)
             if (dev[i] > std::max(dev[i - 1], dev[i - 2]))
               fail("k = ", k, ", D = ", 1000 << i, ": envelope grows");
         }
         return std::string();
       }},
      {"P4 direct and closed sums agree exactly for D <= 2000",
       [](unsigned threads) {
         auto table = volume::smm_table(Locus::P4, 2000, euler::Mode::main_term, threads);
         Rational direct = 0;
         for (u64 D = 1; D <= 2000; ++D) {
           for (u64 m : arith::divisors(D))
             direct += Rational(arith::sigma(1, D / m)) * table[m];
           Rational closed = volume::closed_sum(Locus::P4, D);
           if (direct != closed) fail("D = ", D);
         }
         return std::string();
       }},
      {"gothic leading direct and closed sums agree at the checkpoints",
       [](unsigned threads) {
         auto direct = volume::volume_estimate(Locus::G, 2000, Estimator::direct,
                                               euler::Mode::leading, threads);
         auto closed = volume::volume_estimate(Locus::G, 2000, Estimator::closed,
                                               euler::Mode::leading, threads);
         for (std::size_t i = 0; i < direct.series.size(); ++i)
           if (direct.series[i].exact_sum != closed.series[i].exact_sum)
             fail("checkpoint D = ", direct.series[i].D);
         return std::string();
       }},
      {"gothic summand limits sum to the volume", [](unsigned) {
         PiQuantity total{Rational(0), 4};
         for (u64 r : {1, 2, 3, 6}) total = total + volume::gothic_summand_limit(r);
         if (!(total == volume::volume_exact(Locus::G))) fail(total.str());
         return total.str();
       }},
      {"AEZ conversions give 5/9 pi^4 and 28/135 pi^4", [](unsigned) {
         if (!(volume::convert_convention(Locus::P3) == PiQuantity(Rational(5, 9), 4)) ||
             !(volume::convert_convention(Locus::P4) == PiQuantity(Rational(28, 135), 4)))
           fail("conversion constants differ");
         return std::string();
       }},
      {"H(2) direct estimate at D = 4000 within 1%",
       volume_check(Locus::H2, 4000, euler::Mode::exact, 0.01, 0.01)},
      {"P3 direct estimate at D = 4000 within 2%",
       volume_check(Locus::P3, 4000, euler::Mode::main_term, 0.02, 0.02)},
      {"P4 direct estimate at D = 4000 within 2%",
       volume_check(Locus::P4, 4000, euler::Mode::main_term, 0.02, 0.02)},
      {"gothic direct estimate at D = 2000 within 5%, extrapolated within 1%",
       volume_check(Locus::G, 2000, euler::Mode::main_term, 0.05, 0.01)},
  };
}

const std::map<std::string, std::function<std::vector<Check>()>>& registry() {
  static const std::map<std::string, std::function<std::vector<Check>()>> r = {
      {"arith", arith_checks},       {"prototypes", prototype_checks},
      {"qforms", qform_checks},      {"zagier", zagier_checks},
      {"ideals", ideal_checks},      {"euler", euler_checks},
      {"counting", counting_checks}, {"volume", volume_checks},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "arith", "prototypes", "qforms", "zagier",
      "ideals", "euler", "counting", "volume"};
  return names;
}

std::vector<CheckResult> run(const std::string& suite, unsigned threads,
                             std::ostream* progress) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    MVCOUNT_REQUIRE(registry().count(suite), "unknown verify suite: " + suite);
    suites = {suite};
  }
  std::vector<CheckResult> out;
  for (const auto& name : suites) {
    for (const auto& check : registry().at(name)()) {
      auto start = std::chrono::steady_clock::now();
      CheckResult res{name, check.name, true, "", 0};
      try {
        res.detail = check.body(threads);
      } catch (const Failure& f) {
        res.passed = false;
        res.detail = f.message;
      } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("exception: ") + e.what();
      }
      res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      if (progress)
        *progress << (res.passed ? "[pass] " : "[FAIL] ") << name << ": "
                  << check.name << " (" << res.elapsed_ms << " ms)"
                  << (res.detail.empty() ? "" : " " + res.detail) << std::endl;
      out.push_back(res);
      if (!res.passed) return out;
    }
  }
  return out;
}

}  // namespace mvcount::verify
