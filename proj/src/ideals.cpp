#include "mvcount/ideals.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "mvcount/arith.hpp"
#include "mvcount/error.hpp"

namespace mvcount::ideals {

using arith::i64;
using arith::u64;

namespace {

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

void require_spec(u64 d, u64 n, u64 r) {
  MVCOUNT_REQUIRE(d >= 2, "ideal: d must be at least 2");
  MVCOUNT_REQUIRE(n >= 1 && arith::is_squarefree(n),
                  "ideal: n must be squarefree");
  MVCOUNT_REQUIRE(r >= 1 && n % r == 0,
                  "ideal: r = " + std::to_string(r) + " does not divide n");
}

// Inverse of a modulo m (a, m coprime, m >= 1).
i64 inverse_mod(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  MVCOUNT_CHECK(old_r == 1, "inverse_mod: arguments not coprime");
  return mod(old_s, m);
}

// Primitive generator of {(x, y) : u x + v y = 0}.
std::pair<i64, i64> kernel_generator(i64 u, i64 v) {
  i64 g = std::gcd(u, v);
  MVCOUNT_CHECK(g != 0, "kernel_generator: zero form");
  return {v / g, -u / g};
}

}  // namespace

bool in_order(u64 d, const QuadPair& x) {
  return mod(x.a1 - x.a2, static_cast<i64>(d)) == 0;
}

bool ideal_membership(const IdealSpec& spec, const QuadPair& x) {
  return in_order(spec.d, x) && mod(x.a1, spec.r) == 0 &&
         mod(x.a2, spec.n / spec.r) == 0;
}

IdealSpec ideal_basis(u64 d, u64 n, u64 r) {
  require_spec(d, n, r);
  const u64 s = n / r;
  const u64 g = std::gcd(d, s);
  // a d + b s = g, with b taken in [0, d/g)
  const i64 b = inverse_mod(static_cast<i64>(s / g), static_cast<i64>(d / g));
  IdealSpec spec{d, n, r, {static_cast<i64>(r * g), b * static_cast<i64>(n)},
                 {0, static_cast<i64>(std::lcm(d, s))}};
  MVCOUNT_CHECK(ideal_membership(spec, spec.g1) &&
                    ideal_membership(spec, spec.g2),
                "ideal_basis: generator outside the ideal");
  return spec;
}

bool ideal_equal(u64 d, u64 n, u64 r, u64 s) {
  require_spec(d, n, r);
  require_spec(d, n, s);
  const u64 g = std::gcd(d, n);
  return std::lcm(r, g) == std::lcm(s, g);
}

u64 galois_conjugate(u64 r, u64 n) {
  MVCOUNT_REQUIRE(n >= 1 && arith::is_squarefree(n),
                  "galois_conjugate: n must be squarefree");
  MVCOUNT_REQUIRE(r >= 1 && n % r == 0, "galois_conjugate: r must divide n");
  return n / r;
}

u64 class_count(u64 d, u64 n) {
  MVCOUNT_REQUIRE(d >= 2, "class_count: d must be at least 2");
  MVCOUNT_REQUIRE(n >= 1 && arith::is_squarefree(n),
                  "class_count: n must be squarefree");
  return arith::divisor_count(n / std::gcd(d, n));
}

std::vector<u64> component_list(u64 d) {
  MVCOUNT_REQUIRE(d >= 1, "component_list: d must be positive");
  switch (d % 6) {
    case 0: return {1};
    case 3: return {1, 2};
    case 2:
    case 4: return {1, 3};
    default: return {1, 2, 3, 6};
  }
}

Matrix4 gram_matrix(u64 d, u64 n, u64 r) {
  IdealSpec spec = ideal_basis(d, n, r);
  const i64 dd = static_cast<i64>(d);
  const QuadPair g[2] = {spec.g1, spec.g2};
  Matrix4 M{};
  for (int i = 0; i < 2; ++i) {
    // tr(g eta1) and tr(g eta2); the second is integral since g lies in O
    i64 t1 = g[i].a2;
    i64 t2 = (g[i].a2 - g[i].a1) / dd;
    M[i][2] = t1;
    M[i][3] = t2;
    M[2][i] = -t1;
    M[3][i] = -t2;
  }
  return M;
}

std::pair<i64, i64> symplectic_divisors(const Matrix4& input) {
  Matrix4 M = input;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      MVCOUNT_REQUIRE(M[i][j] == -M[j][i], "symplectic_divisors: not alternating");

  // congruence operations keep M alternating
  auto add = [&](int i, int j, i64 c) {  // row_i += c row_j, col_i += c col_j
    for (int t = 0; t < 4; ++t) M[i][t] += c * M[j][t];
    for (int t = 0; t < 4; ++t) M[t][i] += c * M[t][j];
  };
  auto swap = [&](int i, int j) {
    if (i == j) return;
    std::swap(M[i], M[j]);
    for (int t = 0; t < 4; ++t) std::swap(M[t][i], M[t][j]);
  };

  for (int k = 0; k < 4; k += 2) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = k; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (M[i][j] != 0 &&
              (bi < 0 || std::llabs(M[i][j]) < std::llabs(M[bi][bj]))) {
            bi = i;
            bj = j;
          }
      MVCOUNT_REQUIRE(bi >= 0, "symplectic_divisors: degenerate form");
      swap(k, bi);
      swap(k + 1, bj);
      if (M[k][k + 1] < 0) swap(k, k + 1);
      const i64 p = M[k][k + 1];

      bool cleared = true;
      for (int l = k + 2; l < 4; ++l) {
        add(l, k + 1, -(M[k][l] / p));
        add(l, k, M[k + 1][l] / p);
        if (M[k][l] != 0 || M[k + 1][l] != 0) cleared = false;
      }
      if (!cleared) continue;

      int bad = -1;
      for (int i = k + 2; i < 4 && bad < 0; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (M[i][j] % p != 0) bad = i;
      if (bad < 0) break;
      add(k, bad, 1);
    }
  }
  return {M[0][1], M[2][3]};
}

std::pair<i64, i64> polarization_restriction(u64 d, u64 n, u64 r) {
  IdealSpec spec = ideal_basis(d, n, r);
  const i64 dd = static_cast<i64>(d);
  // dual basis scaled by d: eta1 -> (0, d), eta2 -> (-1, 1)
  const QuadPair e1{0, dd}, e2{-1, 1};
  auto restricted = [&](bool first) {
    auto coord = [first](const QuadPair& x) { return first ? x.a1 : x.a2; };
    auto [x, y] = kernel_generator(coord(spec.g1), coord(spec.g2));
    QuadPair alpha{x * spec.g1.a1 + y * spec.g2.a1,
                   x * spec.g1.a2 + y * spec.g2.a2};
    auto [z, w] = kernel_generator(coord(e1), coord(e2));
    QuadPair beta{z * e1.a1 + w * e2.a1, z * e1.a2 + w * e2.a2};
    i64 pairing = alpha.a1 * beta.a1 + alpha.a2 * beta.a2;
    MVCOUNT_CHECK(pairing % dd == 0, "polarization_restriction: non-integral");
    return std::llabs(pairing / dd);
  };
  // Lambda_1: second coordinates vanish; Lambda_2: first coordinates vanish
  return {restricted(false), restricted(true)};
}

}  // namespace mvcount::ideals
