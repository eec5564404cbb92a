#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "doctest.h"
#include "mvcount/arith.hpp"
#include "mvcount/prototypes.hpp"

using namespace mvcount;
using arith::i64;
using arith::u64;

namespace {

// Largest f with D/f^2 a discriminant, read off by brute force.
u64 brute_conductor(u64 D) {
  u64 best = 1;
  for (u64 f = 1; f * f <= D; ++f) {
    if (D % (f * f)) continue;
    u64 q = D / (f * f);
    if (q % 4 == 0 || q % 4 == 1) best = f;
  }
  return best;
}

u64 largest_square_divisor_root(u64 n) {
  u64 best = 1;
  for (u64 s = 1; s * s <= n; ++s)
    if (n % (s * s) == 0) best = s;
  return best;
}

// Every (a, b, c) with a > 0 > c, b^2 < D, b^2 - 4kac = D, gcd(f, b, c0) = 1.
std::set<std::tuple<i64, i64, i64>> brute_prototypes(u64 D, u64 k) {
  std::set<std::tuple<i64, i64, i64>> out;
  const u64 f = brute_conductor(D);
  for (i64 b = -static_cast<i64>(D); b <= static_cast<i64>(D); ++b) {
    if (b * b >= static_cast<i64>(D)) continue;
    for (i64 a = 1; a <= static_cast<i64>(D); ++a)
      for (i64 c = -1; c >= -static_cast<i64>(D); --c) {
        if (b * b - 4 * static_cast<i64>(k) * a * c != static_cast<i64>(D)) continue;
        u64 c0 = largest_square_divisor_root(static_cast<u64>(-c));
        if (std::gcd(std::gcd(f, static_cast<u64>(std::llabs(b))), c0) != 1) continue;
        out.insert({a, b, c});
      }
  }
  return out;
}

}  // namespace

TEST_CASE("conductor decomposition examples") {
  auto x = prototypes::conductor_decompose(5);
  CHECK(x.f == 1);
  CHECK(x.D0 == 5);
  CHECK_FALSE(x.is_square);
  x = prototypes::conductor_decompose(9);
  CHECK(x.f == 3);
  CHECK(x.D0 == 1);
  CHECK(x.is_square);
  x = prototypes::conductor_decompose(45);
  CHECK(x.f == 3);
  CHECK(x.D0 == 5);
  CHECK_THROWS_AS(prototypes::conductor_decompose(2), DomainError);
  CHECK_THROWS_AS(prototypes::conductor_decompose(7), DomainError);
}

TEST_CASE("conductor agrees with brute force for non-squares") {
  for (u64 D = 5; D <= 3000; ++D) {
    if ((D % 4 != 0 && D % 4 != 1) || arith::is_square(D)) continue;
    auto x = prototypes::conductor_decompose(D);
    REQUIRE(x.f == brute_conductor(D));
    REQUIRE(x.f * x.f * x.D0 == D);
  }
}

TEST_CASE("prototype examples") {
  auto p5 = prototypes::enumerate_prototypes(5, 1);
  REQUIRE(p5.size() == 2);
  CHECK(p5[0].a == 1);
  CHECK(p5[0].b == -1);
  CHECK(p5[0].c == -1);
  CHECK(p5[1].b == 1);
  CHECK(prototypes::e_value(5, 1) == 2);

  auto p4 = prototypes::enumerate_prototypes(4, 1);
  REQUIRE(p4.size() == 1);
  CHECK(std::tie(p4[0].a, p4[0].b, p4[0].c) == std::make_tuple(1, 0, -1));
  CHECK(prototypes::e_value(4, 1) == 1);

  auto p8 = prototypes::enumerate_prototypes(8, 1);
  CHECK(p8.size() == 4);
  i64 sum = 0;
  for (const auto& p : p8) sum += p.a;
  CHECK(sum == 5);

  CHECK(prototypes::e_value(1, 6) == Rational(-1, 12));
  CHECK_THROWS_AS(prototypes::enumerate_prototypes(6, 1), DomainError);
  CHECK_THROWS_AS(prototypes::enumerate_prototypes(1, 1), DomainError);
}

TEST_CASE("enumeration equals an exhaustive scan") {
  for (u64 k : {1, 2, 3, 6})
    for (u64 D = 4; D <= 120; ++D) {
      if (D % 4 != 0 && D % 4 != 1) continue;
      std::set<std::tuple<i64, i64, i64>> got;
      for (const auto& p : prototypes::enumerate_prototypes(D, k)) {
        REQUIRE(p.k == k);
        REQUIRE(p.D == D);
        got.insert({p.a, p.b, p.c});
      }
      REQUIRE(got == brute_prototypes(D, k));
    }
}

TEST_CASE("enumeration order is increasing b, then increasing a") {
  for (u64 D : {97ULL, 400ULL, 1001ULL, 2304ULL}) {
    auto list = prototypes::enumerate_prototypes(D, 1);
    for (std::size_t i = 1; i < list.size(); ++i)
      REQUIRE(std::tie(list[i - 1].b, list[i - 1].a) < std::tie(list[i].b, list[i].a));
  }
}

TEST_CASE("e_sum equals the a-sum of the enumeration") {
  for (u64 k : {1, 6})
    for (u64 D = 4; D <= 3000; ++D) {
      if (D % 4 != 0 && D % 4 != 1) continue;
      i64 sum = 0;
      for (const auto& p : prototypes::enumerate_prototypes(D, k)) sum += p.a;
      REQUIRE(prototypes::e_sum(D, k) == sum);
    }
}

TEST_CASE("empty congruence class gives an empty set") {
  CHECK(prototypes::enumerate_prototypes(8, 6).empty());
  CHECK(prototypes::e_value(8, 6) == 0);
}
