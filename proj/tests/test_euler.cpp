#include <numeric>

#include "doctest.h"
#include "mvcount/arith.hpp"
#include "mvcount/euler.hpp"
#include "mvcount/ideals.hpp"
#include "mvcount/prototypes.hpp"

using namespace mvcount;
using euler::Mode;
using std::uint64_t;

TEST_CASE("chi of the square Hilbert modular surfaces") {
  CHECK(euler::chi_X_square(2) == Rational(1, 12));
  CHECK(euler::chi_X_square(3) == Rational(1, 3));
  CHECK(euler::chi_X_square(6) == 2);
  CHECK(euler::chi_X_square(1) == Rational(1, 72));
  for (uint64_t d = 1; d <= 1000; ++d)
    REQUIRE(euler::chi_X_square(d) == Rational(arith::sl2_order(d)) / 72);
}

TEST_CASE("chi of non-square Hilbert modular surfaces") {
  CHECK(euler::chi_X_nonsquare(5) == Rational(1, 15));
  CHECK(euler::chi_X_nonsquare(8) == Rational(1, 6));
  CHECK(euler::chi_X_nonsquare(12) == prototypes::e_value(12, 1) / 30);
  CHECK_THROWS_AS(euler::chi_X_nonsquare(9), DomainError);
  CHECK_THROWS_AS(euler::chi_X_nonsquare(4), DomainError);
  for (uint64_t D = 5; D <= 500; ++D) {
    if ((D % 4 != 0 && D % 4 != 1) || arith::is_square(D)) continue;
    REQUIRE(euler::chi_X_nonsquare(D).sign() > 0);
  }
}

TEST_CASE("chi_X_br ratio table") {
  CHECK(euler::chi_X_br(5, 1) == euler::chi_X_square(5));
  CHECK(euler::chi_X_br(2, 1) == Rational(3, 2) * euler::chi_X_square(2));
  CHECK(euler::chi_X_br(3, 2) == Rational(4, 3) * euler::chi_X_square(3));
  CHECK(euler::chi_X_br(6, 1) == 2 * euler::chi_X_square(6));
  CHECK(euler::chi_X_br(7, 6) == euler::chi_X_br(7, 1));
  CHECK_THROWS_AS(euler::chi_X_br(6, 2), DomainError);
}

TEST_CASE("Weierstrass curves in genus 2") {
  CHECK(euler::chi_W2(9) == Rational(-1, 2));
  CHECK(euler::chi_W2(4) == 0);
  CHECK(euler::chi_W2(5) == Rational(-3, 10));
  CHECK_THROWS_AS(euler::chi_W2(1), DomainError);
  CHECK_THROWS_AS(euler::chi_W2(7), DomainError);
  for (uint64_t m = 2; m <= 500; ++m) {
    Rational c = Rational(-6) * euler::chi_W2(m * m);
    REQUIRE(c.is_integer());
    REQUIRE(c.sign() >= 0);
    REQUIRE(c.is_zero() == (m == 2));
  }
}

TEST_CASE("Prym curves in genus 3") {
  auto e = euler::chi_W4(13, 1, Mode::exact);
  CHECK(e.empty);
  CHECK(e.value == 0);
  auto a = euler::chi_W4(17, 1, Mode::exact);
  auto b = euler::chi_W4(17, 2, Mode::exact);
  CHECK(a.value == Rational(-5, 2) * euler::chi_X_nonsquare(17));
  CHECK(b.value == a.value);
  CHECK(euler::chi_W4(16, 1, Mode::main_term).value ==
        Rational(-15, 4) * euler::chi_X_square(4));
  CHECK(euler::chi_W4(32, 1, Mode::exact).value ==
        Rational(-15, 4) * euler::chi_X_nonsquare(32));
  CHECK_THROWS_AS(euler::chi_W4(12, 2, Mode::exact), DomainError);
  CHECK_THROWS_AS(euler::chi_W4(16, 1, Mode::exact), DomainError);
  CHECK_THROWS_AS(euler::chi_W4(17, 1, Mode::main_term), DomainError);
}

TEST_CASE("Prym curves in genus 4") {
  CHECK(euler::chi_W6(8, Mode::exact).value == Rational(-7, 6));
  CHECK(euler::chi_W6(4, Mode::main_term).value == Rational(-7, 12));
  CHECK(euler::chi_W6(5, Mode::exact).value == Rational(-7, 15));
}

TEST_CASE("ideal counts and chi_R") {
  CHECK(euler::c_D(25) == 4);
  CHECK(euler::c_D(36) == 1);
  CHECK(euler::c_D(16) == 2);
  CHECK(euler::c_D(12) == 1);
  CHECK(euler::c_D(33) == 2);
  CHECK(euler::c_D(73) == 4);
  CHECK_THROWS_AS(euler::c_D(8), DomainError);
  for (uint64_t d = 2; d <= 200; ++d)
    REQUIRE(euler::c_D(d * d) == ideals::class_count(d, 6));
  CHECK(euler::chi_R(49) == -prototypes::e_value(49, 6) / 24);
  CHECK(euler::chi_R(144) == -prototypes::e_value(144, 6) / 6);
  CHECK(euler::chi_R(12) == -prototypes::e_value(12, 6) / 6);
}

TEST_CASE("gothic curves") {
  CHECK_THROWS_AS(euler::chi_G(8, 1, Mode::exact), DomainError);
  CHECK(euler::chi_G(12, 1, Mode::exact).value ==
        Rational(-3, 2) * euler::chi_X_nonsquare(12) - 2 * euler::chi_R(12));
  CHECK(euler::chi_G(25, 1, Mode::leading).value == Rational(-13, 6));
  CHECK(euler::chi_G(49, 1, Mode::main_term).value ==
        Rational(-3, 2) * euler::chi_X_br(7, 1) - 2 * euler::chi_R(49));
  CHECK_THROWS_AS(euler::chi_G(49, 2, Mode::remark), DomainError);
  CHECK_THROWS_AS(euler::chi_G(49, 1, Mode::exact), DomainError);
  CHECK_THROWS_AS(euler::chi_G(12, 1, Mode::main_term), DomainError);
  for (uint64_t D = 5; D <= 600; ++D) {
    if ((D % 4 != 0 && D % 4 != 1) || arith::is_square(D)) continue;
    if (D % 24 != 0 && D % 24 != 1 && D % 24 != 4 && D % 24 != 9 && D % 24 != 12 &&
        D % 24 != 16)
      continue;
    for (uint64_t r = 1; r <= euler::c_D(D); ++r)
      REQUIRE(euler::chi_G(D, r, Mode::exact).value.sign() < 0);
  }
}

TEST_CASE("square gothic surrogates") {
  for (uint64_t d = 2; d <= 400; ++d) {
    Rational main = euler::chi_G(d * d, 1, Mode::main_term).value;
    Rational rem = euler::chi_G(d * d, 1, Mode::remark).value;
    Rational gap = euler::chi_boundary_gap(d, 1);
    REQUIRE(gap == Rational(9, d) * euler::chi_X_br(d, 1));
    REQUIRE(rem - main == Rational(euler::remark_coefficient(d), d) * euler::chi_X_br(d, 1));
    REQUIRE(rem - main >= 0);
    REQUIRE(rem - main <= gap);
    Rational lead = euler::chi_G(d * d, 1, Mode::leading).value;
    REQUIRE(lead == -euler::leading_coefficient(d) * Rational(arith::sl2_order(d)));
  }
}

TEST_CASE("d = 1 records") {
  auto w6 = euler::chi_W6(1, Mode::main_term);
  CHECK(w6.nonstandard);
  auto g = euler::chi_G(1, 1, Mode::leading);
  CHECK(g.nonstandard);
  CHECK_THROWS_AS(euler::chi_G(1, 1, Mode::exact), DomainError);
}

TEST_CASE("name round trips") {
  for (auto f : {euler::Family::X, euler::Family::X_br, euler::Family::W2, euler::Family::W4,
                 euler::Family::W6, euler::Family::R, euler::Family::G})
    CHECK(euler::parse_family(euler::to_string(f)) == f);
  for (auto m : {Mode::exact, Mode::main_term, Mode::leading, Mode::remark})
    CHECK(euler::parse_mode(euler::to_string(m)) == m);
  CHECK(euler::parse_mode("main") == Mode::main_term);
  CHECK_THROWS_AS(euler::parse_mode("nope"), DomainError);
}
