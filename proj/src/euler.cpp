#include "mvcount/euler.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mvcount/arith.hpp"
#include "mvcount/ideals.hpp"
#include "mvcount/prototypes.hpp"

namespace mvcount::euler {

using arith::u64;

std::string_view to_string(Family f) {
  switch (f) {
    case Family::X: return "X";
    case Family::X_br: return "X_br";
    case Family::W2: return "W2";
    case Family::W4: return "W4";
    case Family::W6: return "W6";
    case Family::R: return "R";
    case Family::G: return "G";
  }
  return "?";
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::exact: return "exact";
    case Mode::main_term: return "main_term";
    case Mode::leading: return "leading";
    case Mode::remark: return "remark";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::X, Family::X_br, Family::W2, Family::W4, Family::W6,
                   Family::R, Family::G})
    if (s == to_string(f)) return f;
  throw DomainError("unknown family: " + std::string(s));
}

Mode parse_mode(std::string_view s) {
  if (s == "main") return Mode::main_term;
  for (Mode m : {Mode::exact, Mode::main_term, Mode::leading, Mode::remark})
    if (s == to_string(m)) return m;
  throw DomainError("unknown mode: " + std::string(s));
}

namespace {

struct SquareInfo {
  bool is_square;
  u64 d;
};

SquareInfo inspect(u64 D) {
  prototypes::require_discriminant(D);
  u64 d = arith::isqrt(D);
  return {d * d == D, d};
}

void require_component(u64 d, u64 r) {
  auto list = ideals::component_list(d);
  MVCOUNT_REQUIRE(std::find(list.begin(), list.end(), r) != list.end(),
                  "r = " + std::to_string(r) + " is not a component for d = " +
                      std::to_string(d));
}

Rational br_ratio(u64 d) {
  switch (std::gcd<u64>(d, 6)) {
    case 1: return 1;
    case 2: return Rational(3, 2);
    case 3: return Rational(4, 3);
    default: return 2;
  }
}

Rational gothic_coefficient(u64 f) {
  switch (std::gcd<u64>(f, 6)) {
    case 1: return Rational(3, 2);
    case 2: return Rational(9, 4);
    case 3: return 2;
    default: return 3;
  }
}

}  // namespace

Rational chi_X_square(u64 d) {
  MVCOUNT_REQUIRE(d >= 1, "chi_X_square: d must be positive");
  return Rational(arith::sl2_order(d)) / Rational(72);
}

Rational chi_X_nonsquare(u64 D) {
  auto info = inspect(D);
  MVCOUNT_REQUIRE(!info.is_square, "chi_X_nonsquare: D is a square");
  MVCOUNT_REQUIRE(D > 4, "chi_X_nonsquare: D must exceed 4");
  return prototypes::e_value(D, 1) / Rational(30);
}

Rational chi_X_br(u64 d, u64 r) {
  MVCOUNT_REQUIRE(d >= 1, "chi_X_br: d must be positive");
  require_component(d, r);
  return br_ratio(d) * chi_X_square(d);
}

Rational chi_W2(u64 D) {
  auto info = inspect(D);
  MVCOUNT_REQUIRE(D != 1, "chi_W2: D = 1 is not allowed");
  if (!info.is_square) return Rational(-9, 2) * chi_X_nonsquare(D);
  // d^2 sum_{r|d} mu(r)/r^2 = a(d)/d
  const u64 d = info.d;
  return -Rational(arith::sl2_order(d)) * Rational(d - 2) / Rational(16 * d);
}

EulerCharRecord chi_W4(u64 D, u64 j, Mode mode) {
  auto info = inspect(D);
  MVCOUNT_REQUIRE(j == 1 || j == 2, "chi_W4: component must be 1 or 2");
  MVCOUNT_REQUIRE(j == 1 || D % 8 == 1,
                  "chi_W4: component 2 exists only for D = 1 mod 8");
  EulerCharRecord rec{Family::W4, D, j, mode, Rational(0)};
  if (info.is_square) {
    MVCOUNT_REQUIRE(mode == Mode::main_term,
                    "chi_W4: square discriminants need mode main_term");
    rec.nonstandard = info.d == 1;
    Rational c = info.d % 2 ? Rational(-5, 2) : Rational(-15, 4);
    rec.value = c * chi_X_square(info.d);
    return rec;
  }
  MVCOUNT_REQUIRE(mode == Mode::exact,
                  "chi_W4: non-square discriminants need mode exact");
  MVCOUNT_REQUIRE(D > 4, "chi_W4: D must exceed 4");
  if (D % 8 == 5) {
    rec.empty = true;
    return rec;
  }
  u64 f = prototypes::conductor_decompose(D).f;
  Rational c = f % 2 ? Rational(-5, 2) : Rational(-15, 4);
  rec.value = c * chi_X_nonsquare(D);
  return rec;
}

EulerCharRecord chi_W6(u64 D, Mode mode) {
  auto info = inspect(D);
  EulerCharRecord rec{Family::W6, D, std::nullopt, mode, Rational(0)};
  if (info.is_square) {
    MVCOUNT_REQUIRE(mode == Mode::main_term,
                    "chi_W6: square discriminants need mode main_term");
    rec.nonstandard = info.d == 1;
    rec.value = Rational(-7) * chi_X_square(info.d);
    return rec;
  }
  MVCOUNT_REQUIRE(mode == Mode::exact,
                  "chi_W6: non-square discriminants need mode exact");
  MVCOUNT_REQUIRE(D > 4, "chi_W6: D must exceed 4");
  rec.value = Rational(-7) * chi_X_nonsquare(D);
  return rec;
}

u64 c_D(u64 D) {
  auto info = inspect(D);
  if (info.is_square) return arith::divisor_count(6 / std::gcd<u64>(info.d, 6));
  switch (D % 24) {
    case 0:
    case 12: return 1;
    case 4:
    case 9:
    case 16: return 2;
    case 1: return 4;
    default:
      throw DomainError("c_D: D = " + std::to_string(D) +
                        " is outside the residue table mod 24");
  }
}

Rational chi_R(u64 D) {
  return -prototypes::e_value(D, 6) / Rational(6 * c_D(D));
}

std::uint64_t remark_coefficient(u64 d) {
  switch (std::gcd<u64>(d, 6)) {
    case 1: return 2;
    case 2: return 6;
    case 3: return 3;
    default: return 9;
  }
}

Rational leading_coefficient(u64 d) {
  switch (std::gcd<u64>(d, 6)) {
    case 1: return Rational(13, 720);
    case 2: return Rational(13, 480);
    case 3: return Rational(13, 540);
    default: return Rational(13, 360);
  }
}

EulerCharRecord chi_G(u64 D, u64 r, Mode mode) {
  auto info = inspect(D);
  EulerCharRecord rec{Family::G, D, r, mode, Rational(0)};
  if (!info.is_square) {
    MVCOUNT_REQUIRE(mode == Mode::exact,
                    "chi_G: non-square discriminants need mode exact");
    MVCOUNT_REQUIRE(D > 5, "chi_G: D must exceed 5");
    const u64 res = D % 24;
    MVCOUNT_REQUIRE(res == 0 || res == 1 || res == 4 || res == 9 || res == 12 ||
                        res == 16,
                    "chi_G: the gothic curve is empty for D = " +
                        std::to_string(D));
    MVCOUNT_REQUIRE(r >= 1 && r <= c_D(D), "chi_G: component out of range");
    u64 f = prototypes::conductor_decompose(D).f;
    rec.value = -gothic_coefficient(f) * chi_X_nonsquare(D) -
                Rational(2) * chi_R(D);
    return rec;
  }
  const u64 d = info.d;
  MVCOUNT_REQUIRE(mode != Mode::exact,
                  "chi_G: square discriminants have no exact formula");
  require_component(d, r);
  rec.nonstandard = d == 1;
  switch (mode) {
    case Mode::leading:
      rec.value = -leading_coefficient(d) * Rational(arith::sl2_order(d));
      break;
    case Mode::remark:
      MVCOUNT_REQUIRE(r == 1, "chi_G: remark mode is defined only for r = 1");
      rec.value = -Rational(3, 2) * chi_X_br(d, r) - Rational(2) * chi_R(D) +
                  Rational(remark_coefficient(d), d) * chi_X_br(d, r);
      break;
    default:
      rec.value = -Rational(3, 2) * chi_X_br(d, r) - Rational(2) * chi_R(D);
      break;
  }
  return rec;
}

Rational chi_boundary_gap(u64 d, u64 r, u64 epsilon) {
  MVCOUNT_REQUIRE(d >= 2, "chi_boundary_gap: d must be at least 2");
  return Rational(epsilon, d) * chi_X_br(d, r);
}

}  // namespace mvcount::euler
