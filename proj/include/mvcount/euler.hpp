#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mvcount/rational.hpp"

namespace mvcount::euler {

enum class Family { X, X_br, W2, W4, W6, R, G };
/// exact: unconditional formula. main_term, leading, remark: surrogates for
/// square discriminants, where only asymptotic information is available.
enum class Mode { exact, main_term, leading, remark };

std::string_view to_string(Family f);
std::string_view to_string(Mode m);
Family parse_family(std::string_view s);
Mode parse_mode(std::string_view s);

struct EulerCharRecord {
  Family family;
  std::uint64_t D;
  std::optional<std::uint64_t> component;
  Mode mode;
  Rational value;
  bool empty = false;         // the curve does not exist for this D
  bool nonstandard = false;   // evaluated at d = 1 outside the formula's range
};

/// chi(X_{d^2}) = a(d)/72, applied for every d >= 1.
Rational chi_X_square(std::uint64_t d);
/// chi(X_D) = e(D,1)/30 for non-square D > 4.
Rational chi_X_nonsquare(std::uint64_t D);
/// chi(X_{d^2}(b_r)) = ratio(gcd(6,d)) * chi(X_{d^2}).
Rational chi_X_br(std::uint64_t d, std::uint64_t r);

Rational chi_W2(std::uint64_t D);
EulerCharRecord chi_W4(std::uint64_t D, std::uint64_t j, Mode mode);
EulerCharRecord chi_W6(std::uint64_t D, Mode mode);

/// Number of ideals of norm 6: sigma_0(6/(d,6)) for squares, residue table
/// mod 24 otherwise.
std::uint64_t c_D(std::uint64_t D);
/// chi(R_D) = -e(D,6) / (6 c_D).
Rational chi_R(std::uint64_t D);

EulerCharRecord chi_G(std::uint64_t D, std::uint64_t r, Mode mode);

inline constexpr std::uint64_t kDefaultEpsilon = 9;
/// (eps/d) chi(X_{d^2}(b_r)): width of the square-discriminant sandwich.
Rational chi_boundary_gap(std::uint64_t d, std::uint64_t r,
                          std::uint64_t epsilon = kDefaultEpsilon);

/// Correction coefficient of the r = 1 formula: 2, 6, 3, 9 by (6,d).
std::uint64_t remark_coefficient(std::uint64_t d);
/// kappa'(d) in {13/720, 13/480, 13/540, 13/360} by (6,d).
Rational leading_coefficient(std::uint64_t d);

}  // namespace mvcount::euler
