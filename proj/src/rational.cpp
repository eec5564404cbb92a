#include "mvcount/rational.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mvcount {

Integer to_integer(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

Integer to_integer(std::int64_t v) {
  if (v >= 0) return to_integer(static_cast<std::uint64_t>(v));
  // -(v+1) avoids overflow at INT64_MIN
  Integer z = to_integer(static_cast<std::uint64_t>(-(v + 1)));
  return -z - 1;
}

Rational::Rational(const Integer& num, const Integer& den) {
  MVCOUNT_REQUIRE(den != 0, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: " + s);
  }
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  MVCOUNT_REQUIRE(!o.is_zero(), "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rational(num, den);
}

double PiQuantity::to_double() const {
  return coeff.to_double() * std::pow(std::numbers::pi, pi_power);
}

std::string PiQuantity::str() const {
  std::ostringstream os;
  os << coeff.str();
  if (pi_power != 0) os << "*pi^" << pi_power;
  return os.str();
}

PiQuantity operator/(const PiQuantity& a, const PiQuantity& b) {
  return {a.coeff / b.coeff, a.pi_power - b.pi_power};
}

PiQuantity operator+(const PiQuantity& a, const PiQuantity& b) {
  if (a.coeff.is_zero()) return b;
  if (b.coeff.is_zero()) return a;
  MVCOUNT_REQUIRE(a.pi_power == b.pi_power,
                  "adding quantities with different powers of pi");
  return {a.coeff + b.coeff, a.pi_power};
}

}  // namespace mvcount
