#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mvcount/error.hpp"

namespace mvcount {

using Integer = mpz_class;

Integer to_integer(std::uint64_t v);
Integer to_integer(std::int64_t v);

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(to_integer(static_cast<std::int64_t>(v))) {}
  Rational(unsigned long v) : q_(v) {}
  Rational(unsigned long long v)
      : q_(to_integer(static_cast<std::uint64_t>(v))) {}
  Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpq_class q_;
};

Rational pow(const Rational& base, unsigned exponent);

/// A rational multiple of an integral power of pi, e.g. 13*pi^4/31104.
struct PiQuantity {
  Rational coeff;
  int pi_power = 0;

  PiQuantity() = default;
  PiQuantity(Rational c, int power) : coeff(std::move(c)), pi_power(power) {}

  double to_double() const;
  std::string str() const;

  PiQuantity operator-() const { return {-coeff, pi_power}; }
  friend PiQuantity operator*(const PiQuantity& a, const PiQuantity& b) {
    return {a.coeff * b.coeff, a.pi_power + b.pi_power};
  }
  friend PiQuantity operator*(const Rational& a, const PiQuantity& b) {
    return {a * b.coeff, b.pi_power};
  }
  friend PiQuantity operator/(const PiQuantity& a, const PiQuantity& b);
  /// Throws DomainError when the pi powers differ and neither side is zero.
  friend PiQuantity operator+(const PiQuantity& a, const PiQuantity& b);
  friend PiQuantity operator-(const PiQuantity& a, const PiQuantity& b) {
    return a + (-b);
  }
  friend bool operator==(const PiQuantity& a, const PiQuantity& b) {
    return a.pi_power == b.pi_power && a.coeff == b.coeff;
  }
};

}  // namespace mvcount
