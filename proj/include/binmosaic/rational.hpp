#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace binmosaic {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction over unbounded integers.
//
// Always held in canonical form: the denominator is positive and shares no
// factor with the numerator, so structural equality is value equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)

  // Throws std::domain_error("zero denominator") when den == 0.
  Rational(BigInt num, BigInt den);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  double to_double() const;

  // "n" when the denominator is 1, otherwise "n/d".
  std::string to_string() const;

  // Accepts "n", "-n" and "n/d" with optional sign on either part.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Fixed-point rendering of `value` with `places` fractional digits,
// rounded half away from zero. Exact: no floating point is involved.
std::string to_fixed(const Rational& value, int places);

}  // namespace binmosaic
