#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace intbalance {

using BigInt = mpz_class;

/// Exact rational number in canonical form (denominator > 0, lowest terms).
///
/// Values are immutable; every operation returns a new canonical value.
/// There is deliberately no constructor from `double`.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const BigInt& value);

  /// Parses `INT`, `INT.DIGITS` or `INT/POSINT` exactly. A leading '-' is
  /// accepted; rejecting negatives is the caller's business.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_negative() const { return sign() < 0; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  Rational& operator+=(const Rational& b);
  Rational& operator-=(const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class value);
  mpq_class value_{0};
};

Rational add(const Rational& a, const Rational& b);
Rational sub(const Rational& a, const Rational& b);

/// Greatest integer not exceeding `a`.
BigInt floor(const Rational& a);

/// a - floor(a), in [0, 1).
Rational decimal_part(const Rational& a);

/// True for non-integers: a weight is "decimal" when it has a fractional
/// part.
bool is_decimal(const Rational& a);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace intbalance
