#include "intbalance/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "intbalance/errors.hpp"

namespace intbalance {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt digits_to_int(std::string_view s) {
  return BigInt(std::string(s), 10);
}

RationalParseError malformed(std::string_view text) {
  return RationalParseError("malformed number '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(static_cast<long>(numerator)),
               BigInt(static_cast<long>(denominator))) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw RationalParseError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }

  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw malformed(text);
    const BigInt d = digits_to_int(den);
    if (d == 0) throw RationalParseError("zero denominator in '" +
                                         std::string(text) + "'");
    result = Rational(digits_to_int(num), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) throw malformed(text);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(digits_to_int(whole) * scale + digits_to_int(frac), scale);
  } else {
    if (!all_digits(body)) throw malformed(text);
    result = Rational(digits_to_int(body));
  }
  return negative ? -result : result;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ + b.value_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ - b.value_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ * b.value_));
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

Rational& Rational::operator+=(const Rational& b) {
  value_ += b.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& b) {
  value_ -= b.value_;
  return *this;
}

Rational add(const Rational& a, const Rational& b) { return a + b; }
Rational sub(const Rational& a, const Rational& b) { return a - b; }

BigInt floor(const Rational& a) {
  BigInt q;
  const BigInt num = a.numerator();
  const BigInt den = a.denominator();
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Rational decimal_part(const Rational& a) { return a - Rational(floor(a)); }

bool is_decimal(const Rational& a) { return !a.is_integer(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace intbalance
