#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gseq {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational scalar. Always in canonical form:
// denominator > 0 and gcd(|numerator|, denominator) = 1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : value_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0)
      value_ = Rep(-num, -den);
    else
      value_ = Rep(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return value_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(a.value_ / b.value_);
  }
  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }

  Rational abs() const { return value_ < 0 ? Rational(-value_) : *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  // "p/q", with "/q" omitted when the value is an integer.
  std::string str() const {
    std::string out = numerator().str();
    if (!is_integer()) out += "/" + denominator().str();
    return out;
  }

  // Accepts exactly the textual form produced by str(): an optional sign,
  // digits, and an optional "/digits" part. Decimal points and exponents are
  // rejected; exactness is non-negotiable here.
  static Rational parse(std::string_view text);

 private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Rational(Rep v) : value_(std::move(v)) {}
  Rep value_;
};

inline Rational Rational::parse(std::string_view text) {
  // trim outer whitespace
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  auto parse_int = [](std::string_view s, bool sign_ok) -> BigInt {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool negative = false;
    if (sign_ok && (s[0] == '+' || s[0] == '-')) {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9')
        throw std::invalid_argument("not an exact rational literal: '" + std::string(s) + "'");
    }
    const BigInt magnitude(std::string(s.substr(i)));
    return negative ? -magnitude : magnitude;
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  if (text.find('/', slash + 1) != std::string_view::npos)
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  BigInt num = parse_int(text.substr(0, slash), true);
  BigInt den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

}  // namespace gseq
