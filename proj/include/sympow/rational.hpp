#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sympow {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Backed by GMP.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long numerator) : value_(numerator) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }
  Rational(long numerator, long denominator)
      : Rational(mpz_class(numerator), mpz_class(denominator)) {}
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  /// Always "p/q", even for integers.
  std::string fraction_str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  static Rational parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    return Rational(q);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

}  // namespace sympow
