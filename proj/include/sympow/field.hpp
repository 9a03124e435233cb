#pragma once

// Coefficient fields. Both expose the same static-shaped interface so that
// Polynomial<Field> and the Groebner engine are written once.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sympow/errors.hpp"

namespace sympow {

/// The rationals, with GMP coefficients.
class RationalField {
 public:
  using value_type = mpq_class;

  std::string name() const { return "QQ"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("RationalField: inverse of zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

  std::size_t hash(const value_type& a) const {
    auto limb = [](const mpz_class& z) -> std::size_t {
      return z == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) ^ static_cast<std::size_t>(mpz_size(z.get_mpz_t()));
    };
    std::size_t h = limb(a.get_num()) * 0x9e3779b97f4a7c15ull + limb(a.get_den());
    return sgn(a) < 0 ? ~h : h;
  }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  value_type parse(const std::string& text) const {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ArgumentError("cannot parse rational coefficient '" + text + "'");
    q.canonicalize();
    return q;
  }
};

namespace detail {
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace detail

/// Z/pZ for a prime p < 2^31; elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    if (p >= (1u << 31) || !detail::is_prime(p))
      throw ArgumentError("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Extended Euclid on signed 64-bit values.
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  std::size_t hash(value_type a) const { return a; }

  /// Symmetric representative in (-p/2, p/2], so small integers print as themselves.
  std::string to_string(value_type a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  value_type parse(const std::string& text) const {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(text, &pos);
      if (pos != text.size()) throw ArgumentError("trailing characters");
      long long r = v % static_cast<long long>(p_);
      return static_cast<value_type>(r < 0 ? r + p_ : r);
    } catch (const std::exception&) {
      throw ArgumentError("cannot parse prime-field coefficient '" + text + "'");
    }
  }

 private:
  std::uint32_t p_;
};

}  // namespace sympow
