#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "sympow/errors.hpp"

namespace sympow {

/// Upper bound on the number of ring variables. Desk-scale rings here have at
/// most ~20 variables (plus one auxiliary variable for intersections).
inline constexpr std::size_t kMaxVariables = 32;

/// Largest total degree a monomial may carry. Keeping every exponent below
/// 128 lets products and divisibility tests run bytewise inside 64-bit words.
inline constexpr unsigned kMaxMonomialDegree = 127;

/// Dense exponent vector. Slots beyond the ring's variable count stay zero,
/// so whole-array comparisons are meaningful. Exponent i lives in byte i of
/// the little-endian word array.
class Monomial {
 public:
  static constexpr std::size_t kWords = kMaxVariables / 8;

  Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps) {
    if (exps.size() > kMaxVariables) throw ArgumentError("Monomial: too many variables");
    Monomial m;
    unsigned deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw ArgumentError("Monomial: negative exponent");
      deg += static_cast<unsigned>(exps[i]);
      if (deg > kMaxMonomialDegree) throw BudgetExceeded("Monomial: total degree exceeds 127");
      m.set(i, static_cast<unsigned>(exps[i]));
    }
    m.degree_ = static_cast<std::uint16_t>(deg);
    return m;
  }

  static Monomial variable(std::size_t index, unsigned power = 1) {
    if (index >= kMaxVariables) throw ArgumentError("Monomial: variable index out of range");
    if (power > kMaxMonomialDegree) throw BudgetExceeded("Monomial: total degree exceeds 127");
    Monomial m;
    m.set(index, power);
    m.degree_ = static_cast<std::uint16_t>(power);
    return m;
  }

  unsigned operator[](std::size_t i) const {
    return static_cast<unsigned>((words_[i >> 3] >> ((i & 7) * 8)) & 0xffu);
  }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    // Bytes are < 128, so (b | H) - a borrows out of a byte's high bit iff a_i > b_i.
    constexpr std::uint64_t H = 0x8080808080808080ull;
    for (std::size_t w = 0; w < kWords; ++w)
      if ((((other.words_[w] | H) - words_[w]) & H) != H) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      // Per-byte "nonzero" flags in the high bit.
      constexpr std::uint64_t L = 0x7f7f7f7f7f7f7f7full;
      std::uint64_t a = ((words_[w] & L) + L) | words_[w];
      std::uint64_t b = ((other.words_[w] & L) + L) | other.words_[w];
      if (a & b & ~L) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.degree_ + b.degree_ > kMaxMonomialDegree) throw BudgetExceeded("Monomial: total degree exceeds 127");
    Monomial m;
    for (std::size_t w = 0; w < kWords; ++w) m.words_[w] = a.words_[w] + b.words_[w];
    m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return m;
  }

  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const {
    Monomial m;
    for (std::size_t w = 0; w < kWords; ++w) m.words_[w] = words_[w] - divisor.words_[w];
    m.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
    return m;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial m;
    unsigned deg = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = std::max((*this)[i], other[i]);
      if (e) m.set(i, e);
      deg += e;
    }
    if (deg > kMaxMonomialDegree) throw BudgetExceeded("Monomial: total degree exceeds 127");
    m.degree_ = static_cast<std::uint16_t>(deg);
    return m;
  }

  /// Bit i set iff variable i occurs. A necessary condition for a | b is
  /// (mask(a) & ~mask(b)) == 0.
  std::uint32_t support_mask() const {
    constexpr std::uint64_t L = 0x7f7f7f7f7f7f7f7full;
    std::uint32_t mask = 0;
    for (std::size_t w = 0; w < kWords; ++w) {
      // One flag bit per byte at bit 8i, then gathered into the top byte.
      std::uint64_t flags = ((((words_[w] & L) + L) | words_[w]) & ~L) >> 7;
      mask |= static_cast<std::uint32_t>((flags * 0x0102040810204080ull) >> 56) << (8 * w);
    }
    return mask;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.words_ == b.words_;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  void set(std::size_t i, unsigned e) {
    std::uint64_t shift = (i & 7) * 8;
    words_[i >> 3] = (words_[i >> 3] & ~(0xffull << shift)) | (static_cast<std::uint64_t>(e) << shift);
  }

  std::array<std::uint64_t, kWords> words_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders. Every kind is a total order compatible with
/// multiplication; the graded kinds refine total degree. `elimination(k)`
/// compares the first k variables first (graded reverse lexicographic within
/// each block), so it eliminates them.
class MonomialOrder {
 public:
  enum class Kind { grevlex, grlex, lex, elimination };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static constexpr MonomialOrder grlex() { return MonomialOrder(Kind::grlex, 0); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    if (block == 0 || block >= kMaxVariables) throw ArgumentError("elimination order: invalid block split");
    return MonomialOrder(Kind::elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  bool is_graded() const { return kind_ == Kind::grevlex || kind_ == Kind::grlex; }

  std::string name() const {
    switch (kind_) {
      case Kind::grevlex: return "grevlex";
      case Kind::grlex: return "grlex";
      case Kind::lex: return "lex";
      case Kind::elimination: return "elim(" + std::to_string(block_) + ")";
    }
    return "?";
  }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::grevlex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return revlex_tail(a, b, 0, kMaxVariables);
      case Kind::grlex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return lex_range(a, b, 0, kMaxVariables);
      case Kind::lex:
        return lex_range(a, b, 0, kMaxVariables);
      case Kind::elimination: {
        unsigned da = 0, db = 0;
        for (std::size_t i = 0; i < block_; ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        if (int c = revlex_tail(a, b, 0, block_); c != 0) return c;
        unsigned ra = a.degree() - da, rb = b.degree() - db;
        if (ra != rb) return ra < rb ? -1 : 1;
        return revlex_tail(a, b, block_, kMaxVariables);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  // Among equal-degree monomials on [lo, hi): the one with the smaller exponent
  // in the last differing variable is larger.
  static int revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    if (lo == 0 && hi == kMaxVariables) {
      for (std::size_t w = Monomial::kWords; w-- > 0;) {
        std::uint64_t x = a.words()[w] ^ b.words()[w];
        if (x == 0) continue;
        std::size_t i = w * 8 + static_cast<std::size_t>(63 - std::countl_zero(x)) / 8;
        return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  static int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    if (lo == 0 && hi == kMaxVariables) {
      for (std::size_t w = 0; w < Monomial::kWords; ++w) {
        std::uint64_t x = a.words()[w] ^ b.words()[w];
        if (x == 0) continue;
        std::size_t i = w * 8 + static_cast<std::size_t>(std::countr_zero(x)) / 8;
        return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    }
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  Kind kind_ = Kind::grevlex;
  std::size_t block_ = 0;
};

}  // namespace sympow
