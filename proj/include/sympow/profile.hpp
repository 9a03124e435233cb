#pragma once

#include <cstdint>
#include <string>

#include "sympow/errors.hpp"

namespace sympow {

/// Arithmetic abstraction of a sequence a_1, ..., a_m of homogeneous ideals
/// whose symbolic Rees algebras are generated recursively by the later members
/// and whose initial degrees grow by one: alpha(a_t) = alpha1 + t - 1.
class FamilyProfile {
 public:
  FamilyProfile(std::int64_t m, std::int64_t alpha1) : m_(m), alpha1_(alpha1) {
    if (m < 1) throw ArgumentError("FamilyProfile: m must be >= 1");
    if (alpha1 < 1) throw ArgumentError("FamilyProfile: alpha1 must be >= 1");
  }

  std::int64_t m() const { return m_; }
  std::int64_t alpha1() const { return alpha1_; }

  /// alpha(a_t) = alpha1 + t - 1.
  std::int64_t alpha(std::int64_t t) const {
    check_t(t);
    return alpha1_ + t - 1;
  }

  /// Number of ideals a_t, ..., a_m that generate the symbolic Rees algebra of a_t.
  std::int64_t span(std::int64_t t) const {
    check_t(t);
    return m_ - t + 1;
  }

  void check_t(std::int64_t t) const {
    if (t < 1 || t > m_)
      throw ArgumentError("t=" + std::to_string(t) + " outside [1, " + std::to_string(m_) + "]");
  }

  friend bool operator==(const FamilyProfile&, const FamilyProfile&) = default;

 private:
  std::int64_t m_;
  std::int64_t alpha1_;
};

/// s written as k*(m-t+1) + l with 1 <= l <= m-t+1.
struct Decomposition {
  std::int64_t k;
  std::int64_t l;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// s written as k'*(m-t+1) - l' with 0 <= l' <= m-t (and k' >= 1).
struct CeilingDecomposition {
  std::int64_t k;
  std::int64_t l;
  friend bool operator==(const CeilingDecomposition&, const CeilingDecomposition&) = default;
};

/// A symbolic power index (t, s) together with both of its decompositions.
class SymbolicIndex {
 public:
  SymbolicIndex(const FamilyProfile& profile, std::int64_t t, std::int64_t s) : t_(t), s_(s) {
    profile.check_t(t);
    if (s < 1) throw ArgumentError("symbolic exponent s must be >= 1");
    span_ = profile.span(t);
  }

  std::int64_t t() const { return t_; }
  std::int64_t s() const { return s_; }
  std::int64_t span() const { return span_; }

  Decomposition decomposition() const {
    std::int64_t k = (s_ - 1) / span_;
    return {k, s_ - k * span_};
  }

  CeilingDecomposition ceiling_decomposition() const {
    std::int64_t k = (s_ + span_ - 1) / span_;
    return {k, k * span_ - s_};
  }

  static std::int64_t from(const Decomposition& d, std::int64_t span) {
    if (d.k < 0 || d.l < 1 || d.l > span) throw ArgumentError("invalid (k, l) decomposition");
    return d.k * span + d.l;
  }

  static std::int64_t from(const CeilingDecomposition& d, std::int64_t span) {
    if (d.k < 1 || d.l < 0 || d.l > span - 1) throw ArgumentError("invalid (k', l') decomposition");
    return d.k * span - d.l;
  }

 private:
  std::int64_t t_;
  std::int64_t s_;
  std::int64_t span_;
};

}  // namespace sympow
