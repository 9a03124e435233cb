#pragma once

// Closed-form invariants of an ideal sequence a_1, ..., a_m described by a
// FamilyProfile: least degrees of symbolic powers, Waldschmidt constants,
// Chudnovsky/Demailly thresholds and asymptotic resurgence of pairs.
//
// Every comparison is done on integers after cross-multiplication.

#include <cstdint>
#include <string>

#include "sympow/errors.hpp"
#include "sympow/profile.hpp"
#include "sympow/rational.hpp"

namespace sympow {

/// alpha(a_t^(s)).
inline std::int64_t alpha_symbolic(const FamilyProfile& profile, std::int64_t t, std::int64_t s) {
  SymbolicIndex index(profile, t, s);
  const std::int64_t top = profile.alpha1() + profile.m() - 1;  // alpha(a_m)
  if (t == profile.m()) return s * top;                         // a_m^(s) = a_m^s
  auto [k, l] = index.decomposition();
  return k * top + profile.alpha1() + t - 2 + l;
}

/// Waldschmidt constant (alpha1 + m - 1) / (m - t + 1).
inline Rational waldschmidt(const FamilyProfile& profile, std::int64_t t) {
  profile.check_t(t);
  return Rational(profile.alpha1() + profile.m() - 1, profile.span(t));
}

struct ChudnovskyThreshold {
  std::int64_t value;
  /// True when t = 1 and alpha1 = 1: every N satisfies both bounds.
  bool vacuous;
};

/// Least N for which the Chudnovsky- and Demailly-type bounds hold for all
/// s, r; defined for 1 <= t < m.
inline ChudnovskyThreshold chudnovsky_threshold(const FamilyProfile& profile, std::int64_t t) {
  profile.check_t(t);
  if (t == profile.m())
    throw ArgumentError("chudnovsky_threshold: t = m is unconditional; no threshold exists");
  return {profile.span(t), t == 1 && profile.alpha1() == 1};
}

/// alpha(a_t^(s)) / s >= (alpha(a_t^(r)) + N - 1) / (r + N - 1).
inline bool demailly_holds(const FamilyProfile& profile, std::int64_t t, std::int64_t N, std::int64_t s,
                           std::int64_t r) {
  profile.check_t(t);
  if (N < 1) throw ArgumentError("demailly_holds: N must be >= 1");
  if (s < 1 || r < 1) throw ArgumentError("demailly_holds: s and r must be >= 1");
  if (t == profile.m()) return true;
  const std::int64_t lhs = alpha_symbolic(profile, t, s) * (r + N - 1);
  const std::int64_t rhs = (alpha_symbolic(profile, t, r) + N - 1) * s;
  return lhs >= rhs;
}

/// alpha(a_t^(s)) / s >= (alpha(a_t) + N - 1) / N, i.e. demailly_holds at r = 1.
inline bool chudnovsky_holds(const FamilyProfile& profile, std::int64_t t, std::int64_t N, std::int64_t s) {
  return demailly_holds(profile, t, N, s, 1);
}

namespace detail {
inline void require_linear_first(const FamilyProfile& profile, const char* op) {
  if (profile.alpha1() != 1)
    throw PreconditionError(std::string(op) + ": P3 requires a_1 linear (alpha1 = 1)");
}
}  // namespace detail

/// Asymptotic resurgence of (a_t^(.), (m^N a_t)^.) = (N + t)(m - t + 1) / m.
inline Rational resurgence_pair_symbolic_vs_mN_power(const FamilyProfile& profile, std::int64_t t,
                                                     std::int64_t N) {
  profile.check_t(t);
  if (N < 0) throw ArgumentError("resurgence: N must be >= 0");
  detail::require_linear_first(profile, "resurgence_pair_symbolic_vs_mN_power");
  return Rational((N + t) * profile.span(t), profile.m());
}

/// Asymptotic resurgence of (a_t^(.), closure(m^N a_t^.)) = t (m - t + 1) / m,
/// independent of N.
inline Rational resurgence_pair_symbolic_vs_closure_mN(const FamilyProfile& profile, std::int64_t t,
                                                       std::int64_t N) {
  profile.check_t(t);
  if (N < 0) throw ArgumentError("resurgence: N must be >= 0");
  detail::require_linear_first(profile, "resurgence_pair_symbolic_vs_closure_mN");
  return Rational(t * profile.span(t), profile.m());
}

struct StarConfigInvariants {
  FamilyProfile profile;
  std::int64_t t;  // position of I_{m,c} in the sequence: t = m - c + 1
  Rational waldschmidt;
  Rational resurgence;
};

/// Star configuration I_{m,c}, placed in the sequence a_t = I_{m, m-t+1}.
inline StarConfigInvariants star_config_invariants(std::int64_t m, std::int64_t c) {
  if (m < 1) throw ArgumentError("star configuration: m must be >= 1");
  if (c < 1 || c > m) throw ArgumentError("star configuration: c must lie in [1, m]");
  FamilyProfile profile(m, 1);
  const std::int64_t t = m - c + 1;
  return {profile, t, waldschmidt(profile, t), resurgence_pair_symbolic_vs_mN_power(profile, t, 0)};
}

}  // namespace sympow
