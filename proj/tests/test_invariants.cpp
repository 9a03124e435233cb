#include <gtest/gtest.h>

#include "sympow/intprog.hpp"
#include "sympow/invariants.hpp"

using namespace sympow;

TEST(AlphaSymbolic, KnownValues) {
  FamilyProfile g(3, 1);
  EXPECT_EQ(alpha_symbolic(g, 2, 2), 3);
  EXPECT_EQ(alpha_symbolic(g, 2, 3), 5);
  EXPECT_EQ(alpha_symbolic(FamilyProfile(5, 1), 5, 4), 20);
}

// The documented example value 22 for (m=4, alpha1=2, t=3, s=7) does not
// survive enumeration: the compositions of 7 over weights (3, 4) give 19.
TEST(AlphaSymbolic, EnumeratedValueForShiftedProfile) {
  FamilyProfile p(4, 2);
  EXPECT_EQ(alpha_by_enumeration(p, 3, 7), 19);
  EXPECT_EQ(alpha_symbolic(p, 3, 7), 19);
}

TEST(AlphaSymbolic, MatchesEnumerationOnGrid) {
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t a1 = 1; a1 <= 4; ++a1) {
      FamilyProfile p(m, a1);
      for (std::int64_t t = 1; t <= m; ++t)
        for (std::int64_t s = 1; s <= 3 * p.span(t) + 2; ++s)
          ASSERT_EQ(alpha_symbolic(p, t, s), alpha_by_enumeration(p, t, s))
              << "m=" << m << " a1=" << a1 << " t=" << t << " s=" << s;
    }
}

TEST(AlphaSymbolic, Errors) {
  FamilyProfile p(3, 1);
  EXPECT_THROW(alpha_symbolic(p, 0, 1), ArgumentError);
  EXPECT_THROW(alpha_symbolic(p, 4, 1), ArgumentError);
  EXPECT_THROW(alpha_symbolic(p, 2, 0), ArgumentError);
}

TEST(AlphaSymbolic, SubadditiveAndMonotone) {
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t a1 = 1; a1 <= 3; ++a1) {
      FamilyProfile p(m, a1);
      for (std::int64_t t = 1; t <= m; ++t)
        for (std::int64_t s = 1; s <= 15; ++s) {
          EXPECT_LT(alpha_symbolic(p, t, s), alpha_symbolic(p, t, s + 1));
          for (std::int64_t r = 1; r <= 15; ++r)
            ASSERT_LE(alpha_symbolic(p, t, s + r), alpha_symbolic(p, t, s) + alpha_symbolic(p, t, r));
        }
    }
}

TEST(Waldschmidt, Values) {
  EXPECT_EQ(waldschmidt(FamilyProfile(3, 1), 2), Rational(3, 2));
  EXPECT_EQ(waldschmidt(FamilyProfile(3, 1), 1), Rational(1));
  EXPECT_EQ(waldschmidt(FamilyProfile(3, 2), 2), Rational(2));
  EXPECT_EQ(waldschmidt(FamilyProfile(4, 1), 2).str(), "4/3");
  EXPECT_THROW(waldschmidt(FamilyProfile(3, 1), 4), ArgumentError);
}

// alpha(s)/s never drops below the constant and reaches it on multiples of the span.
TEST(Waldschmidt, IsInfimumAndAttained) {
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t a1 = 1; a1 <= 4; ++a1) {
      FamilyProfile p(m, a1);
      for (std::int64_t t = 1; t <= m; ++t) {
        auto w = waldschmidt(p, t);
        for (std::int64_t s = 1; s <= 30; ++s) {
          Rational ratio(alpha_symbolic(p, t, s), s);
          ASSERT_GE(ratio, w);
          if (s % p.span(t) == 0) {
            ASSERT_EQ(ratio, w);
          }
        }
      }
    }
}

TEST(Chudnovsky, Threshold) {
  auto th = chudnovsky_threshold(FamilyProfile(3, 1), 2);
  EXPECT_EQ(th.value, 2);
  EXPECT_FALSE(th.vacuous);
  EXPECT_EQ(chudnovsky_threshold(FamilyProfile(4, 2), 2).value, 3);
  EXPECT_TRUE(chudnovsky_threshold(FamilyProfile(4, 1), 1).vacuous);
  EXPECT_FALSE(chudnovsky_threshold(FamilyProfile(4, 2), 1).vacuous);
  EXPECT_THROW(chudnovsky_threshold(FamilyProfile(6, 1), 6), ArgumentError);
}

TEST(Chudnovsky, PointValues) {
  EXPECT_TRUE(demailly_holds(FamilyProfile(3, 1), 2, 2, 3, 1));
  EXPECT_FALSE(demailly_holds(FamilyProfile(3, 1), 2, 1, 2, 1));
  EXPECT_TRUE(demailly_holds(FamilyProfile(5, 1), 5, 1, 7, 3));
  EXPECT_THROW(demailly_holds(FamilyProfile(3, 1), 2, 0, 1, 1), ArgumentError);
}

// Below the threshold some (s, r) violates the Demailly bound, at and above
// it nothing does. The Chudnovsky bound flips at the same N; the vacuous
// case holds for every N.
TEST(Chudnovsky, ThresholdIsExactByExhaustiveCheck) {
  const std::int64_t bound = 40;
  for (std::int64_t m = 2; m <= 5; ++m)
    for (std::int64_t a1 = 1; a1 <= 3; ++a1) {
      FamilyProfile p(m, a1);
      for (std::int64_t t = 1; t < m; ++t) {
        auto th = chudnovsky_threshold(p, t);
        for (std::int64_t N = 1; N <= th.value + 1; ++N) {
          bool all_demailly = true, all_chudnovsky = true;
          for (std::int64_t s = 1; s <= bound; ++s) {
            all_chudnovsky &= chudnovsky_holds(p, t, N, s);
            for (std::int64_t r = 1; r <= bound; ++r) all_demailly &= demailly_holds(p, t, N, s, r);
          }
          const bool expected = th.vacuous || N >= th.value;
          EXPECT_EQ(all_demailly, expected) << "m=" << m << " a1=" << a1 << " t=" << t << " N=" << N;
          EXPECT_EQ(all_chudnovsky, expected) << "m=" << m << " a1=" << a1 << " t=" << t << " N=" << N;
        }
      }
    }
}

TEST(Resurgence, PairValues) {
  EXPECT_EQ(resurgence_pair_symbolic_vs_mN_power(FamilyProfile(3, 1), 2, 0).str(), "4/3");
  EXPECT_EQ(resurgence_pair_symbolic_vs_mN_power(FamilyProfile(3, 1), 1, 0), Rational(1));
  EXPECT_EQ(resurgence_pair_symbolic_vs_mN_power(FamilyProfile(4, 1), 2, 3).str(), "15/4");
  EXPECT_EQ(resurgence_pair_symbolic_vs_closure_mN(FamilyProfile(3, 1), 2, 5).str(), "4/3");
  EXPECT_EQ(resurgence_pair_symbolic_vs_closure_mN(FamilyProfile(4, 1), 4, 0), Rational(1));
  EXPECT_EQ(resurgence_pair_symbolic_vs_closure_mN(FamilyProfile(6, 1), 3, 2), Rational(2));
  EXPECT_THROW(resurgence_pair_symbolic_vs_mN_power(FamilyProfile(3, 2), 2, 0), PreconditionError);
  EXPECT_THROW(resurgence_pair_symbolic_vs_closure_mN(FamilyProfile(3, 2), 2, 0), PreconditionError);
}

// At N = 0 both pairs agree and equal alpha(a_t) / waldschmidt; the mN pair
// also dominates the lower bound (N + t) / waldschmidt.
TEST(Resurgence, RelationsOnGrid) {
  for (std::int64_t m = 1; m <= 7; ++m) {
    FamilyProfile p(m, 1);
    for (std::int64_t t = 1; t <= m; ++t) {
      auto at0 = resurgence_pair_symbolic_vs_mN_power(p, t, 0);
      EXPECT_EQ(at0, resurgence_pair_symbolic_vs_closure_mN(p, t, 0));
      EXPECT_EQ(at0, Rational(p.alpha(t)) / waldschmidt(p, t));
      EXPECT_GE(at0, Rational(1));
      for (std::int64_t N = 0; N <= 4; ++N) {
        EXPECT_EQ(resurgence_pair_symbolic_vs_mN_power(p, t, N), Rational(N + t) / waldschmidt(p, t));
        EXPECT_EQ(resurgence_pair_symbolic_vs_closure_mN(p, t, N), at0);
      }
    }
  }
}

TEST(StarConfig, Values) {
  auto s42 = star_config_invariants(4, 2);
  EXPECT_EQ(s42.resurgence.str(), "3/2");
  EXPECT_EQ(s42.t, 3);
  EXPECT_EQ(star_config_invariants(5, 1).resurgence, Rational(1));
  auto s53 = star_config_invariants(5, 3);
  EXPECT_EQ(s53.waldschmidt.str(), "5/3");
  EXPECT_EQ(Rational(alpha_by_enumeration(s53.profile, s53.t, 3), 3), s53.waldschmidt);
  EXPECT_THROW(star_config_invariants(4, 5), ArgumentError);
  EXPECT_THROW(star_config_invariants(4, 0), ArgumentError);
}

TEST(StarConfig, ResurgenceIsCodimensionFormula) {
  for (std::int64_t m = 1; m <= 8; ++m)
    for (std::int64_t c = 1; c <= m; ++c)
      EXPECT_EQ(star_config_invariants(m, c).resurgence, Rational(c * (m - c + 1), m));
}
