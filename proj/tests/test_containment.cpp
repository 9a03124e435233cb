#include <gtest/gtest.h>

#include "sympow/containment.hpp"
#include "sympow/invariants.hpp"
#include "test_support.hpp"

using namespace sympow;
using namespace sympow::testing;

namespace {

using Fp = PrimeField;

template <class F>
void expect_all_hold(const std::vector<ContainmentReport<F>>& reps, const std::string& what) {
  ASSERT_FALSE(reps.empty());
  for (const auto& r : reps)
    EXPECT_EQ(r.verdict, Verdict::holds) << what << " " << r.key << ": " << r.claim << " [" << r.note << "]";
}

}  // namespace

TEST(WitnessSequence, Values) {
  FamilyProfile p(3, 1);
  auto a = WitnessSequence::p3(p, 2, 0, 1);
  EXPECT_EQ(a.s, 4);
  EXPECT_EQ(a.r, 3);
  EXPECT_EQ(a.linear_bound(), 6);
  auto b = WitnessSequence::p4(p, 2, 4, 3);
  EXPECT_EQ(b.s, (3 * 2 + 2) * 2);
  EXPECT_EQ(b.r, 9);
  EXPECT_EQ(b.linear_bound(), 4 + 2 * 9);
  EXPECT_THROW(WitnessSequence::p3(p, 2, -1, 1), ArgumentError);
  EXPECT_THROW(WitnessSequence::p3(p, 2, 0, 0), ArgumentError);
}

TEST(WitnessSequence, RatioIsExactResurgence) {
  for (std::int64_t m = 1; m <= 6; ++m) {
    FamilyProfile p(m, 1);
    for (std::int64_t t = 1; t <= m; ++t)
      for (std::int64_t N = 0; N <= 4; ++N)
        for (std::int64_t k = 1; k <= 5; ++k) {
          EXPECT_EQ(WitnessSequence::p3(p, t, N, k).ratio(), resurgence_pair_symbolic_vs_mN_power(p, t, N));
          // The P4 ratio sits above t(m-t+1)/m by a term vanishing in k; equal at N = 0.
          auto r4 = WitnessSequence::p4(p, t, N, k).ratio();
          EXPECT_GE(r4, resurgence_pair_symbolic_vs_closure_mN(p, t, N));
          if (N == 0) EXPECT_EQ(r4, resurgence_pair_symbolic_vs_closure_mN(p, t, N));
        }
  }
}

TEST(WitnessContainments, GenericThreeByThree) {
  Family<Fp> fam(FamilySpec::generic(3, 3), Fp());
  for (auto mode : {WitnessMode::p3, WitnessMode::p4})
    for (std::int64_t N : {0, 1})
      for (std::int64_t k : {1, 2})
        expect_all_hold(verify_witness_containments(fam, 2, N, k, mode),
                        mode_name(mode) + " N=" + std::to_string(N) + " k=" + std::to_string(k));
}

TEST(WitnessContainments, GenericFirstInstanceIsDirect) {
  Family<Fp> fam(FamilySpec::generic(3, 3), Fp());
  auto reps = verify_witness_containments(fam, 2, 0, 1, WitnessMode::p3);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].key, "P3/j=1");
  EXPECT_EQ(reps[0].method, "degree");
  EXPECT_EQ(reps[1].method, "groebner");
  EXPECT_TRUE(reps[0].holds() && reps[1].holds());
}

TEST(WitnessContainments, SymmetricAndOthers) {
  Family<Fp> sym(FamilySpec::symmetric(3), Fp());
  for (auto mode : {WitnessMode::p3, WitnessMode::p4})
    for (std::int64_t N : {0, 1}) expect_all_hold(verify_witness_containments(sym, 2, N, 1, mode), "symmetric");
  Family<Fp> skew(FamilySpec::skew(6), Fp());
  expect_all_hold(verify_witness_containments(skew, 2, 0, 1, WitnessMode::p3), "skew");
  Family<Fp> hankel(FamilySpec::hankel(5), Fp());
  expect_all_hold(verify_witness_containments(hankel, 2, 1, 1, WitnessMode::p4), "hankel");
  Family<Fp> star(FamilySpec::star(4), Fp());
  expect_all_hold(verify_witness_containments(star, 3, 0, 1, WitnessMode::p3), "star");
  expect_all_hold(verify_witness_containments(star, 2, 1, 2, WitnessMode::p3), "star");
}

TEST(WitnessContainments, FirstMemberIsTrivial) {
  Family<Fp> fam(FamilySpec::generic(3, 3), Fp());
  auto reps = verify_witness_containments(fam, 1, 0, 1, WitnessMode::p3);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_TRUE(reps[0].holds());
}

TEST(WitnessContainments, BudgetIsReportedNotThrown) {
  Family<Fp> fam(FamilySpec::generic(3, 3), Fp());
  ContainmentConfig tight;
  tight.groebner.max_pairs = 5;
  tight.direct_max_s = 100;
  auto reps = verify_witness_containments(fam, 2, 0, 1, WitnessMode::p3, tight);
  bool any_budget = false;
  for (const auto& r : reps) any_budget |= r.verdict == Verdict::budget_exceeded;
  EXPECT_TRUE(any_budget);
}

TEST(HarbourneHuneke, GenericSquareFailsWithDeterminant) {
  Family<QQ> fam(FamilySpec::generic(3, 3), QQ());
  auto rep = verify_hh_containment(fam, 2, 2, 2, 0);
  EXPECT_EQ(rep.verdict, Verdict::fails);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(*rep.witness, fam.member(3).generators()[0]);
  EXPECT_EQ(rep.witness->degree(), 3);
  // Failure witness lies in the left side and not in the right side.
  EXPECT_TRUE(ideal_contains(symbolic_power(fam, 2, 2), Ideal<QQ>(fam.ring(), {*rep.witness})));
  EXPECT_FALSE(ideal_contains(fam.member(2).pow(2), Ideal<QQ>(fam.ring(), {*rep.witness})));
}

TEST(HarbourneHuneke, TopMemberPowersAreSymbolic) {
  Family<Fp> fam(FamilySpec::generic(2, 3), Fp());
  EXPECT_TRUE(verify_hh_containment(fam, 2, 3, 3, 0).holds());
}

TEST(HarbourneHuneke, SelfLinkedSquareInMaximalTimesI) {
  Family<QQ> fam(FamilySpec::self_linked(), QQ());
  EXPECT_TRUE(verify_hh_containment(fam, 2, 2, 1, 1).holds());
  EXPECT_FALSE(verify_hh_containment(fam, 2, 2, 2, 0).holds());
}

// Sweep for generic 3x3, t = 2: the containment I^(s) in I^i holds exactly
// when no generator of I^(s) has degree below 2i; every failure carries a
// witness in the left side outside the right side.
TEST(HarbourneHuneke, GenericSweepWitnessesAreGenuine) {
  Family<Fp> fam(FamilySpec::generic(3, 3), Fp());
  for (std::int64_t s = 1; s <= 4; ++s)
    for (std::int64_t i = 1; i <= s; ++i) {
      auto rep = verify_hh_containment(fam, 2, s, i, 0);
      if (alpha_symbolic(fam.profile(), 2, s) < 2 * i) EXPECT_EQ(rep.verdict, Verdict::fails) << rep.key;
      if (i == 1) EXPECT_EQ(rep.verdict, Verdict::holds) << rep.key;
      if (rep.verdict == Verdict::fails) {
        ASSERT_TRUE(rep.witness);
        Ideal<Fp> w(fam.ring(), {*rep.witness});
        EXPECT_TRUE(ideal_contains(symbolic_power(fam, 2, s), w));
        EXPECT_FALSE(ideal_contains(fam.member(2).pow(static_cast<unsigned>(i)), w));
      }
    }
}

TEST(DecompositionRhs, Examples) {
  Family<Fp> gen(FamilySpec::generic(3, 3), Fp());
  auto a = p3_rhs(gen, 2, 1, 0);
  EXPECT_TRUE(ideal_equal(a.rhs, gen.member(2)));
  EXPECT_TRUE(a.report.holds());

  Family<Fp> sym(FamilySpec::symmetric(3), Fp());
  auto b = p3_rhs(sym, 2, 2, 0);
  EXPECT_TRUE(b.report.holds());
  EXPECT_TRUE(ideal_contains(sym.maximal_ideal().pow(4), b.rhs));
  EXPECT_TRUE(ideal_contains(symbolic_power(sym, 2, 2), b.rhs));
  EXPECT_TRUE(ideal_contains(b.rhs, sym.member(2).pow(2)));

  Family<Fp> skew(FamilySpec::skew(6), Fp());
  auto c = p3_rhs(skew, 2, 1, 1);
  EXPECT_TRUE(c.report.holds());
  EXPECT_TRUE(ideal_contains(c.rhs, skew.maximal_ideal() * skew.member(2)));
}

TEST(DecompositionRhs, OneDirectionOnGrid) {
  for (const auto& spec : {FamilySpec::generic(3, 3), FamilySpec::symmetric(3), FamilySpec::hankel(5)}) {
    Family<Fp> fam(spec, Fp());
    for (std::int64_t N : {0, 1})
      for (std::int64_t s : {1, 2}) {
        EXPECT_TRUE(p3_rhs(fam, 2, s, N).report.holds()) << spec.label() << " s=" << s << " N=" << N;
        EXPECT_TRUE(p4_rhs(fam, 2, s, N).report.holds()) << spec.label() << " s=" << s << " N=" << N;
      }
  }
}
