#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sympow/groebner.hpp"
#include "sympow/matrix.hpp"
#include "sympow/varieties.hpp"
#include "test_support.hpp"

using namespace sympow;
using namespace sympow::testing;

namespace {

using Fp = PrimeField;

template <class F = QQ>
Polynomial<F> v(const RingPtr<F>& r, const std::string& n) {
  return Polynomial<F>::variable(r, n);
}

std::set<std::string> strings(const GroebnerBasis<QQ>& G) {
  std::set<std::string> out;
  for (const auto& g : G.elements()) out.insert(g.to_string());
  return out;
}

}  // namespace

TEST(Buchberger, LinearIdealIsItsOwnBasis) {
  auto r = make_ring<QQ>({"x", "y", "z"});
  auto G = buchberger(Ideal<QQ>(r, {v(r, "x"), v(r, "y")}));
  EXPECT_EQ(strings(G), (std::set<std::string>{"x", "y"}));
  EXPECT_TRUE(G.is_reduced());
}

TEST(Buchberger, TwistedCubicUnderLex) {
  auto r = make_ring<QQ>({"x", "y", "z"});
  auto x = v(r, "x"), y = v(r, "y"), z = v(r, "z");
  auto G = buchberger(Ideal<QQ>(r, {x * x - y, x.pow(3) - z}), MonomialOrder::lex());
  EXPECT_EQ(strings(G), (std::set<std::string>{"x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"}));
  EXPECT_TRUE(G.satisfies_criterion());
  EXPECT_TRUE(G.is_reduced());
}

TEST(Buchberger, TwistedCubicOverPrimeField) {
  auto r = make_ring<Fp>({"x", "y", "z"});
  auto x = v(r, "x"), y = v(r, "y"), z = v(r, "z");
  auto G = buchberger(Ideal<Fp>(r, {x * x - y, x.pow(3) - z}), MonomialOrder::lex());
  EXPECT_EQ(G.size(), 4u);
  EXPECT_TRUE(G.contains(y.pow(3) - z * z));
}

TEST(Buchberger, MaximalMinorsOfTwoByThreeAreABasis) {
  auto r = make_ring<QQ>({"x11", "x12", "x13", "x21", "x22", "x23"});
  PolyMatrix<QQ> a(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) a[i].push_back(Polynomial<QQ>::variable(r, static_cast<std::size_t>(i * 3 + j)));
  Ideal<QQ> I(r, minors(a, 2));
  auto G = buchberger(I);
  EXPECT_EQ(G.size(), 3u);
  EXPECT_EQ(G.stats().zero_reductions + 3 >= G.stats().pairs_reduced, true);
  std::set<std::string> monic_minors;
  for (const auto& m : I.generators()) monic_minors.insert(m.monic().to_string());
  EXPECT_EQ(strings(G), monic_minors);
}

TEST(Buchberger, UnitIdeal) {
  auto r = make_ring<QQ>({"x", "y"});
  auto x = v(r, "x");
  auto G = buchberger(Ideal<QQ>(r, {x * x, x * x + Polynomial<QQ>::one(r)}));
  EXPECT_TRUE(G.is_unit());
  EXPECT_TRUE(G.contains(v(r, "y").pow(5)));
}

TEST(Buchberger, BudgetGuard) {
  FamilySpec spec = FamilySpec::generic(3, 3);
  Family<Fp> fam(spec, Fp());
  auto I = symbolic_power(fam, 2, 3);
  EXPECT_THROW(buchberger(I, MonomialOrder::grevlex(), {10, 100, 1}), BudgetExceeded);
  EXPECT_THROW(buchberger(I, MonomialOrder::grevlex(), {2'000'000, 3, 1}), BudgetExceeded);
}

TEST(Buchberger, RandomIdealsSatisfyCriterionAndContainInputs) {
  auto r = make_ring<QQ>({"a", "b", "c"});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial<QQ>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(r, rng, 3, 2));
    Ideal<QQ> I(r, gens);
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto G = buchberger(I, order);
      ASSERT_TRUE(G.satisfies_criterion());
      ASSERT_TRUE(G.is_reduced());
      for (const auto& g : gens) ASSERT_TRUE(G.contains(g));
    }
  }
}

TEST(Buchberger, CanonicalAcrossShufflesAndThreads) {
  Family<Fp> fam(FamilySpec::generic(3, 3), Fp());
  auto I = symbolic_power(fam, 2, 2);
  auto base = buchberger(I);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) EXPECT_EQ(buchberger(shuffled(I, seed)), base);
  EXPECT_EQ(buchberger(I, MonomialOrder::grevlex(), {2'000'000, 100, 4}), base);

  auto r = make_ring<QQ>({"a", "b", "c", "d"});
  std::mt19937_64 rng(23);
  std::vector<Polynomial<QQ>> gens;
  for (int k = 0; k < 4; ++k) gens.push_back(random_poly(r, rng, 3, 1));
  Ideal<QQ> J(r, gens);
  auto gj = buchberger(J);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) EXPECT_EQ(buchberger(shuffled(J, seed)), gj);
  EXPECT_EQ(buchberger(J, MonomialOrder::grevlex(), {2'000'000, 100, 3}), gj);
}

TEST(NormalForm, Examples) {
  auto r = make_ring<QQ>({"x", "y"});
  auto x = v(r, "x"), y = v(r, "y");
  auto G = buchberger(Ideal<QQ>(r, {y}));
  EXPECT_EQ(normal_form(x * x, G), x * x);
  EXPECT_TRUE(normal_form(x * y + y * y, G).is_zero());
}

TEST(Membership, Examples) {
  auto r = make_ring<QQ>({"x", "y"});
  auto x = v(r, "x"), y = v(r, "y");
  EXPECT_TRUE(ideal_contains(Ideal<QQ>(r, {x, y}), Ideal<QQ>(r, {x * x + y * y})));
  EXPECT_FALSE(ideal_contains(Ideal<QQ>(r, {x * x}), Ideal<QQ>(r, {x})));
  auto w = containment_witness(buchberger(Ideal<QQ>(r, {x * x})), Ideal<QQ>(r, {x * y, x}));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, x);
}

TEST(Membership, GenericSymbolicCubeContainsMixedProduct) {
  Family<Fp> fam(FamilySpec::generic(3, 3), Fp());
  auto I = symbolic_power(fam, 2, 3);
  EXPECT_TRUE(ideal_contains(I, fam.member(3) * fam.member(2)));
  EXPECT_TRUE(ideal_contains(I, fam.member(2).pow(3)));
  EXPECT_FALSE(ideal_contains(fam.member(2).pow(2), fam.member(3)));
}

TEST(Intersection, SmallExamples) {
  auto r = make_ring<QQ>({"x", "y", "z"});
  auto x = v(r, "x"), y = v(r, "y"), z = v(r, "z");
  auto xy = ideal_intersect(Ideal<QQ>(r, {x}), Ideal<QQ>(r, {y}));
  EXPECT_TRUE(ideal_equal(xy, Ideal<QQ>(r, {x * y})));
  auto k = ideal_intersect(Ideal<QQ>(r, {x, y}), Ideal<QQ>(r, {x, z}));
  EXPECT_TRUE(ideal_equal(k, Ideal<QQ>(r, {x, y * z})));
  EXPECT_TRUE(same_ring(k.ring(), r));
}

// Monomial ideals intersect generator-wise through lcms.
TEST(Intersection, MonomialIdealsMatchLcmOracle) {
  auto r = make_ring<QQ>({"a", "b", "c", "d"});
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(0, 2);
  auto random_monomials = [&](int n) {
    std::vector<Polynomial<QQ>> out;
    for (int i = 0; i < n; ++i) {
      std::vector<int> ex(4);
      for (auto& q : ex) q = e(rng);
      out.push_back(Polynomial<QQ>::term(r, Monomial::from_exponents(ex), 1));
    }
    return out;
  };
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_monomials(3), b = random_monomials(3);
    std::vector<Polynomial<QQ>> lcms;
    for (const auto& p : a)
      for (const auto& q : b)
        lcms.push_back(Polynomial<QQ>::term(r, p.lead_monomial().lcm(q.lead_monomial()), 1));
    auto got = ideal_intersect(Ideal<QQ>(r, a), Ideal<QQ>(r, b));
    ASSERT_TRUE(ideal_equal(got, Ideal<QQ>(r, lcms)));
  }
}

TEST(Intersection, DoubleInclusionForMinorPowers) {
  Family<Fp> fam(FamilySpec::generic(2, 3), Fp());
  auto m4 = fam.maximal_ideal().pow(4);
  auto i22 = fam.member(2).pow(2);
  auto both = ideal_intersect(m4, i22);
  EXPECT_TRUE(ideal_contains(m4, both));
  EXPECT_TRUE(ideal_contains(i22, both));
  // I_2^2 is generated in degree 4, so it already lies in m^4.
  EXPECT_TRUE(ideal_equal(both, i22));
  auto swapped = ideal_intersect(i22, m4);
  EXPECT_TRUE(ideal_equal(both, swapped));
}

TEST(Alpha, OfIdeals) {
  auto r = make_ring<QQ>({"x", "y"});
  auto x = v(r, "x"), y = v(r, "y");
  EXPECT_EQ(alpha_of_ideal(Ideal<QQ>(r, {x * x * y, y.pow(5)})), 3);
  EXPECT_THROW(alpha_of_ideal(Ideal<QQ>(r, {x * x + y})), PreconditionError);
  Family<Fp> fam(FamilySpec::generic(3, 3), Fp());
  EXPECT_EQ(alpha_of_ideal(symbolic_power(fam, 2, 3)), 5);
}
