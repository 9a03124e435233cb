#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sympow/field.hpp"
#include "sympow/ideal.hpp"
#include "sympow/matrix.hpp"
#include "test_support.hpp"

using namespace sympow;
using namespace sympow::testing;

namespace {

RingPtr<QQ> xyz() { return make_ring<QQ>({"x", "y", "z"}); }

Polynomial<QQ> var(const RingPtr<QQ>& r, const std::string& n) { return Polynomial<QQ>::variable(r, n); }

template <class F>
PolyMatrix<F> generic_matrix(const RingPtr<F>& r, std::size_t rows, std::size_t cols) {
  PolyMatrix<F> a(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i].push_back(Polynomial<F>::variable(r, i * cols + j));
  return a;
}

RingPtr<QQ> numbered_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return make_ring<QQ>(names);
}

// Leibniz sum over permutations.
Polynomial<QQ> leibniz(const PolyMatrix<QQ>& a, const RingPtr<QQ>& r) {
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial<QQ> sum(r);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    auto term = Polynomial<QQ>::one(r);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= a[i][perm[i]];
    sum = inversions % 2 ? sum - term : sum + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

PolyMatrix<QQ> generic_skew(const RingPtr<QQ>& r, std::size_t n) {
  PolyMatrix<QQ> a(n, std::vector<Polynomial<QQ>>(n, Polynomial<QQ>(r)));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a[i][j] = Polynomial<QQ>::variable(r, k++);
      a[j][i] = -a[i][j];
    }
  return a;
}

}  // namespace

TEST(Monomial, ArithmeticAndDivisibility) {
  std::vector<int> a{2, 0, 1}, b{1, 0, 1};
  auto ma = Monomial::from_exponents(a), mb = Monomial::from_exponents(b);
  EXPECT_TRUE(mb.divides(ma));
  EXPECT_FALSE(ma.divides(mb));
  EXPECT_EQ(ma.quotient(mb), Monomial::variable(0));
  EXPECT_EQ((ma * mb).degree(), 5u);
  EXPECT_EQ(ma.lcm(mb), ma);
  EXPECT_TRUE(Monomial::variable(0).coprime(Monomial::variable(1)));
  EXPECT_FALSE(ma.coprime(mb));
}

TEST(Monomial, DivisibilityMatchesExponentwiseComparison) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> a(32), b(32);
    for (auto& x : a) x = e(rng);
    for (auto& x : b) x = e(rng) ? 0 : e(rng);
    auto ma = Monomial::from_exponents(a), mb = Monomial::from_exponents(b);
    bool divides = true, coprime = true;
    for (std::size_t i = 0; i < 32; ++i) {
      divides &= b[i] <= a[i];
      coprime &= a[i] == 0 || b[i] == 0;
    }
    ASSERT_EQ(mb.divides(ma), divides);
    ASSERT_EQ(ma.coprime(mb), coprime);
  }
}

TEST(MonomialOrder, KnownComparisons) {
  auto m = [](std::vector<int> e) { return Monomial::from_exponents(e); };
  auto grevlex = MonomialOrder::grevlex(), lex = MonomialOrder::lex(), grlex = MonomialOrder::grlex();
  // x*z^2 vs y^3: grevlex puts y^3 first, lex puts x*z^2 first.
  EXPECT_TRUE(grevlex.less(m({1, 0, 2}), m({0, 3, 0})));
  EXPECT_TRUE(lex.less(m({0, 3, 0}), m({1, 0, 2})));
  EXPECT_TRUE(grlex.less(m({0, 3, 0}), m({1, 0, 2})));
  auto elim = MonomialOrder::elimination(1);
  EXPECT_TRUE(elim.less(m({0, 5, 5}), m({1, 0, 0})));
  EXPECT_EQ(elim.name(), "elim(1)");
}

TEST(MonomialOrder, TotalAndMultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 3);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::grlex(), MonomialOrder::lex(),
                     MonomialOrder::elimination(2)}) {
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<int> a(5), b(5), c(5);
      for (auto* v : {&a, &b, &c})
        for (auto& x : *v) x = e(rng);
      auto ma = Monomial::from_exponents(a), mb = Monomial::from_exponents(b), mc = Monomial::from_exponents(c);
      ASSERT_EQ(order.compare(ma, mb), -order.compare(mb, ma));
      ASSERT_EQ(order.compare(ma, mb) == 0, ma == mb);
      ASSERT_EQ(order.compare(ma * mc, mb * mc), order.compare(ma, mb));
      if (!mc.is_one()) ASSERT_TRUE(order.less(ma, ma * mc));
    }
  }
}

TEST(Polynomial, BasicArithmetic) {
  auto r = xyz();
  auto x = var(r, "x"), y = var(r, "y");
  EXPECT_EQ((x + y) + (-x), y);
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_EQ((x - y).pow(2).to_string(), "x^2 - 2*x*y + y^2");
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x * y + Polynomial<QQ>::constant(r, 3)).degree(), 2);
  EXPECT_EQ((x * y + Polynomial<QQ>::constant(r, 3)).low_degree(), 0);
  EXPECT_FALSE((x * y + x).is_homogeneous());
}

TEST(Polynomial, MultiplicationMatchesDistributiveOracle) {
  auto r = make_ring<QQ>({"a", "b", "c", "d"});
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_poly(r, rng, 1 + trial % 9, 4), q = random_poly(r, rng, 1 + trial % 7, 4);
    ASSERT_EQ(to_dense(p * q), dense_mul(to_dense(p), to_dense(q)));
    ASSERT_EQ(to_dense(p + q), dense_add(to_dense(p), to_dense(q)));
  }
}

TEST(Polynomial, RingAxioms) {
  auto r = xyz();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_poly(r, rng, 5, 3), b = random_poly(r, rng, 4, 3), c = random_poly(r, rng, 3, 3);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * Polynomial<QQ>::one(r), a);
  }
}

TEST(Polynomial, PrimeFieldReducesModP) {
  auto r = make_ring<PrimeField>({"x", "y"}, PrimeField(7));
  auto x = Polynomial<PrimeField>::variable(r, 0), y = Polynomial<PrimeField>::variable(r, 1);
  EXPECT_EQ((x + y).pow(7), x.pow(7) + y.pow(7));
  EXPECT_THROW(PrimeField(32004), ArgumentError);
}

TEST(Polynomial, TermsStayOrderedUnderEachOrder) {
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
    auto r = make_ring<QQ>({"x", "y", "z"}, QQ(), order);
    std::mt19937_64 rng(5);
    auto p = random_poly(r, rng, 12, 3) * random_poly(r, rng, 5, 2);
    for (std::size_t i = 1; i < p.size(); ++i)
      ASSERT_TRUE(order.less(p.terms()[i].monomial, p.terms()[i - 1].monomial));
  }
}

TEST(ExactDivide, RoundTripAndFailure) {
  auto r = xyz();
  auto x = var(r, "x"), y = var(r, "y");
  auto q = exact_divide(x * x * y + x * y * y, x);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, x * y + y * y);
  EXPECT_FALSE(exact_divide(x * x + y * y, x));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_poly(r, rng, 6, 3), d = random_poly(r, rng, 3, 2);
    auto back = exact_divide(a * d, d);
    ASSERT_TRUE(back);
    ASSERT_EQ(*back, a);
    auto bumped = exact_divide(a * d + Polynomial<QQ>::one(r), d);
    if (d.degree() > 0) ASSERT_FALSE(bumped);
  }
}

TEST(Polynomial, TransferAndReorder) {
  auto r = xyz();
  auto lexr = r->with_order(MonomialOrder::lex());
  auto p = var(r, "x") * var(r, "z") + var(r, "y").pow(3);
  auto moved = p.reorder(lexr);
  EXPECT_EQ(to_dense(moved), to_dense(p));
  EXPECT_EQ(moved.lead_monomial(), (var(r, "x") * var(r, "z")).lead_monomial());
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = numbered_ring(n * n);
    auto a = generic_matrix(r, n, n);
    auto d = determinant(a);
    EXPECT_EQ(d, leibniz(a, r));
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(d.size(), fact);
  }
}

TEST(Matrix, DeterminantAlternatesUnderRowSwap) {
  auto r = numbered_ring(9);
  auto a = generic_matrix(r, 3, 3);
  auto b = a;
  std::swap(b[0], b[2]);
  EXPECT_EQ(determinant(b), -determinant(a));
  b = a;
  b[1] = b[0];
  EXPECT_TRUE(determinant(b).is_zero());
}

TEST(Matrix, HankelWindowDeterminant) {
  auto r = make_ring<QQ>({"x1", "x2", "x3"});
  PolyMatrix<QQ> h{{var(r, "x1"), var(r, "x2")}, {var(r, "x2"), var(r, "x3")}};
  EXPECT_EQ(determinant(h), var(r, "x1") * var(r, "x3") - var(r, "x2").pow(2));
}

TEST(Matrix, PfaffianSmallCases) {
  auto r2 = numbered_ring(1);
  EXPECT_EQ(pfaffian(generic_skew(r2, 2)), Polynomial<QQ>::variable(r2, 0));
  auto r4 = make_ring<QQ>({"z12", "z13", "z14", "z23", "z24", "z34"});
  auto z = [&](const char* n) { return var(r4, n); };
  EXPECT_EQ(pfaffian(generic_skew(r4, 4)), z("z12") * z("z34") - z("z13") * z("z24") + z("z14") * z("z23"));
}

TEST(Matrix, PfaffianSquaredIsDeterminant) {
  for (std::size_t n : {2u, 4u, 6u}) {
    auto r = numbered_ring(n * (n - 1) / 2);
    auto a = generic_skew(r, n);
    ASSERT_TRUE(is_skew_symmetric(a));
    auto pf = pfaffian(a);
    EXPECT_EQ(pf * pf, determinant(a)) << n;
  }
  auto r = numbered_ring(10);
  EXPECT_THROW(pfaffian(generic_skew(r, 5)), ArgumentError);
}

TEST(Matrix, MinorAndPfaffianCounts) {
  auto r = numbered_ring(12);
  auto a = generic_matrix(r, 3, 4);
  EXPECT_EQ(minors(a, 2).size(), 18u);
  EXPECT_EQ(minors(a, 3).size(), 4u);
  for (const auto& m : minors(a, 2)) EXPECT_EQ(m.degree(), 2);
  auto r6 = numbered_ring(15);
  EXPECT_EQ(pfaffians(generic_skew(r6, 6), 4).size(), 15u);
  EXPECT_EQ(combinations(5, 2).size(), 10u);
  EXPECT_EQ(combinations(4, 2).front(), (std::vector<std::size_t>{0, 1}));
}

TEST(Ideal, DeduplicatesUpToScalar) {
  auto r = xyz();
  auto x = var(r, "x");
  Ideal<QQ> I(r, {x, x.scaled(3), Polynomial<QQ>(r), var(r, "y")});
  EXPECT_EQ(I.size(), 2u);
  EXPECT_EQ(I.generators()[0], x);
}

TEST(Ideal, SumsProductsPowers) {
  auto r = xyz();
  auto x = var(r, "x"), y = var(r, "y");
  auto s = Ideal<QQ>(r, {x}) + Ideal<QQ>(r, {y});
  EXPECT_EQ(s.size(), 2u);
  auto sq = s.pow(2);
  EXPECT_EQ(sq.size(), 3u);
  for (const auto& g : sq.generators()) EXPECT_EQ(g.degree(), 2);
  EXPECT_EQ(Ideal<QQ>::maximal(r).size(), 3u);
  EXPECT_EQ(s.min_generator_degree(), 1);
}

TEST(Ideal, GenericMinorProduct) {
  auto r = numbered_ring(9);
  auto a = generic_matrix(r, 3, 3);
  Ideal<QQ> i2(r, minors(a, 2)), i3(r, minors(a, 3));
  auto prod = i2 * i3;
  EXPECT_EQ(prod.size(), 9u);
  for (const auto& g : prod.generators()) EXPECT_EQ(g.degree(), 5);
}

TEST(Ring, Validation) {
  EXPECT_THROW(make_ring<QQ>({"x", "x"}), ArgumentError);
  std::vector<std::string> many;
  for (int i = 0; i < 33; ++i) many.push_back("v" + std::to_string(i));
  EXPECT_THROW(make_ring<QQ>(many), BudgetExceeded);
  auto r = xyz();
  EXPECT_EQ(r->index_of("z"), 2u);
  EXPECT_THROW(var(r, "x").reorder(make_ring<QQ>({"x", "y", "w"})), ArgumentError);
  auto ab = make_ring<QQ>({"a", "b"});
  EXPECT_THROW(var(r, "x") + var(ab, "a"), ArgumentError);
}
