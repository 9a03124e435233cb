#pragma once

// The classical ideal sequences: minors of generic, symmetric, Hankel and
// ladder matrices, pfaffians of skew matrices, star configurations, and the
// three-term sequence built from a self-linked ideal in three variables.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/groebner.hpp"
#include "sympow/ideal.hpp"
#include "sympow/intprog.hpp"
#include "sympow/matrix.hpp"
#include "sympow/profile.hpp"

namespace sympow {

enum class FamilyKind { generic, symmetric, skew, hankel, ladder, star, self_linked };

inline std::string kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::generic: return "generic";
    case FamilyKind::symmetric: return "symmetric";
    case FamilyKind::skew: return "skew";
    case FamilyKind::hankel: return "hankel";
    case FamilyKind::ladder: return "ladder";
    case FamilyKind::star: return "star";
    case FamilyKind::self_linked: return "self_linked";
  }
  return "?";
}

/// Entries of A = [[x, y, a1 x + b1 y + c1 z], [y, z, a2 x + b2 y + c2 z]].
struct SelfLinkedConstants {
  long a1 = 0, b1 = 0, c1 = 1;
  long a2 = 1, b2 = 0, c2 = 0;

  std::string str() const {
    return "(" + std::to_string(a1) + "," + std::to_string(b1) + "," + std::to_string(c1) + "," +
           std::to_string(a2) + "," + std::to_string(b2) + "," + std::to_string(c2) + ")";
  }
  friend bool operator==(const SelfLinkedConstants&, const SelfLinkedConstants&) = default;
};

using Cell = std::pair<int, int>;  // 1-based (row, column)

class FamilySpec {
 public:
  static FamilySpec generic(int rows, int cols) {
    if (rows < 1 || cols < rows) throw ArgumentError("generic: need 1 <= rows <= cols");
    FamilySpec s(FamilyKind::generic);
    s.rows_ = rows;
    s.cols_ = cols;
    return s;
  }

  static FamilySpec symmetric(int size) {
    if (size < 1) throw ArgumentError("symmetric: size must be >= 1");
    FamilySpec s(FamilyKind::symmetric);
    s.rows_ = s.cols_ = size;
    return s;
  }

  static FamilySpec skew(int size) {
    if (size < 2) throw ArgumentError("skew: size must be >= 2");
    FamilySpec s(FamilyKind::skew);
    s.rows_ = s.cols_ = size;
    return s;
  }

  /// Hankel minors in x_1..x_n read off the k x (n+1-k) matrix; k = 0 picks
  /// the most balanced shape.
  static FamilySpec hankel(int n, int k = 0) {
    if (n < 1) throw ArgumentError("hankel: n must be >= 1");
    if (k == 0) k = (n + 1) / 2;
    if (k < 1 || k > n) throw ArgumentError("hankel: k must lie in [1, n]");
    FamilySpec s(FamilyKind::hankel);
    s.n_ = n;
    s.rows_ = k;
    s.cols_ = n + 1 - k;
    return s;
  }

  static FamilySpec ladder(int rows, int cols, std::vector<Cell> cells) {
    if (rows < 1 || cols < rows) throw ArgumentError("ladder: need 1 <= rows <= cols");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (cells.empty()) throw ArgumentError("ladder: empty cell set");
    std::set<Cell> in(cells.begin(), cells.end());
    for (auto [i, j] : cells)
      if (i < 1 || i > rows || j < 1 || j > cols) throw ArgumentError("ladder: cell outside the matrix");
    for (auto [i, j] : cells)
      for (auto [r, t] : cells)
        if (i < r && j < t && (!in.count({i, t}) || !in.count({r, j})))
          throw ArgumentError("ladder: cell set is not a ladder (missing (" + std::to_string(i) + "," +
                              std::to_string(t) + ") or (" + std::to_string(r) + "," + std::to_string(j) + "))");
    FamilySpec s(FamilyKind::ladder);
    s.rows_ = rows;
    s.cols_ = cols;
    s.cells_ = std::move(cells);
    return s;
  }

  /// Star configurations from m linear forms in `ambient` variables. Without
  /// explicit forms the coordinate hyperplanes x_1..x_m are used.
  static FamilySpec star(int m, int ambient = 0, std::vector<std::vector<long>> forms = {}) {
    if (m < 1) throw ArgumentError("star: m must be >= 1");
    if (ambient == 0) ambient = m;
    if (ambient < m) throw ArgumentError("star: ambient dimension must be >= m");
    if (!forms.empty()) {
      if (forms.size() != static_cast<std::size_t>(m)) throw ArgumentError("star: need exactly m linear forms");
      for (const auto& f : forms)
        if (f.size() != static_cast<std::size_t>(ambient)) throw ArgumentError("star: form length must equal ambient");
    }
    FamilySpec s(FamilyKind::star);
    s.rows_ = m;
    s.n_ = ambient;
    s.forms_ = std::move(forms);
    return s;
  }

  static FamilySpec self_linked(SelfLinkedConstants constants = {}) {
    FamilySpec s(FamilyKind::self_linked);
    s.constants_ = constants;
    return s;
  }

  FamilyKind kind() const { return kind_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_; }
  int n() const { return n_; }
  int hankel_k() const { return rows_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<std::vector<long>>& star_forms() const { return forms_; }
  const SelfLinkedConstants& constants() const { return constants_; }

  std::string label() const {
    auto i = [](int v) { return std::to_string(v); };
    switch (kind_) {
      case FamilyKind::generic: return "generic(" + i(rows_) + "x" + i(cols_) + ")";
      case FamilyKind::symmetric: return "symmetric(" + i(rows_) + ")";
      case FamilyKind::skew: return "skew(" + i(rows_) + ")";
      case FamilyKind::hankel: return "hankel(n=" + i(n_) + ",k=" + i(rows_) + ")";
      case FamilyKind::ladder: return "ladder(" + i(rows_) + "x" + i(cols_) + "," + i(int(cells_.size())) + " cells)";
      case FamilyKind::star: return "star(m=" + i(rows_) + ",n=" + i(n_) + ")";
      case FamilyKind::self_linked: return "self_linked" + constants_.str();
    }
    return "?";
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  explicit FamilySpec(FamilyKind kind) : kind_(kind) {}

  FamilyKind kind_;
  int rows_ = 0, cols_ = 0, n_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::vector<long>> forms_;
  SelfLinkedConstants constants_;
};

/// Side length of the largest square submatrix (any rows, any columns) whose
/// cells all lie in the ladder.
inline int ladder_square_size(const FamilySpec& spec) {
  std::set<Cell> in(spec.cells().begin(), spec.cells().end());
  int best = 0;
  for (int t = 1; t <= spec.rows(); ++t) {
    bool found = false;
    for (const auto& r : combinations(spec.rows(), t)) {
      for (const auto& c : combinations(spec.cols(), t)) {
        bool all = true;
        for (auto i : r)
          for (auto j : c)
            if (!in.count({int(i) + 1, int(j) + 1})) all = false;
        if (all) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    best = t;
  }
  return best;
}

inline FamilyProfile profile_of(const FamilySpec& spec) {
  switch (spec.kind()) {
    case FamilyKind::generic: return FamilyProfile(spec.rows(), 1);
    case FamilyKind::symmetric: return FamilyProfile(spec.size(), 1);
    case FamilyKind::skew: return FamilyProfile(spec.size() / 2, 1);
    case FamilyKind::hankel: return FamilyProfile((spec.n() + 1) / 2, 1);
    case FamilyKind::ladder: return FamilyProfile(ladder_square_size(spec), 1);
    case FamilyKind::star: return FamilyProfile(spec.rows(), 1);
    case FamilyKind::self_linked: return FamilyProfile(3, 1);
  }
  throw ArgumentError("profile_of: unknown family");
}

namespace detail {

inline std::string index_name(const char* stem, int i, int j) {
  if (i < 10 && j < 10) return stem + std::to_string(i) + std::to_string(j);
  return stem + std::to_string(i) + "_" + std::to_string(j);
}

inline std::vector<std::string> family_variables(const FamilySpec& spec) {
  std::vector<std::string> names;
  switch (spec.kind()) {
    case FamilyKind::generic:
      for (int i = 1; i <= spec.rows(); ++i)
        for (int j = 1; j <= spec.cols(); ++j) names.push_back(index_name("x", i, j));
      break;
    case FamilyKind::symmetric:
      for (int i = 1; i <= spec.size(); ++i)
        for (int j = i; j <= spec.size(); ++j) names.push_back(index_name("y", i, j));
      break;
    case FamilyKind::skew:
      for (int i = 1; i <= spec.size(); ++i)
        for (int j = i + 1; j <= spec.size(); ++j) names.push_back(index_name("z", i, j));
      break;
    case FamilyKind::hankel:
    case FamilyKind::star:
      for (int i = 1; i <= spec.n(); ++i) names.push_back("x" + std::to_string(i));
      break;
    case FamilyKind::ladder:
      for (auto [i, j] : spec.cells()) names.push_back(index_name("x", i, j));
      break;
    case FamilyKind::self_linked:
      names = {"x", "y", "z"};
      break;
  }
  return names;
}

template <class F>
Polynomial<F> linear_form(const RingPtr<F>& ring, const std::vector<long>& coefs) {
  std::vector<Term<F>> terms;
  for (std::size_t i = 0; i < coefs.size(); ++i)
    if (coefs[i]) terms.push_back({Monomial::variable(i), ring->field().from_int(coefs[i])});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace detail

/// The matrix whose minors (or pfaffians) define the family. Zero entries
/// still carry the ring.
template <class F>
PolyMatrix<F> family_matrix(const FamilySpec& spec, const RingPtr<F>& ring) {
  auto var = [&](const std::string& name) { return Polynomial<F>::variable(ring, name); };
  PolyMatrix<F> a;
  switch (spec.kind()) {
    case FamilyKind::generic:
      for (int i = 1; i <= spec.rows(); ++i) {
        a.emplace_back();
        for (int j = 1; j <= spec.cols(); ++j) a.back().push_back(var(detail::index_name("x", i, j)));
      }
      return a;
    case FamilyKind::symmetric:
      for (int i = 1; i <= spec.size(); ++i) {
        a.emplace_back();
        for (int j = 1; j <= spec.size(); ++j)
          a.back().push_back(var(detail::index_name("y", std::min(i, j), std::max(i, j))));
      }
      return a;
    case FamilyKind::skew:
      for (int i = 1; i <= spec.size(); ++i) {
        a.emplace_back();
        for (int j = 1; j <= spec.size(); ++j) {
          if (i == j)
            a.back().push_back(Polynomial<F>(ring));
          else if (i < j)
            a.back().push_back(var(detail::index_name("z", i, j)));
          else
            a.back().push_back(-var(detail::index_name("z", j, i)));
        }
      }
      return a;
    case FamilyKind::hankel:
      for (int i = 1; i <= spec.rows(); ++i) {
        a.emplace_back();
        for (int j = 1; j <= spec.cols(); ++j) a.back().push_back(var("x" + std::to_string(i + j - 1)));
      }
      return a;
    case FamilyKind::ladder: {
      std::set<Cell> in(spec.cells().begin(), spec.cells().end());
      for (int i = 1; i <= spec.rows(); ++i) {
        a.emplace_back();
        for (int j = 1; j <= spec.cols(); ++j)
          a.back().push_back(in.count({i, j}) ? var(detail::index_name("x", i, j)) : Polynomial<F>(ring));
      }
      return a;
    }
    case FamilyKind::self_linked: {
      const auto& k = spec.constants();
      auto x = var("x"), y = var("y"), z = var("z");
      auto l1 = detail::linear_form(ring, {k.a1, k.b1, k.c1});
      auto l2 = detail::linear_form(ring, {k.a2, k.b2, k.c2});
      return {{x, y, l1}, {y, z, l2}};
    }
    case FamilyKind::star:
      break;
  }
  throw ArgumentError("family_matrix: " + kind_name(spec.kind()) + " has no defining matrix");
}

struct SymbolicPowerConfig {
  std::int64_t max_s = 24;
  std::size_t max_generators = 60'000;
};

/// A family materialized over a field: its ring and the ideals a_1..a_m.
template <class F>
class Family {
 public:
  explicit Family(FamilySpec spec, F field = F(), const GroebnerConfig& gb = {})
      : spec_(std::move(spec)), profile_(profile_of(spec_)) {
    ring_ = make_ring<F>(detail::family_variables(spec_), std::move(field));
    members_.reserve(profile_.m());
    for (std::int64_t t = 1; t <= profile_.m(); ++t) members_.push_back(build_member(t, gb));
  }

  const FamilySpec& spec() const { return spec_; }
  const FamilyProfile& profile() const { return profile_; }
  const RingPtr<F>& ring() const { return ring_; }
  Ideal<F> maximal_ideal() const { return Ideal<F>::maximal(ring_); }

  /// a_t for 1 <= t <= m.
  const Ideal<F>& member(std::int64_t t) const {
    profile_.check_t(t);
    return members_[static_cast<std::size_t>(t - 1)];
  }

  /// Generators of a star configuration as products of t of the forms.
  Ideal<F> star_product_form(std::int64_t t) const {
    if (spec_.kind() != FamilyKind::star) throw ArgumentError("star_product_form: not a star configuration");
    profile_.check_t(t);
    auto forms = star_forms();
    Ideal<F> I(ring_);
    for (const auto& idx : combinations(forms.size(), static_cast<std::size_t>(t))) {
      auto p = Polynomial<F>::one(ring_);
      for (auto i : idx) p *= forms[i];
      I.add(p);
    }
    return I;
  }

  std::vector<Polynomial<F>> star_forms() const {
    std::vector<Polynomial<F>> out;
    for (int i = 0; i < spec_.rows(); ++i) {
      std::vector<long> coefs(static_cast<std::size_t>(spec_.n()), 0);
      if (spec_.star_forms().empty())
        coefs[static_cast<std::size_t>(i)] = 1;
      else
        coefs = spec_.star_forms()[static_cast<std::size_t>(i)];
      out.push_back(detail::linear_form(ring_, coefs));
    }
    return out;
  }

 private:
  Ideal<F> build_member(std::int64_t t, const GroebnerConfig& gb) const {
    const auto tt = static_cast<std::size_t>(t);
    switch (spec_.kind()) {
      case FamilyKind::generic:
      case FamilyKind::symmetric:
        return Ideal<F>(ring_, minors(family_matrix(spec_, ring_), tt));
      case FamilyKind::skew:
        return Ideal<F>(ring_, pfaffians(family_matrix(spec_, ring_), 2 * tt));
      case FamilyKind::hankel: {
        // Members beyond the chosen shape come from the balanced shape.
        FamilySpec shape = spec_;
        if (t > std::min(spec_.rows(), spec_.cols())) shape = FamilySpec::hankel(spec_.n());
        return Ideal<F>(ring_, minors(family_matrix(shape, ring_), tt));
      }
      case FamilyKind::ladder: {
        std::set<Cell> in(spec_.cells().begin(), spec_.cells().end());
        auto a = family_matrix(spec_, ring_);
        Ideal<F> I(ring_);
        for (const auto& r : combinations(spec_.rows(), tt))
          for (const auto& c : combinations(spec_.cols(), tt)) {
            bool inside = true;
            for (auto i : r)
              for (auto j : c)
                if (!in.count({int(i) + 1, int(j) + 1})) inside = false;
            if (inside) I.add(determinant(detail::submatrix(a, r, c)));
          }
        return I;
      }
      case FamilyKind::star: {
        // I_{m,c} with c = m - t + 1: intersection over c-subsets of the forms.
        auto forms = star_forms();
        const std::size_t c = forms.size() - tt + 1;
        std::optional<Ideal<F>> acc;
        for (const auto& idx : combinations(forms.size(), c)) {
          Ideal<F> ci(ring_);
          for (auto i : idx) ci.add(forms[i]);
          acc = acc ? ideal_intersect(*acc, ci, gb) : ci;
        }
        return *acc;
      }
      case FamilyKind::self_linked:
        return self_linked_member(t);
    }
    throw ArgumentError("unknown family");
  }

  Ideal<F> self_linked_member(std::int64_t t) const;

  FamilySpec spec_;
  FamilyProfile profile_;
  RingPtr<F> ring_;
  std::vector<Ideal<F>> members_;
};

/// a_t of the family, built from the family's own matrix shape. For Hankel
/// families t must fit the k x (n+1-k) shape.
template <class F>
Ideal<F> build_ideal(const FamilySpec& spec, std::int64_t t, F field = F(), const GroebnerConfig& gb = {}) {
  profile_of(spec).check_t(t);
  if (spec.kind() == FamilyKind::hankel && t > std::min(spec.rows(), spec.cols()))
    throw ArgumentError("hankel: t=" + std::to_string(t) + " exceeds min(k, n+1-k)");
  return Family<F>(spec, std::move(field), gb).member(t);
}

/// a_t^(s) as the sum over compositions sum i a_i = s of prod a_{t-1+i}^{a_i}.
template <class F>
Ideal<F> symbolic_power(const Family<F>& family, std::int64_t t, std::int64_t s, const SymbolicPowerConfig& config = {}) {
  family.profile().check_t(t);
  if (s < 1) throw ArgumentError("symbolic_power: s must be >= 1");
  if (s > config.max_s)
    throw BudgetExceeded("symbolic_power: s=" + std::to_string(s) + " exceeds bound " + std::to_string(config.max_s));
  const auto len = static_cast<std::size_t>(family.profile().span(t));
  std::map<std::pair<std::int64_t, std::int64_t>, Ideal<F>> powers;
  auto power = [&](std::int64_t j, std::int64_t e) -> const Ideal<F>& {
    std::int64_t have = 0;
    while (powers.count({j, have + 1}) && have + 1 <= e) ++have;
    if (have == 0 && !powers.count({j, 0})) powers.emplace(std::pair(j, std::int64_t{0}), Ideal<F>::unit(family.ring()));
    for (std::int64_t x = have + 1; x <= e; ++x) {
      Ideal<F> p = powers.at({j, x - 1}) * family.member(j);
      if (p.size() > config.max_generators) throw BudgetExceeded("symbolic_power: generator budget exceeded");
      powers.emplace(std::pair(j, x), std::move(p));
    }
    return powers.at({j, e});
  };
  Ideal<F> sum(family.ring());
  for (auto stream = enumerate_compositions(len, s); auto c = stream.next();) {
    Ideal<F> term = Ideal<F>::unit(family.ring());
    for (std::size_t i = 1; i <= len; ++i)
      if ((*c)[i]) term = term * power(t - 1 + static_cast<std::int64_t>(i), (*c)[i]);
    sum = sum + term;
    if (sum.size() > config.max_generators) throw BudgetExceeded("symbolic_power: generator budget exceeded");
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Self-linked fixture

template <class F>
struct SelfLinkedFixture {
  SelfLinkedConstants constants;
  RingPtr<F> ring;
  std::vector<Polynomial<F>> f;        // f_i: minor of A without column i
  std::vector<Polynomial<F>> d;        // D_i: signed minor of Gamma without column i
  std::vector<Polynomial<F>> quotients;  // D_1/x, D_2/y, D_3/z
  Polynomial<F> w;
  Ideal<F> I;
  std::size_t mu = 0;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
  }
};

namespace detail {

/// Rank of the coefficient vectors of the given polynomials.
template <class F>
std::size_t coefficient_rank(const std::vector<Polynomial<F>>& ps) {
  if (ps.empty()) return 0;
  const F& f = ps.front().field();
  std::vector<Monomial> monos;
  for (const auto& p : ps)
    for (const auto& t : p.terms())
      if (std::find(monos.begin(), monos.end(), t.monomial) == monos.end()) monos.push_back(t.monomial);
  std::vector<std::vector<typename F::value_type>> rows;
  for (const auto& p : ps) {
    std::vector<typename F::value_type> row(monos.size(), f.zero());
    for (const auto& t : p.terms())
      row[static_cast<std::size_t>(std::find(monos.begin(), monos.end(), t.monomial) - monos.begin())] = t.coef;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < monos.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && f.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    auto inv = f.inv(rows[rank][col]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || f.is_zero(rows[r][col])) continue;
      auto factor = f.mul(rows[r][col], inv);
      for (std::size_t k = col; k < monos.size(); ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

template <class F>
Polynomial<F> minor2(const PolyMatrix<F>& a, std::size_t c0, std::size_t c1) {
  return a[0][c0] * a[1][c1] - a[0][c1] * a[1][c0];
}

}  // namespace detail

/// Builds f_i, Gamma, D_i and w, and records every check. Throws
/// FixtureInvalid naming the first failed structural check (mu(I) = 3, exact
/// divisions); the containment checks are recorded but left to the caller
/// when `containments` is false.
template <class F>
SelfLinkedFixture<F> build_self_linked_fixture(const SelfLinkedConstants& k, F field = F(), bool containments = true,
                                               const GroebnerConfig& gb = {}) {
  SelfLinkedFixture<F> fx;
  fx.constants = k;
  const auto spec = FamilySpec::self_linked(k);
  fx.ring = make_ring<F>(detail::family_variables(spec), std::move(field));
  const auto& ring = fx.ring;
  auto a = family_matrix(spec, ring);
  // f_i deletes column i.
  fx.f = {detail::minor2(a, 1, 2), detail::minor2(a, 0, 2), detail::minor2(a, 0, 1)};
  fx.I = Ideal<F>(ring, fx.f);
  fx.mu = detail::coefficient_rank(fx.f);
  fx.checks.emplace_back("mu(I) = 3", fx.mu == 3);
  if (fx.mu != 3) throw FixtureInvalid("self-linked fixture " + k.str() + ": mu(I) = " + std::to_string(fx.mu) + " != 3");

  const auto& f1 = fx.f[0];
  const auto& f2 = fx.f[1];
  const auto& f3 = fx.f[2];
  auto c = [&](long v) { return Polynomial<F>::constant(ring, v); };
  PolyMatrix<F> gamma = {{f1 + c(k.a1) * f3, -f2 + c(k.b1) * f3, c(k.c1) * f3},
                         {c(k.a2) * f3, f1 + c(k.b2) * f3, -f2 + c(k.c2) * f3}};
  // Signed cofactors: D_i = (-1)^(i+1) * (minor without column i).
  fx.d = {detail::minor2(gamma, 1, 2), -detail::minor2(gamma, 0, 2), detail::minor2(gamma, 0, 1)};
  bool deg4 = std::all_of(fx.d.begin(), fx.d.end(), [](const auto& p) { return p.degree() == 4 && p.is_homogeneous(); });
  fx.checks.emplace_back("deg D_i = 4", deg4);

  const char* names[] = {"x", "y", "z"};
  for (std::size_t i = 0; i < 3; ++i) {
    auto q = exact_divide(fx.d[i], Polynomial<F>::variable(ring, names[i]));
    fx.checks.emplace_back(std::string("D_") + std::to_string(i + 1) + "/" + names[i] + " exact", q.has_value());
    if (!q)
      throw FixtureInvalid("self-linked fixture " + k.str() + ": D_" + std::to_string(i + 1) + " is not divisible by " +
                           names[i]);
    fx.quotients.push_back(*q);
  }
  bool agree = fx.quotients[0] == fx.quotients[1] && fx.quotients[1] == fx.quotients[2];
  fx.checks.emplace_back("D_1/x = D_2/y = D_3/z", agree);
  if (!agree) throw FixtureInvalid("self-linked fixture " + k.str() + ": quotients D_i/x_i disagree");
  fx.w = fx.quotients[0];
  if (fx.w.is_zero()) throw FixtureInvalid("self-linked fixture " + k.str() + ": w = 0");
  fx.checks.emplace_back("deg w = 3", fx.w.degree() == 3 && fx.w.is_homogeneous());

  if (containments) {
    auto m = Ideal<F>::maximal(ring);
    Ideal<F> wI(ring, {fx.w});
    auto I2 = fx.I * fx.I;
    auto sym2 = I2 + wI;
    fx.checks.emplace_back("I^(2) in m*I", ideal_contains(m * fx.I, sym2, MonomialOrder::grevlex(), gb));
    fx.checks.emplace_back("m*I^(2) in I^2", ideal_contains(I2, m * sym2, MonomialOrder::grevlex(), gb));
    Ideal<F> dI(ring, fx.d);
    fx.checks.emplace_back("(D_1,D_2,D_3) = m*(w)", ideal_equal(dI, m * wI, MonomialOrder::grevlex(), gb));
  }
  return fx;
}

/// First tuple in {0,1,-1}^6 (odometer order, 0 before 1 before -1, a1
/// fastest) whose fixture passes every structural check.
template <class F>
std::optional<SelfLinkedConstants> search_self_linked_constants(F field = F()) {
  const long vals[] = {0, 1, -1};
  for (int code = 0; code < 729; ++code) {
    int v[6];
    for (int i = 0, c = code; i < 6; ++i, c /= 3) v[i] = c % 3;
    SelfLinkedConstants k{vals[v[0]], vals[v[1]], vals[v[2]], vals[v[3]], vals[v[4]], vals[v[5]]};
    try {
      auto fx = build_self_linked_fixture(k, field, false);
      if (fx.all_hold()) return k;
    } catch (const FixtureInvalid&) {
    }
  }
  return std::nullopt;
}

template <class F>
Ideal<F> Family<F>::self_linked_member(std::int64_t t) const {
  if (t == 1) return Ideal<F>::maximal(ring_);
  auto fx = build_self_linked_fixture(spec_.constants(), ring_->field(), false);
  // The fixture has its own ring with identical variables; move into ours.
  std::vector<std::size_t> same{0, 1, 2};
  if (t == 2) {
    Ideal<F> I(ring_);
    for (const auto& f : fx.f) I.add(f.transfer(ring_, same));
    return I;
  }
  return Ideal<F>(ring_, {fx.w.transfer(ring_, same)});
}

}  // namespace sympow
