#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/monomial.hpp"
#include "sympow/ring.hpp"

namespace sympow {

template <class F>
struct Term {
  Monomial monomial;
  typename F::value_type coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial. Terms are kept strictly decreasing in the ring's
/// monomial order with nonzero coefficients, so equality is structural.
template <class F>
class Polynomial {
 public:
  using value_type = typename F::value_type;
  using term_type = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Sorts, combines equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<term_type> terms) {
    Polynomial p(std::move(ring));
    const auto& ord = p.ring_->order();
    const auto& f = p.ring_->field();
    std::sort(terms.begin(), terms.end(),
              [&](const term_type& a, const term_type& b) { return ord.compare(a.monomial, b.monomial) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coef = f.add(p.terms_.back().coef, t.coef);
        if (f.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
      } else if (!f.is_zero(t.coef)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Trusts that `terms` are already strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<term_type> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(RingPtr<F> ring, const value_type& c) {
    Polynomial p(std::move(ring));
    if (!p.ring_->field().is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial constant(RingPtr<F> ring, long c) {
    auto v = ring->field().from_int(c);
    return constant(std::move(ring), v);
  }
  static Polynomial one(RingPtr<F> ring) { return constant(ring, ring->field().one()); }

  static Polynomial term(RingPtr<F> ring, const Monomial& m, const value_type& c) {
    Polynomial p(std::move(ring));
    if (!p.ring_->field().is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    if (index >= ring->size()) throw ArgumentError("Polynomial::variable: index out of range");
    auto c = ring->field().one();
    return term(std::move(ring), Monomial::variable(index), c);
  }
  static Polynomial variable(RingPtr<F> ring, const std::string& name) {
    auto i = ring->index_of(name);
    return variable(std::move(ring), i);
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<term_type>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const term_type& lead() const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().monomial; }
  const value_type& lead_coef() const { return lead().coef; }

  /// Largest total degree of a term; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
  }

  /// Smallest total degree of a term; -1 for zero.
  int low_degree() const {
    if (terms_.empty()) return -1;
    int d = static_cast<int>(terms_.front().monomial.degree());
    for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.monomial.degree()));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    return true;
  }

  Polynomial scaled(const value_type& c) const {
    const auto& f = field();
    if (f.is_zero(c)) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial, f.mul(t.coef, c)});
    return p;
  }

  /// c * m * this. Multiplication by a monomial preserves the term order.
  Polynomial mul_term(const Monomial& m, const value_type& c) const {
    const auto& f = field();
    if (f.is_zero(c)) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, f.mul(t.coef, c)});
    return p;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    if (field().is_one(lead_coef())) return *this;
    return scaled(field().inv(lead_coef()));
  }

  Polynomial operator-() const { return scaled(field().neg(field().one())); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_, "polynomial product");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& big = a.size() <= b.size() ? b : a;
    std::vector<Polynomial> rows;
    rows.reserve(small.size());
    for (const auto& t : small.terms_) rows.push_back(big.mul_term(t.monomial, t.coef));
    // Balanced pairwise merging.
    while (rows.size() > 1) {
      std::vector<Polynomial> next;
      next.reserve((rows.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(rows[i] + rows[i + 1]);
      if (rows.size() % 2) next.push_back(std::move(rows.back()));
      rows = std::move(next);
    }
    return std::move(rows.front());
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(ring_), base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// The same polynomial in `target`, whose variables are `map[i]` for the
  /// variables i of this ring. Used for order changes and ring extensions.
  Polynomial transfer(RingPtr<F> target, const std::vector<std::size_t>& map) const {
    if (map.size() != ring_->size()) throw ArgumentError("Polynomial::transfer: map size mismatch");
    std::vector<term_type> out;
    out.reserve(terms_.size());
    std::vector<int> exps(target->size(), 0);
    for (const auto& t : terms_) {
      std::fill(exps.begin(), exps.end(), 0);
      for (std::size_t i = 0; i < map.size(); ++i) exps.at(map[i]) = static_cast<int>(t.monomial[i]);
      out.push_back({Monomial::from_exponents(exps), t.coef});
    }
    return from_terms(std::move(target), std::move(out));
  }

  /// The same polynomial in a ring with identical variables but another order.
  Polynomial reorder(RingPtr<F> target) const {
    if (target->names() != ring_->names() || !(target->field() == ring_->field()))
      throw ArgumentError("Polynomial::reorder: rings differ in more than the order");
    Polynomial p(std::move(target));
    p.terms_ = terms_;
    const auto& ord = p.ring_->order();
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const term_type& a, const term_type& b) { return ord.compare(a.monomial, b.monomial) > 0; });
    return p;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const auto& f = field();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = f.to_string(t.coef);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string mono = monomial_string(t.monomial);
      if (mono.empty())
        out += c;
      else if (c == "1")
        out += mono;
      else
        out += c + "*" + mono;
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      unsigned e = m[i];
      if (!e) continue;
      if (!out.empty()) out += "*";
      out += ring_->name(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    const auto& f = field();
    for (const auto& t : terms_) {
      h ^= t.monomial.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= f.hash(t.coef) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_, subtract ? "polynomial difference" : "polynomial sum");
    const auto& f = a.field();
    const auto& ord = a.ring_->order();
    Polynomial p(a.ring_);
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = ord.compare(a.terms_[i].monomial, b.terms_[j].monomial);
      if (c > 0) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        p.terms_.push_back({t.monomial, subtract ? f.neg(t.coef) : t.coef});
      } else {
        auto v = subtract ? f.sub(a.terms_[i].coef, b.terms_[j].coef) : f.add(a.terms_[i].coef, b.terms_[j].coef);
        if (!f.is_zero(v)) p.terms_.push_back({a.terms_[i].monomial, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) p.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const auto& t = b.terms_[j];
      p.terms_.push_back({t.monomial, subtract ? f.neg(t.coef) : t.coef});
    }
    return p;
  }

  RingPtr<F> ring_;
  std::vector<term_type> terms_;
};

/// q with p = d * q, or nullopt when d does not divide p.
template <class F>
std::optional<Polynomial<F>> exact_divide(const Polynomial<F>& p, const Polynomial<F>& d) {
  require_same_ring(p.ring(), d.ring(), "exact_divide");
  if (d.is_zero()) throw ArgumentError("exact_divide: division by zero");
  const auto& f = p.field();
  auto lead_inv = f.inv(d.lead_coef());
  std::vector<Term<F>> quotient;
  Polynomial<F> r = p;
  while (!r.is_zero()) {
    // If d | p then every intermediate remainder is a multiple of d, whose
    // leading monomial is divisible by lm(d).
    if (!d.lead_monomial().divides(r.lead_monomial())) return std::nullopt;
    Monomial m = r.lead_monomial().quotient(d.lead_monomial());
    auto c = f.mul(r.lead_coef(), lead_inv);
    quotient.push_back({m, c});
    r -= d.mul_term(m, c);
  }
  return Polynomial<F>::from_sorted_terms(p.ring(), std::move(quotient));
}

}  // namespace sympow
