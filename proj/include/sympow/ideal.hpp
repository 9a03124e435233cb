#pragma once

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/polynomial.hpp"

namespace sympow {

/// Finitely generated ideal. Zero generators are dropped and generators that
/// agree up to a nonzero scalar are kept once (first occurrence wins), so the
/// generator list is deterministic given the input order.
template <class F>
class Ideal {
 public:
  using poly_type = Polynomial<F>;

  Ideal() = default;
  explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr<F> ring, const std::vector<poly_type>& generators) : ring_(std::move(ring)) {
    add_all(generators);
  }

  static Ideal unit(RingPtr<F> ring) {
    Ideal I(ring);
    I.add(poly_type::one(ring));
    return I;
  }

  /// (x_0, ..., x_{n-1}).
  static Ideal maximal(RingPtr<F> ring) {
    Ideal I(ring);
    for (std::size_t i = 0; i < ring->size(); ++i) I.add(poly_type::variable(ring, i));
    return I;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<poly_type>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const poly_type& g) { return g.is_homogeneous(); });
  }

  /// Least total degree among generators; for homogeneous generators this is alpha.
  int min_generator_degree() const {
    if (gens_.empty()) throw PreconditionError("min_generator_degree: zero ideal");
    int d = std::numeric_limits<int>::max();
    for (const auto& g : gens_) d = std::min(d, g.low_degree());
    return d;
  }

  int max_generator_degree() const {
    int d = -1;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  /// Adds g unless it is zero or a scalar multiple of an existing generator.
  bool add(const poly_type& g) {
    require_same_ring(ring_, g.ring(), "Ideal::add");
    if (g.is_zero()) return false;
    poly_type key = g.monic();
    auto h = key.hash();
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (monic_[it->second] == key) return false;
    index_.emplace(h, gens_.size());
    gens_.push_back(g);
    monic_.push_back(std::move(key));
    return true;
  }

  void add_all(const std::vector<poly_type>& gs) {
    for (const auto& g : gs) add(g);
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_, "ideal sum");
    Ideal out = a;
    out.add_all(b.gens_);
    return out;
  }

  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_, "ideal product");
    Ideal out(a.ring_);
    for (const auto& f : a.gens_)
      for (const auto& g : b.gens_) out.add(f * g);
    return out;
  }

  Ideal pow(unsigned e) const {
    Ideal out = unit(ring_);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

 private:
  RingPtr<F> ring_;
  std::vector<poly_type> gens_;
  std::vector<poly_type> monic_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

}  // namespace sympow
