#pragma once

// Brute-force enumeration over integer compositions with a weighted-sum
// constraint  a_1 + 2 a_2 + ... + len * a_len = weight.  These are the ground
// truth for the closed-form least-degree formulas in invariants.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/profile.hpp"

namespace sympow {

/// Nonnegative vector (a_1, ..., a_len); index i carries weight i.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (auto p : parts_)
      if (p < 0) throw ArgumentError("Composition: negative part");
    weight_ = compute_weight(parts_);
  }

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::int64_t weight() const { return weight_; }
  /// a_i with 1-based index, as in the weighted sum.
  std::int64_t operator[](std::size_t i) const { return parts_.at(i - 1); }

  std::int64_t part_count() const {
    std::int64_t n = 0;
    for (auto p : parts_) n += p;
    return n;
  }

  /// Recomputes the weight from the parts.
  static std::int64_t compute_weight(const std::vector<std::int64_t>& parts) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) w += static_cast<std::int64_t>(i + 1) * parts[i];
    return w;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t weight_ = 0;
};

/// Lazily yields every composition of the given length and weight exactly
/// once. The last part is chosen first, largest value first, so compositions
/// concentrated on the heaviest index appear early.
class CompositionStream {
 public:
  CompositionStream(std::size_t len, std::int64_t weight) : len_(len), weight_(weight) {
    if (len < 1) throw ArgumentError("enumerate_compositions: len must be >= 1");
    if (weight < 0) throw ArgumentError("enumerate_compositions: weight must be >= 0");
    parts_.assign(len, 0);
    remaining_.assign(len + 1, 0);
  }

  /// Next composition, or nullopt once the stream is exhausted.
  std::optional<Composition> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      remaining_[len_] = weight_;
      descend(len_);
      return Composition(parts_);
    }
    // Innermost loop first: the smallest index >= 2 whose part can still decrease.
    for (std::size_t idx = 2; idx <= len_; ++idx) {
      if (parts_[idx - 1] > 0) {
        --parts_[idx - 1];
        remaining_[idx - 1] = remaining_[idx] - static_cast<std::int64_t>(idx) * parts_[idx - 1];
        descend(idx - 1);
        return Composition(parts_);
      }
    }
    done_ = true;
    return std::nullopt;
  }

  class iterator {
   public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(CompositionStream* s) : stream_(s) { ++*this; }
    const Composition& operator*() const { return *current_; }
    const Composition* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

   private:
    CompositionStream* stream_ = nullptr;
    std::optional<Composition> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  // Fill indices idx..1 greedily (largest value first) from remaining_[idx].
  void descend(std::size_t idx) {
    for (std::size_t i = idx; i >= 2; --i) {
      parts_[i - 1] = remaining_[i] / static_cast<std::int64_t>(i);
      remaining_[i - 1] = remaining_[i] - static_cast<std::int64_t>(i) * parts_[i - 1];
    }
    parts_[0] = remaining_[1];
  }

  std::size_t len_;
  std::int64_t weight_;
  std::vector<std::int64_t> parts_;
  // remaining_[i] = weight still to distribute over indices 1..i.
  std::vector<std::int64_t> remaining_;
  bool started_ = false;
  bool done_ = false;
};

inline CompositionStream enumerate_compositions(std::size_t len, std::int64_t weight) {
  return CompositionStream(len, weight);
}

struct WeightedMinimum {
  std::int64_t value;
  Composition witness;
};

namespace detail {

// min over all compositions of sum (offset + i) * a_i; ties broken by the
// lexicographically smallest composition. No pruning: this is an oracle.
inline WeightedMinimum minimize_weighted(std::int64_t offset, std::size_t len, std::int64_t weight) {
  std::optional<WeightedMinimum> best;
  for (auto stream = enumerate_compositions(len, weight); auto c = stream.next();) {
    std::int64_t value = 0;
    for (std::size_t i = 1; i <= len; ++i) value += (offset + static_cast<std::int64_t>(i)) * (*c)[i];
    if (!best || value < best->value || (value == best->value && *c < best->witness))
      best = WeightedMinimum{value, *c};
  }
  return *best;
}

}  // namespace detail

/// min of sum_{i=1}^{len} (b + i) a_i over compositions of `weight`, with a
/// lexicographically smallest minimizing witness.
inline WeightedMinimum min_weighted_sum(std::int64_t b, std::size_t len, std::int64_t weight) {
  if (b < 1) throw ArgumentError("min_weighted_sum: b must be >= 1");
  if (len < 1) throw ArgumentError("min_weighted_sum: len must be >= 1");
  if (weight < 0) throw ArgumentError("min_weighted_sum: weight must be >= 0");
  return detail::minimize_weighted(b, len, weight);
}

struct EnumerationConfig {
  std::int64_t max_s = 200;
};

/// alpha(a_t^(s)) by exhaustive search over the summands of the recursive
/// symbolic Rees algebra description.
inline std::int64_t alpha_by_enumeration(const FamilyProfile& profile, std::int64_t t, std::int64_t s,
                                         const EnumerationConfig& config = {}) {
  profile.check_t(t);
  if (s < 1) throw ArgumentError("alpha_by_enumeration: s must be >= 1");
  if (s > config.max_s)
    throw BudgetExceeded("alpha_by_enumeration: s=" + std::to_string(s) + " exceeds enumeration bound " +
                         std::to_string(config.max_s));
  auto len = static_cast<std::size_t>(profile.span(t));
  return detail::minimize_weighted(profile.alpha1() + t - 2, len, s).value;
}

}  // namespace sympow
