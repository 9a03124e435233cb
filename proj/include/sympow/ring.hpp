#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/field.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

/// Polynomial ring F[x_0, ..., x_{n-1}] with a fixed variable order and a
/// fixed monomial order. Rings are shared through RingPtr and never mutated.
template <class F>
class Ring {
 public:
  using field_type = F;

  Ring(std::vector<std::string> names, F field, MonomialOrder order = MonomialOrder::grevlex())
      : names_(std::move(names)), field_(std::move(field)), order_(order) {
    if (names_.size() > kMaxVariables)
      throw BudgetExceeded("Ring: " + std::to_string(names_.size()) + " variables exceed the limit of " +
                           std::to_string(kMaxVariables));
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw ArgumentError("Ring: empty variable name");
      if (!seen.insert(n).second) throw ArgumentError("Ring: duplicate variable name '" + n + "'");
    }
    if (order_.kind() == MonomialOrder::Kind::elimination && order_.block() >= names_.size())
      throw ArgumentError("Ring: elimination block must leave at least one variable");
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const F& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t index_of(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw ArgumentError("Ring: unknown variable '" + name + "'");
  }

  /// Same variables and field, different monomial order.
  std::shared_ptr<const Ring> with_order(MonomialOrder order) const {
    return std::make_shared<const Ring>(names_, field_, order);
  }

  /// Same variables as `this` but with `name` inserted in front.
  std::shared_ptr<const Ring> with_leading_variable(const std::string& name, MonomialOrder order) const {
    std::vector<std::string> names;
    names.reserve(names_.size() + 1);
    names.push_back(name);
    names.insert(names.end(), names_.begin(), names_.end());
    return std::make_shared<const Ring>(std::move(names), field_, order);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.field_ == b.field_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  F field_;
  MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(std::vector<std::string> names, F field = F(), MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring<F>>(std::move(names), std::move(field), order);
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b, const char* op) {
  if (!same_ring(a, b)) throw ArgumentError(std::string(op) + ": operands live in different rings");
}

}  // namespace sympow
