#pragma once

// Symbolic determinants and pfaffians of small polynomial matrices.

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/polynomial.hpp"

namespace sympow {

template <class F>
using PolyMatrix = std::vector<std::vector<Polynomial<F>>>;

/// All k-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

namespace detail {

template <class F>
RingPtr<F> matrix_ring(const PolyMatrix<F>& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (e.ring()) return e.ring();
  throw ArgumentError("matrix has no entry carrying a ring");
}

// det of rows [0, |cols|) against the column set `cols`, expanding along the
// last row and caching each (column subset) minor.
template <class F>
class DeterminantExpansion {
 public:
  explicit DeterminantExpansion(const PolyMatrix<F>& a) : a_(a), ring_(matrix_ring(a)) {}

  Polynomial<F> operator()(std::uint32_t cols) {
    if (cols == 0) return Polynomial<F>::one(ring_);
    if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
    const std::size_t row = static_cast<std::size_t>(std::popcount(cols)) - 1;
    Polynomial<F> sum(ring_);
    std::size_t position = 0;  // position of column j among the chosen columns
    for (std::size_t j = 0; j < 32; ++j) {
      if (!(cols & (1u << j))) continue;
      const auto& entry = a_[row][j];
      if (!entry.is_zero()) {
        auto term = entry * (*this)(cols & ~(1u << j));
        // Cofactor sign (-1)^(row + position) with row = |cols| - 1.
        if ((row + position) % 2)
          sum -= term;
        else
          sum += term;
      }
      ++position;
    }
    return memo_.emplace(cols, std::move(sum)).first->second;
  }

 private:
  const PolyMatrix<F>& a_;
  RingPtr<F> ring_;
  std::unordered_map<std::uint32_t, Polynomial<F>> memo_;
};

template <class F>
class PfaffianExpansion {
 public:
  explicit PfaffianExpansion(const PolyMatrix<F>& a) : a_(a), ring_(matrix_ring(a)) {}

  Polynomial<F> operator()(std::uint32_t idx) {
    if (idx == 0) return Polynomial<F>::one(ring_);
    if (auto it = memo_.find(idx); it != memo_.end()) return it->second;
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(idx));
    const std::uint32_t rest = idx & ~(1u << i);
    Polynomial<F> sum(ring_);
    std::size_t position = 1;
    for (std::size_t j = i + 1; j < 32; ++j) {
      if (!(rest & (1u << j))) continue;
      const auto& entry = a_[i][j];
      if (!entry.is_zero()) {
        auto term = entry * (*this)(rest & ~(1u << j));
        if (position % 2)
          sum += term;
        else
          sum -= term;
      }
      ++position;
    }
    return memo_.emplace(idx, std::move(sum)).first->second;
  }

 private:
  const PolyMatrix<F>& a_;
  RingPtr<F> ring_;
  std::unordered_map<std::uint32_t, Polynomial<F>> memo_;
};

template <class F>
PolyMatrix<F> submatrix(const PolyMatrix<F>& a, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  PolyMatrix<F> out;
  out.reserve(rows.size());
  for (auto r : rows) {
    std::vector<Polynomial<F>> row;
    row.reserve(cols.size());
    for (auto c : cols) row.push_back(a[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

template <class F>
Polynomial<F> determinant(const PolyMatrix<F>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw ArgumentError("determinant: matrix is not square");
  if (n == 0) throw ArgumentError("determinant: empty matrix");
  if (n > 31) throw ArgumentError("determinant: matrix too large");
  detail::DeterminantExpansion<F> expand(a);
  return expand((1u << n) - 1);
}

template <class F>
bool is_skew_symmetric(const PolyMatrix<F>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i][i].is_zero()) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(a[j][i] == -a[i][j])) return false;
  }
  return true;
}

template <class F>
Polynomial<F> pfaffian(const PolyMatrix<F>& a) {
  if (a.empty()) throw ArgumentError("pfaffian: empty matrix");
  if (!is_skew_symmetric(a)) throw ArgumentError("pfaffian: matrix is not skew-symmetric");
  if (a.size() % 2) throw ArgumentError("pfaffian: odd dimension");
  if (a.size() > 31) throw ArgumentError("pfaffian: matrix too large");
  detail::PfaffianExpansion<F> expand(a);
  return expand((1u << a.size()) - 1);
}

/// All t x t minors, rows and columns both in lexicographic subset order.
template <class F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& a, std::size_t t) {
  if (a.empty()) throw ArgumentError("minors: empty matrix");
  const std::size_t rows = a.size(), cols = a.front().size();
  std::vector<Polynomial<F>> out;
  for (const auto& r : combinations(rows, t))
    for (const auto& c : combinations(cols, t)) out.push_back(determinant(detail::submatrix(a, r, c)));
  return out;
}

/// Pfaffians of all principal 2t x 2t submatrices.
template <class F>
std::vector<Polynomial<F>> pfaffians(const PolyMatrix<F>& a, std::size_t order) {
  if (order % 2) throw ArgumentError("pfaffians: order must be even");
  if (!is_skew_symmetric(a)) throw ArgumentError("pfaffians: matrix is not skew-symmetric");
  std::vector<Polynomial<F>> out;
  for (const auto& idx : combinations(a.size(), order)) out.push_back(pfaffian(detail::submatrix(a, idx, idx)));
  return out;
}

}  // namespace sympow
