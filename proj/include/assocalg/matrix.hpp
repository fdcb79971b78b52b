#pragma once

// Dense exact matrices, reduced row-echelon form and the subspace calculus
// built on it. Everything is templated on the field type so the same code
// runs over Q(i) (Scalar) and over plain rationals.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "assocalg/errors.hpp"
#include "assocalg/scalar.hpp"

namespace assocalg {

template <class T>
concept field_like = std::regular<T> && requires(T a, T b) {
  { a + b };
  { a - b };
  { a * b };
  { a / b };
  T(0);
  T(1);
};

template <field_like T>
using basic_vector = std::vector<T>;

template <field_like T>
bool is_zero_vector(std::span<const T> v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x == T(0); });
}

template <field_like T>
class basic_matrix {
 public:
  using value_type = T;

  basic_matrix() = default;
  basic_matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  basic_matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw dimension_mismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static basic_matrix identity(std::size_t n) {
    basic_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static basic_matrix from_rows(const std::vector<basic_vector<T>>& rows, std::size_t cols) {
    basic_matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw dimension_mismatch("row length mismatch");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
  }

  static basic_matrix from_columns(const std::vector<basic_vector<T>>& cols, std::size_t rows) {
    basic_matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw dimension_mismatch("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  basic_vector<T> column(std::size_t c) const {
    basic_vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  basic_matrix transpose() const {
    basic_matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  basic_vector<T> apply(std::span<const T> x) const {
    if (x.size() != cols_) throw dimension_mismatch("matrix-vector size mismatch");
    basic_vector<T> y(rows_, T(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const T& a = (*this)(r, c);
        if (a == T(0) || x[c] == T(0)) continue;
        y[r] += a * x[c];
      }
    return y;
  }

  friend basic_matrix operator*(const basic_matrix& a, const basic_matrix& b) {
    if (a.cols_ != b.rows_) throw dimension_mismatch("matrix product size mismatch");
    basic_matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const basic_matrix&, const basic_matrix&) = default;

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
      os << '\n';
    }
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <field_like T>
struct rref_result {
  basic_matrix<T> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form. Pivot = first nonzero entry in column order.
template <field_like T>
rref_result<T> rref(basic_matrix<T> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == T(0)) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
    const T inv = T(1) / m(r, c);
    for (std::size_t k = c; k < cols; ++k)
      if (m(r, k) != T(0)) m(r, k) = m(r, k) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == T(0)) continue;
      const T f = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (m(r, k) != T(0)) m(i, k) = m(i, k) - f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

template <field_like T>
std::size_t rank(const basic_matrix<T>& m) {
  return rref(m).rank;
}

/// A linear subspace of T^n, stored as its unique RREF basis.
template <field_like T>
class basic_subspace {
 public:
  basic_subspace() = default;
  explicit basic_subspace(std::size_t ambient) : ambient_(ambient) {}

  /// Span of arbitrary vectors.
  static basic_subspace span(std::size_t ambient, const std::vector<basic_vector<T>>& vectors) {
    basic_subspace s(ambient);
    if (vectors.empty()) return s;
    auto red = rref(basic_matrix<T>::from_rows(vectors, ambient));
    for (std::size_t r = 0; r < red.rank; ++r) {
      auto row = red.reduced.row(r);
      s.basis_.emplace_back(row.begin(), row.end());
    }
    s.pivots_ = std::move(red.pivots);
    return s;
  }

  static basic_subspace full(std::size_t ambient) {
    std::vector<basic_vector<T>> e;
    for (std::size_t i = 0; i < ambient; ++i) {
      basic_vector<T> v(ambient, T(0));
      v[i] = T(1);
      e.push_back(std::move(v));
    }
    return span(ambient, e);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<basic_vector<T>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v after elimination against the basis; zero iff v is in the span.
  basic_vector<T> reduce(basic_vector<T> v) const {
    if (v.size() != ambient_) throw dimension_mismatch("vector not in ambient space");
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const T f = v[pivots_[r]];
      if (f == T(0)) continue;
      for (std::size_t k = 0; k < ambient_; ++k)
        if (basis_[r][k] != T(0)) v[k] = v[k] - f * basis_[r][k];
    }
    return v;
  }

  bool contains(const basic_vector<T>& v) const {
    auto r = reduce(v);
    return is_zero_vector<T>(r);
  }
  bool contains(const basic_subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const auto& v) { return contains(v); });
  }

  basic_matrix<T> as_rows() const { return basic_matrix<T>::from_rows(basis_, ambient_); }

  friend bool operator==(const basic_subspace& a, const basic_subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      os << (r ? ", " : "") << "(";
      for (std::size_t k = 0; k < ambient_; ++k) os << (k ? "," : "") << basis_[r][k];
      os << ")";
    }
    os << "}";
    return os.str();
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<basic_vector<T>> basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}, RREF-normalized.
template <field_like T>
basic_subspace<T> kernel(const basic_matrix<T>& m) {
  const std::size_t n = m.cols();
  auto red = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<basic_vector<T>> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basic_vector<T> v(n, T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.reduced(r, f);
    vecs.push_back(std::move(v));
  }
  return basic_subspace<T>::span(n, vecs);
}

/// One exact solution of m x = rhs, or nullopt when inconsistent.
template <field_like T>
std::optional<basic_vector<T>> solve(const basic_matrix<T>& m, std::span<const T> rhs) {
  if (rhs.size() != m.rows()) throw dimension_mismatch("rhs length must equal row count");
  basic_matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  auto red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  basic_vector<T> x(m.cols(), T(0));
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.reduced(r, m.cols());
  return x;
}

/// Exact inverse, or nullopt when singular.
template <field_like T>
std::optional<basic_matrix<T>> invert(const basic_matrix<T>& m) {
  if (!m.is_square()) throw non_square("invert requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  basic_matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = T(1);
  }
  auto red = rref(std::move(aug));
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  basic_matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

template <field_like T>
basic_subspace<T> subspace_sum(const basic_subspace<T>& a, const basic_subspace<T>& b) {
  auto vecs = a.basis();
  vecs.insert(vecs.end(), b.basis().begin(), b.basis().end());
  return basic_subspace<T>::span(a.ambient_dim(), vecs);
}

/// {y : <u, y> = 0 for all u in s} under the standard bilinear pairing.
template <field_like T>
basic_subspace<T> orthogonal(const basic_subspace<T>& s) {
  if (s.is_zero()) return basic_subspace<T>::full(s.ambient_dim());
  return kernel(s.as_rows());
}

template <field_like T>
basic_subspace<T> intersect(const basic_subspace<T>& a, const basic_subspace<T>& b) {
  return orthogonal(subspace_sum(orthogonal(a), orthogonal(b)));
}

/// Standard basis vectors e_j whose indices are not pivots of s; together
/// with s they span the ambient space.
template <field_like T>
std::vector<basic_vector<T>> complement_basis(const basic_subspace<T>& s) {
  std::vector<bool> used(s.ambient_dim(), false);
  for (auto p : s.pivots()) used[p] = true;
  std::vector<basic_vector<T>> out;
  for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
    if (used[j]) continue;
    basic_vector<T> v(s.ambient_dim(), T(0));
    v[j] = T(1);
    out.push_back(std::move(v));
  }
  return out;
}

using Vector = basic_vector<Scalar>;
using Matrix = basic_matrix<Scalar>;
using Subspace = basic_subspace<Scalar>;

}  // namespace assocalg
