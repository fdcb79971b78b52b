#pragma once

// Finite-dimensional algebras given by structure constants,
//   e_i e_j = sum_k c[i][j][k] e_k,
// together with the basic calculus over them. Indices are 0-based in the
// API and 1-based in every text format.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "assocalg/errors.hpp"
#include "assocalg/matrix.hpp"
#include "assocalg/scalar.hpp"

namespace assocalg {

/// Coordinates of an algebra element over the algebra's standard basis.
using Element = Vector;

inline Element basis_vector(std::size_t n, std::size_t i) {
  Element v(n, Scalar(0));
  v.at(i) = Scalar(1);
  return v;
}

inline Element zero_element(std::size_t n) { return Element(n, Scalar(0)); }

class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::size_t dim, std::string label = {})
      : dim_(dim), sc_(dim * dim * dim, Scalar(0)), label_(std::move(label)) {}

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& c(std::size_t i, std::size_t j, std::size_t k) {
    return sc_[(i * dim_ + j) * dim_ + k];
  }

  /// Coordinates of e_i e_j.
  Element basis_product(std::size_t i, std::size_t j) const {
    Element v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
  }

  /// Structural equality of the structure-constant tensors (labels ignored).
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.sc_ == b.sc_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> sc_;
  std::string label_;
};

/// One nonzero entry of a multiplication table, 1-based.
struct Product {
  std::size_t i, j, k;
  Scalar coeff;
};

/// Builds an algebra from its nonzero products (1-based indices).
inline Algebra make_algebra(std::size_t dim, const std::vector<Product>& products,
                            std::string label = {}) {
  Algebra a(dim, std::move(label));
  std::vector<bool> seen(dim * dim * dim, false);
  for (const auto& p : products) {
    if (p.i < 1 || p.j < 1 || p.k < 1 || p.i > dim || p.j > dim || p.k > dim)
      throw index_out_of_range("product index outside 1.." + std::to_string(dim));
    const std::size_t slot = ((p.i - 1) * dim + (p.j - 1)) * dim + (p.k - 1);
    if (seen[slot])
      throw duplicate_product("duplicate product e" + std::to_string(p.i) + "e" +
                              std::to_string(p.j) + " -> e" + std::to_string(p.k));
    seen[slot] = true;
    a.c(p.i - 1, p.j - 1, p.k - 1) = p.coeff;
  }
  return a;
}

/// Nonzero products in (i, j, k) lexicographic order, 1-based.
inline std::vector<Product> nonzero_products(const Algebra& a) {
  std::vector<Product> out;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero()) out.push_back({i + 1, j + 1, k + 1, a.c(i, j, k)});
  return out;
}

/// Bilinear product (xy)_k = sum_ij x_i y_j c[i][j][k].
inline Element multiply(const Algebra& a, const Element& x, const Element& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n)
    throw dimension_mismatch("element dimension does not match algebra");
  Element out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& ck = a.c(i, j, k);
        if (!ck.is_zero()) out[k] += xy * ck;
      }
    }
  }
  return out;
}

inline Element add(Element x, const Element& y) {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
  return x;
}
inline Element sub(Element x, const Element& y) {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] -= y[k];
  return x;
}
inline Element scale(Element x, const Scalar& s) {
  for (auto& v : x) v *= s;
  return x;
}

/// Matrix of y -> x y (column j = x e_j).
inline Matrix left_multiplication(const Algebra& a, const Element& x) {
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = multiply(a, x, basis_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

/// Matrix of y -> y x (column j = e_j x).
inline Matrix right_multiplication(const Algebra& a, const Element& x) {
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = multiply(a, basis_vector(n, j), x);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

inline Scalar trace(const Matrix& m) {
  Scalar t(0);
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

struct AssociativityResult {
  bool associative = true;
  // First violating triple (1-based) in lexicographic order, with both sides.
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> triple;
  Element lhs, rhs;
};

inline AssociativityResult is_associative(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Element> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i e_j) e_k and e_i (e_j e_k), expanded through the tensor.
        Element lhs(n, Scalar(0)), rhs(n, Scalar(0));
        for (std::size_t m = 0; m < n; ++m) {
          const Scalar& u = prod[i * n + j][m];
          const Scalar& v = prod[j * n + k][m];
          for (std::size_t t = 0; t < n; ++t) {
            if (!u.is_zero()) lhs[t] += u * a.c(m, k, t);
            if (!v.is_zero()) rhs[t] += v * a.c(i, m, t);
          }
        }
        if (lhs != rhs) return {false, std::make_tuple(i + 1, j + 1, k + 1), lhs, rhs};
      }
  return {};
}

/// span{uv : u in basis(U), v in basis(V)}.
inline Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<Element> vecs;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) {
      auto p = multiply(a, x, y);
      if (!is_zero_vector<Scalar>(p)) vecs.push_back(std::move(p));
    }
  return Subspace::span(a.dim(), vecs);
}

inline Subspace full_space(const Algebra& a) { return Subspace::full(a.dim()); }

/// [A^1, A^2, ...] with A^{k+1} = A A^k. Stops at the first zero power, or
/// right after the first repeated power (which is included).
inline std::vector<Subspace> power_chain(const Algebra& a) {
  std::vector<Subspace> chain{full_space(a)};
  if (chain.back().is_zero()) return chain;
  const Subspace whole = chain.front();
  for (std::size_t step = 0; step <= a.dim(); ++step) {
    Subspace next = subspace_product(a, whole, chain.back());
    const bool stable = next == chain.back();
    chain.push_back(std::move(next));
    if (stable || chain.back().is_zero()) break;
  }
  return chain;
}

inline std::vector<std::size_t> dims_of(const std::vector<Subspace>& chain) {
  std::vector<std::size_t> d;
  for (const auto& s : chain) d.push_back(s.dim());
  return d;
}

/// Smallest product-closed subspace containing the generators.
inline Subspace generated_subalgebra(const Algebra& a, const std::vector<Element>& gens) {
  Subspace s = Subspace::span(a.dim(), gens);
  while (true) {
    Subspace next = subspace_sum(s, subspace_product(a, s, s));
    if (next == s) return s;
    s = std::move(next);
  }
}

inline bool is_product_closed(const Algebra& a, const Subspace& s) {
  return s.contains(subspace_product(a, s, s));
}

/// Same algebra in the basis f_j = sum_i P(i,j) e_i (columns of P).
inline Algebra change_basis(const Algebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw dimension_mismatch("basis change must be n x n");
  auto pinv = invert(p);
  if (!pinv) throw singular_matrix("basis change matrix is singular");
  Algebra b(n, a.label());
  std::vector<Element> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = p.column(j);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto coords = pinv->apply(multiply(a, f[x], f[y]));
      for (std::size_t m = 0; m < n; ++m) b.c(x, y, m) = coords[m];
    }
  return b;
}

/// Block-diagonal sum; the basis of B follows the basis of A.
inline Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim(), m = b.dim();
  std::string label = a.label().empty() || b.label().empty()
                          ? a.label() + b.label()
                          : a.label() + "+" + b.label();
  Algebra s(n + m, label);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.c(i, j, k) = a.c(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) s.c(n + i, n + j, n + k) = b.c(i, j, k);
  return s;
}

/// x * y := y x.
inline Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  Algebra o(n, a.label().empty() ? "" : a.label() + "^op");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) o.c(i, j, k) = a.c(j, i, k);
  return o;
}

/// A (+) <1>, with the adjoined unit as the last basis vector.
inline Algebra unitalization(const Algebra& a) {
  const std::size_t n = a.dim();
  Algebra u(n + 1, a.label());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) u.c(i, j, k) = a.c(i, j, k);
  for (std::size_t i = 0; i <= n; ++i) {
    u.c(n, i, i) = Scalar(1);
    u.c(i, n, i) = Scalar(1);
  }
  return u;
}

/// Structure constants of a product-closed subspace in its RREF basis.
inline Algebra restrict_to(const Algebra& a, const Subspace& s) {
  if (!is_product_closed(a, s)) throw dimension_mismatch("subspace is not a subalgebra");
  const std::size_t d = s.dim();
  Algebra r(d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Element p = multiply(a, s.basis()[x], s.basis()[y]);
      // RREF basis: the coordinate on basis vector t is the entry at its pivot.
      for (std::size_t t = 0; t < d; ++t) r.c(x, y, t) = p[s.pivots()[t]];
    }
  return r;
}

/// Quotient by a two-sided ideal, expressed on the standard-basis complement
/// of the ideal's pivots.
inline Algebra quotient(const Algebra& a, const Subspace& ideal) {
  auto comp = complement_basis(ideal);
  std::vector<std::size_t> idx;
  for (const auto& v : comp)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k].is_one()) idx.push_back(k);
  const std::size_t d = comp.size();
  Algebra q(d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Element p = ideal.reduce(multiply(a, comp[x], comp[y]));
      for (std::size_t t = 0; t < d; ++t) q.c(x, y, t) = p[idx[t]];
    }
  return q;
}

// ----------------------------------------------------------------- text format

inline std::string serialize_algebra(const Algebra& a) {
  std::ostringstream os;
  os << "dim " << a.dim() << '\n';
  if (!a.label().empty()) os << "label " << a.label() << '\n';
  os << "# e_i e_j = coeff * e_k\n";
  for (const auto& p : nonzero_products(a))
    os << p.i << ' ' << p.j << " -> " << p.k << " : " << p.coeff << '\n';
  return os.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::size_t parse_index(std::string_view s, std::size_t line_no) {
  s = trim(s);
  std::size_t v = 0;
  if (s.empty()) throw parse_error("line " + std::to_string(line_no) + ": missing index");
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw parse_error("line " + std::to_string(line_no) + ": bad index '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

struct raw_product_line {
  std::size_t i, j, k;
  std::string coeff;
};

// `i j -> k : coeff`
inline std::optional<raw_product_line> split_product_line(std::string_view line,
                                                          std::size_t line_no) {
  auto arrow = line.find("->");
  if (arrow == std::string_view::npos) return std::nullopt;
  auto colon = line.find(':', arrow);
  if (colon == std::string_view::npos)
    throw parse_error("line " + std::to_string(line_no) + ": expected ':' after target index");
  std::istringstream lhs{std::string(line.substr(0, arrow))};
  std::string si, sj, extra;
  if (!(lhs >> si >> sj) || (lhs >> extra))
    throw parse_error("line " + std::to_string(line_no) + ": expected two source indices");
  raw_product_line r;
  r.i = parse_index(si, line_no);
  r.j = parse_index(sj, line_no);
  r.k = parse_index(line.substr(arrow + 2, colon - arrow - 2), line_no);
  r.coeff = std::string(trim(line.substr(colon + 1)));
  if (r.coeff.empty())
    throw parse_error("line " + std::to_string(line_no) + ": missing coefficient");
  return r;
}

}  // namespace detail

inline Algebra parse_algebra(std::string_view text) {
  std::optional<std::size_t> dim;
  std::string label;
  std::vector<Product> products;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("dim ")) {
      dim = detail::parse_index(line.substr(4), line_no);
    } else if (line.starts_with("label")) {
      label = std::string(detail::trim(line.substr(5)));
    } else if (auto p = detail::split_product_line(line, line_no)) {
      auto c = try_parse_scalar(p->coeff);
      if (!c) throw parse_error("line " + std::to_string(line_no) + ": malformed scalar '" +
                                p->coeff + "'");
      products.push_back({p->i, p->j, p->k, *c});
    } else {
      throw parse_error("line " + std::to_string(line_no) + ": unrecognized '" +
                        std::string(line) + "'");
    }
  }
  if (!dim) throw parse_error("missing 'dim' line");
  return make_algebra(*dim, products, label);
}

}  // namespace assocalg
