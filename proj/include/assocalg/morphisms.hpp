#pragma once

// Homomorphism and automorphism checks, the printed automorphism families,
// and a budgeted isomorphism search. Matrices act on column coordinates:
// column j of M holds the image of e_j.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assocalg/algebra.hpp"
#include "assocalg/expr.hpp"
#include "assocalg/invariants.hpp"
#include "assocalg/matrix.hpp"
#include "assocalg/random.hpp"

namespace assocalg {

struct HomWitness {
  std::size_t i = 0, j = 0;  // 1-based
  Element lhs, rhs;          // M(e_i e_j) and (M e_i)(M e_j)
};

struct HomCheckResult {
  bool ok = true;
  std::optional<HomWitness> witness;
  bool singular = false;  // set by is_automorphism when M is not invertible
};

inline HomCheckResult is_homomorphism(const Algebra& a, const Algebra& b, const Matrix& m) {
  const std::size_t n = a.dim(), p = b.dim();
  if (m.rows() != p || m.cols() != n)
    throw dimension_mismatch("homomorphism matrix must be " + std::to_string(p) + "x" +
                             std::to_string(n));
  std::vector<Element> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = m.column(j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element lhs = m.apply(a.basis_product(i, j));
      Element rhs = multiply(b, img[i], img[j]);
      if (lhs != rhs) return {false, HomWitness{i + 1, j + 1, std::move(lhs), std::move(rhs)}};
    }
  return {};
}

inline HomCheckResult is_automorphism(const Algebra& a, const Matrix& m) {
  auto r = is_homomorphism(a, a, m);
  if (r.ok && !invert(m)) {
    r.ok = false;
    r.singular = true;
  }
  return r;
}

inline std::string element_to_string(const Element& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].to_string();
  return s + ")";
}

inline std::string describe(const HomCheckResult& r) {
  if (r.ok) return "ok";
  if (r.singular) return "matrix is singular";
  const auto& w = *r.witness;
  return "phi(e" + std::to_string(w.i) + "e" + std::to_string(w.j) + ")=" + element_to_string(w.lhs) +
         " but phi(e" + std::to_string(w.i) + ")phi(e" + std::to_string(w.j) +
         ")=" + element_to_string(w.rhs);
}

// ------------------------------------------------------------ matrix files

inline Matrix parse_matrix(std::string_view text) {
  std::vector<Vector> rows;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls{std::string(line)};
    Vector row;
    std::string tok;
    while (ls >> tok) {
      auto v = try_parse_scalar(tok);
      if (!v) throw parse_error("line " + std::to_string(line_no) + ": malformed scalar '" + tok + "'");
      row.push_back(*v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error("line " + std::to_string(line_no) + ": ragged matrix row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix();
  return Matrix::from_rows(rows, rows.front().size());
}

inline std::string serialize_matrix(const Matrix& m) { return m.to_string(); }

// ------------------------------------------------------- automorphism families

struct AutFamilyTemplate {
  std::size_t dim = 0;
  std::vector<std::vector<Expr>> entries;  // rows as printed
  std::vector<Expr> constraints;           // must be nonzero
  std::vector<std::string> notes;
  std::optional<std::size_t> corrects;     // 1-based index of the printed family it repairs

  /// Free parameters other than the ones bound by the algebra (e.g. alpha).
  std::vector<std::string> parameters(const std::set<std::string>& bound = {}) const {
    std::set<std::string> vars;
    for (const auto& row : entries)
      for (const auto& e : row)
        for (auto& v : e.variables()) vars.insert(v);
    for (const auto& c : constraints)
      for (auto& v : c.variables()) vars.insert(v);
    std::vector<std::string> out;
    for (auto& v : vars)
      if (!bound.contains(v)) out.push_back(v);
    return out;
  }
  std::set<std::string> root_parameters() const {
    std::set<std::string> vars;
    for (const auto& row : entries)
      for (const auto& e : row)
        for (auto& v : e.root_variables()) vars.insert(v);
    return vars;
  }

  friend bool operator==(const AutFamilyTemplate&, const AutFamilyTemplate&) = default;
};

/// Exact matrix of the family at an assignment. Throws ConstraintViolated
/// when a denominator or listed condition vanishes or the matrix is singular,
/// and InexactRoot when a root leaves Q(i).
inline Matrix instantiate_family(const AutFamilyTemplate& t, const Assignment& env) {
  for (const auto& c : t.constraints)
    if (c.eval(env).is_zero()) throw constraint_violated("condition " + c.source() + " != 0 fails");
  Matrix m(t.dim, t.dim);
  for (std::size_t r = 0; r < t.dim; ++r)
    for (std::size_t c = 0; c < t.dim; ++c) m(r, c) = t.entries[r][c].eval(env);
  if (!invert(m)) throw constraint_violated("instantiated matrix is singular");
  return m;
}

struct FamilyReport {
  std::string convention;  // "column", "row" or empty when neither works
  std::vector<Assignment> assignments;
  std::vector<Matrix> matrices;  // in the resolved convention (or as printed)
  std::size_t passed = 0;        // samples verified under the reported convention
  bool closure_ok = false;
  std::string failure;           // first failing sample, when any
  bool ok() const { return !convention.empty() && closure_ok && !matrices.empty(); }
};

inline std::string assignment_to_string(const Assignment& env) {
  std::string s;
  for (const auto& [k, v] : env) s += (s.empty() ? "" : ",") + k + "=" + v.to_string();
  return s;
}

/// Draws up to `samples` admissible assignments. The first attempt sets every
/// parameter to 1, later ones are seeded-random small rationals; parameters
/// under a root are drawn as sixth powers so cube and square roots are exact.
inline std::vector<std::pair<Assignment, Matrix>> sample_family(const AutFamilyTemplate& t,
                                                                const Assignment& bound,
                                                                std::size_t samples,
                                                                std::uint64_t seed,
                                                                std::size_t max_draws = 400) {
  std::set<std::string> bound_names;
  for (const auto& [k, v] : bound) bound_names.insert(k);
  const auto params = t.parameters(bound_names);
  const auto rooted = t.root_parameters();
  seeded_rng rng(seed);
  std::vector<std::pair<Assignment, Matrix>> out;
  std::set<std::string> seen;
  for (std::size_t draw = 0; draw < max_draws && out.size() < samples; ++draw) {
    Assignment env = bound;
    for (const auto& p : params) {
      Scalar v = draw == 0 ? Scalar(1) : small_rational(rng, 5, 3);
      if (rooted.contains(p) && draw > 0) {
        Scalar t0 = v.is_zero() ? Scalar(2) : v;
        v = t0.pow(6);
      }
      env[p] = v;
    }
    const auto key = assignment_to_string(env);
    if (!seen.insert(key).second) continue;
    try {
      out.emplace_back(env, instantiate_family(t, env));
    } catch (const constraint_violated&) {
    } catch (const inexact_root&) {
    }
  }
  return out;
}

/// Checks sampled members of a family, first with the printed matrix acting
/// on columns and, failing that, with its transpose. Closure: products and
/// inverses of sampled members must verify again.
inline FamilyReport verify_family(const Algebra& a, const AutFamilyTemplate& t, std::size_t samples,
                                  std::uint64_t seed, const Assignment& bound = {}) {
  FamilyReport rep;
  if (t.dim != a.dim()) throw dimension_mismatch("family size does not match algebra");
  auto drawn = sample_family(t, bound, samples, seed);
  if (drawn.empty()) {
    rep.failure = "no admissible assignment found";
    return rep;
  }
  auto try_convention = [&](bool transpose, std::string& failure) -> std::optional<std::vector<Matrix>> {
    std::vector<Matrix> ms;
    for (const auto& [env, m0] : drawn) {
      Matrix m = transpose ? m0.transpose() : m0;
      auto r = is_automorphism(a, m);
      if (!r.ok) {
        if (failure.empty()) failure = "at " + assignment_to_string(env) + ": " + describe(r);
        return std::nullopt;
      }
      ms.push_back(std::move(m));
    }
    return ms;
  };
  std::string col_failure, row_failure;
  std::optional<std::vector<Matrix>> ms = try_convention(false, col_failure);
  if (ms) {
    rep.convention = "column";
  } else if ((ms = try_convention(true, row_failure))) {
    rep.convention = "row";
  }
  for (const auto& d : drawn) rep.assignments.push_back(d.first);
  if (!ms) {
    rep.failure = col_failure;
    for (const auto& d : drawn) rep.matrices.push_back(d.second);
    for (const auto& d : drawn)
      if (is_automorphism(a, d.second).ok) ++rep.passed;
    return rep;
  }
  rep.matrices = *ms;
  rep.passed = ms->size();
  rep.closure_ok = true;
  for (std::size_t x = 0; x < ms->size() && rep.closure_ok; ++x) {
    auto inv = invert((*ms)[x]);
    if (!inv || !is_automorphism(a, *inv).ok) {
      rep.closure_ok = false;
      rep.failure = "inverse of sample " + std::to_string(x + 1) + " is not an automorphism";
    }
    for (std::size_t y = 0; y < ms->size() && rep.closure_ok; ++y) {
      if (!is_automorphism(a, (*ms)[x] * (*ms)[y]).ok) {
        rep.closure_ok = false;
        rep.failure = "product of samples " + std::to_string(x + 1) + " and " + std::to_string(y + 1) +
                      " is not an automorphism";
      }
    }
  }
  return rep;
}

// ------------------------------------------------------ isomorphism search

struct IsoSearchOptions {
  std::size_t budget = 2000;      // random trials after the structured phase
  std::uint64_t seed = 0;
  std::vector<Matrix> automorphisms_of_b;  // composed with structured candidates
};

inline bool is_isomorphism(const Algebra& a, const Algebra& b, const Matrix& m) {
  return a.dim() == b.dim() && is_homomorphism(a, b, m).ok && invert(m).has_value();
}

/// Best-effort search for an isomorphism A -> B. A returned matrix is a
/// verified certificate; nullopt proves nothing unless the fingerprints differ.
inline std::optional<Matrix> search_isomorphism(const Algebra& a, const Algebra& b,
                                                const IsoSearchOptions& opt = {}) {
  const std::size_t n = a.dim();
  if (b.dim() != n) return std::nullopt;
  if (fingerprint(a) != fingerprint(b)) return std::nullopt;
  if (a == b) return Matrix::identity(n);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t structured = 0;
  const std::size_t structured_cap = std::max<std::size_t>(opt.budget, 1) * 4;
  do {
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
      if (++structured > structured_cap) break;
      Matrix m(n, n);
      for (std::size_t j = 0; j < n; ++j) m(perm[j], j) = (signs >> j) & 1 ? Scalar(-1) : Scalar(1);
      if (is_isomorphism(a, b, m)) return m;
      for (const auto& g : opt.automorphisms_of_b) {
        Matrix c = g * m;
        if (is_isomorphism(a, b, c)) return c;
      }
    }
  } while (structured <= structured_cap && std::next_permutation(perm.begin(), perm.end()));

  seeded_rng rng(derive_seed(opt.seed, "isomorphism-search"));
  for (std::size_t trial = 0; trial < opt.budget; ++trial) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.below(3) == 0 ? small_rational(rng, 2, 2) : Scalar(0);
    if (is_isomorphism(a, b, m)) return m;
  }
  return std::nullopt;
}

}  // namespace assocalg
