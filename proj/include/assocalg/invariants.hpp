#pragma once

// Basis-independent invariants of structure-constant algebras.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "assocalg/algebra.hpp"
#include "assocalg/matrix.hpp"
#include "assocalg/random.hpp"

namespace assocalg {

/// {x : x e_j = 0 for all j}.
inline Subspace left_annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = a.c(i, j, k);
  return kernel(m);
}

/// {x : e_i x = 0 for all i}.
inline Subspace right_annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) m(i * n + k, j) = a.c(i, j, k);
  return kernel(m);
}

inline Subspace two_sided_annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix m(2 * n * n, n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x) {
        m(t * n + k, x) = a.c(x, t, k);
        m(n * n + t * n + k, x) = a.c(t, x, k);
      }
  return kernel(m);
}

/// {x : x e_i = e_i x for all i}.
inline Subspace center(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x) m(i * n + k, x) = a.c(x, i, k) - a.c(i, x, k);
  return kernel(m);
}

/// {y : y s = s y for all s in S}.
inline Subspace centralizer(const Algebra& a, const Subspace& s) {
  const std::size_t n = a.dim();
  if (s.is_zero()) return Subspace::full(n);
  Matrix m(s.dim() * n, n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    // y s - s y is linear in y: column x holds e_x s - s e_x.
    const auto& v = s.basis()[r];
    for (std::size_t x = 0; x < n; ++x) {
      auto ex = basis_vector(n, x);
      auto d = sub(multiply(a, ex, v), multiply(a, v, ex));
      for (std::size_t k = 0; k < n; ++k) m(r * n + k, x) = d[k];
    }
  }
  return kernel(m);
}

inline bool is_commutative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.c(i, j, k) != a.c(j, i, k)) return false;
  return true;
}

/// The two-sided identity, if one exists.
inline std::optional<Element> find_unit(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Element{};
  Matrix m(2 * n * n, n);
  Vector rhs(2 * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t u = 0; u < n; ++u) {
        m(i * n + k, u) = a.c(u, i, k);
        m(n * n + i * n + k, u) = a.c(i, u, k);
      }
      if (i == k) rhs[i * n + k] = rhs[n * n + i * n + k] = Scalar(1);
    }
  return solve<Scalar>(m, rhs);
}

/// Smallest k with A^k = 0, or nullopt when the power chain stalls above zero.
inline std::optional<std::size_t> nilpotency_index(const Algebra& a) {
  auto chain = power_chain(a);
  if (chain.back().is_zero()) return chain.size();
  return std::nullopt;
}

/// Gram matrix of the trace pairing tau(x, y) = tr(L_{xy}) of the
/// unitalization, rows over the basis of A and columns over the basis of A_1
/// (adjoined unit last).
inline Matrix trace_pairing(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix g(n, n + 1);
  std::vector<Scalar> tr_basis(n);
  for (std::size_t k = 0; k < n; ++k) tr_basis[k] = trace(left_multiplication(a, basis_vector(n, k)));
  // tr(L_z) on A_1 equals tr(L_z) on A for z in A, and is linear in z.
  auto tr_of = [&](const Element& z) {
    Scalar t(0);
    for (std::size_t k = 0; k < n; ++k)
      if (!z[k].is_zero()) t += z[k] * tr_basis[k];
    return t;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = tr_of(a.basis_product(i, j));
    g(i, n) = tr_basis[i];
  }
  return g;
}

/// tau(e_i, e_j) on A alone.
inline Matrix trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix g = trace_pairing(a);
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = g(i, j);
  return t;
}

inline Subspace radical_unchecked(const Algebra& a) { return kernel(trace_pairing(a).transpose()); }

inline bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  const Subspace whole = full_space(a);
  return s.contains(subspace_product(a, whole, s)) && s.contains(subspace_product(a, s, whole));
}

/// True when s^k = 0 for some k, s taken as a subset closed under products.
inline bool is_nilpotent_subspace(const Algebra& a, const Subspace& s) {
  Subspace p = s;
  for (std::size_t step = 0; step <= a.dim() + 1; ++step) {
    if (p.is_zero()) return true;
    Subspace next = subspace_product(a, s, p);
    if (next == p) return false;
    p = std::move(next);
  }
  return p.is_zero();
}

inline bool is_semisimple_by_trace(const Algebra& a) {
  return rank(trace_pairing(a)) == a.dim();
}

/// Jacobson radical via the trace criterion on the unitalization, validated
/// before return: two-sided ideal, nilpotent, semisimple quotient.
inline Subspace radical(const Algebra& a) {
  Subspace r = radical_unchecked(a);
  if (!is_two_sided_ideal(a, r))
    throw internal_inconsistency("radical candidate is not a two-sided ideal");
  if (!is_nilpotent_subspace(a, r))
    throw internal_inconsistency("radical candidate is not nilpotent");
  if (!is_semisimple_by_trace(quotient(a, r)))
    throw internal_inconsistency("quotient by radical candidate is not semisimple");
  return r;
}

inline Subspace span_of_indices(std::size_t n, const std::vector<std::size_t>& one_based) {
  std::vector<Element> v;
  for (auto i : one_based) {
    if (i < 1 || i > n) throw index_out_of_range("basis index out of range");
    v.push_back(basis_vector(n, i - 1));
  }
  return Subspace::span(n, v);
}

/// Claimed splitting A = N (+) S, as 1-based basis indices.
struct WedderburnClaim {
  std::vector<std::size_t> n_span;
  std::vector<std::size_t> s_span;
  friend bool operator==(const WedderburnClaim&, const WedderburnClaim&) = default;
};

struct CheckOutcome {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct WedderburnReport {
  std::vector<CheckOutcome> checks;
  bool all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
  }
};

inline WedderburnReport verify_wedderburn(const Algebra& a, const WedderburnClaim& claim) {
  const std::size_t n = a.dim();
  const Subspace nspan = span_of_indices(n, claim.n_span);
  const Subspace sspan = span_of_indices(n, claim.s_span);
  const Subspace rad = radical(a);
  WedderburnReport rep;
  rep.checks.push_back({"radical", nspan == rad,
                        "claimed N=" + nspan.to_string() + " computed rad=" + rad.to_string()});
  const bool closed = is_product_closed(a, sspan);
  rep.checks.push_back({"s_closed", closed, closed ? "S is a subalgebra"
                                                   : "S*S=" + subspace_product(a, sspan, sspan).to_string()});
  const Subspace cap = intersect(nspan, sspan);
  rep.checks.push_back({"n_cap_s", cap.is_zero(), "dim(N cap S)=" + std::to_string(cap.dim())});
  rep.checks.push_back({"dims_add", nspan.dim() + sspan.dim() == n,
                        std::to_string(nspan.dim()) + "+" + std::to_string(sspan.dim()) + " vs " +
                            std::to_string(n)});
  if (closed) {
    const Subspace srad = radical(restrict_to(a, sspan));
    rep.checks.push_back({"s_semisimple", srad.is_zero(), "dim rad(S)=" + std::to_string(srad.dim())});
  } else {
    rep.checks.push_back({"s_semisimple", false, "S is not closed under products"});
  }
  return rep;
}

struct CommSubalgebraReport {
  std::size_t claimed_dim = 0;
  std::size_t found_dim = 0;
  Subspace witness;
  bool upper_bound_proved = false;
};

/// Candidate pool for the commutative-subalgebra search: basis vectors, all
/// 0/+-1 vectors with at most two nonzero coordinates, and 50 seeded random
/// vectors with entries in {-2,-1,0,1,2,1/2}.
inline std::vector<Element> commutative_search_pool(std::size_t n, std::uint64_t seed) {
  std::vector<Element> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(basis_vector(n, i));
  for (std::size_t i = 0; i < n; ++i) pool.push_back(scale(basis_vector(n, i), Scalar(-1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Element v = zero_element(n);
          v[i] = Scalar(si);
          v[j] = Scalar(sj);
          pool.push_back(std::move(v));
        }
  static const Scalar entries[] = {Scalar(-2), Scalar(-1), Scalar(0),
                                   Scalar(1),  Scalar(2),  Scalar::fraction(1, 2)};
  seeded_rng rng(seed);
  for (int t = 0; t < 50; ++t) {
    Element v(n);
    for (auto& x : v) x = entries[rng.below(6)];
    pool.push_back(std::move(v));
  }
  return pool;
}

/// Constructive search for a large commutative subalgebra. Lower bounds come
/// with a witness; the upper bound is reported only when forced (found = n,
/// or found = n - 1 in a noncommutative algebra).
inline CommSubalgebraReport max_commutative_subalgebra(const Algebra& a, std::size_t claimed,
                                                       std::uint64_t seed = 0,
                                                       std::size_t node_budget = 4000) {
  const std::size_t n = a.dim();
  const bool commutative = is_commutative(a);
  CommSubalgebraReport rep;
  rep.claimed_dim = claimed;
  if (commutative) {
    rep.found_dim = n;
    rep.witness = full_space(a);
    rep.upper_bound_proved = true;
    return rep;
  }
  const auto pool = commutative_search_pool(n, seed);
  const std::size_t ceiling = n - 1;  // noncommutative: A itself is excluded
  rep.witness = center(a);
  rep.found_dim = rep.witness.dim();

  std::set<std::string> visited;
  std::vector<Subspace> stack{Subspace(n), center(a)};
  std::size_t nodes = 0;
  while (!stack.empty() && nodes < node_budget && rep.found_dim < ceiling) {
    Subspace s = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(s.to_string()).second) continue;
    ++nodes;
    if (s.dim() > rep.found_dim) {
      rep.found_dim = s.dim();
      rep.witness = s;
      if (rep.found_dim >= ceiling) break;
    }
    const Subspace cent = centralizer(a, s);
    if (cent == s) continue;  // inclusion-maximal
    std::vector<Element> cands = cent.basis();
    for (const auto& p : pool)
      if (cent.contains(p)) cands.push_back(p);
    std::vector<Subspace> children;
    for (const auto& y : cands) {
      if (s.contains(y)) continue;
      auto gens = s.basis();
      gens.push_back(y);
      Subspace t = generated_subalgebra(a, gens);
      if (!visited.contains(t.to_string())) children.push_back(std::move(t));
    }
    // Larger children are explored first (pushed last).
    std::stable_sort(children.begin(), children.end(),
                     [](const Subspace& x, const Subspace& y) { return x.dim() < y.dim(); });
    for (auto& c : children) stack.push_back(std::move(c));
  }
  rep.upper_bound_proved = rep.found_dim == ceiling;
  return rep;
}

inline std::string dims_to_string(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

/// Ordered tuple of basis-change invariants.
struct Fingerprint {
  std::size_t dim = 0;
  bool commutative = false;
  bool unital = false;
  std::optional<std::size_t> nilpotency_index;
  std::vector<std::size_t> power_dims;  // dims of A^2, A^3, A^4
  std::size_t dim_left_ann = 0;
  std::size_t dim_right_ann = 0;
  std::size_t dim_two_sided_ann = 0;
  std::size_t dim_center = 0;
  std::size_t dim_radical = 0;
  std::vector<std::size_t> radical_power_dims;
  std::size_t dim_commutator_span = 0;
  std::size_t trace_form_rank = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  /// (name, value) pairs in field order.
  std::vector<std::pair<std::string, std::string>> fields() const {
    auto b = [](bool v) { return std::string(v ? "yes" : "no"); };
    auto z = [](std::size_t v) { return std::to_string(v); };
    return {
        {"dim", z(dim)},
        {"commutative", b(commutative)},
        {"unital", b(unital)},
        {"nilpotency_index", nilpotency_index ? z(*nilpotency_index) : "none"},
        {"power_dims", dims_to_string(power_dims)},
        {"dim_left_ann", z(dim_left_ann)},
        {"dim_right_ann", z(dim_right_ann)},
        {"dim_two_sided_ann", z(dim_two_sided_ann)},
        {"dim_center", z(dim_center)},
        {"dim_radical", z(dim_radical)},
        {"radical_power_dims", dims_to_string(radical_power_dims)},
        {"dim_commutator_span", z(dim_commutator_span)},
        {"trace_form_rank", z(trace_form_rank)},
    };
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [k, v] : fields()) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
  }
};

/// Name of the first field in which two fingerprints differ.
inline std::optional<std::string> first_difference(const Fingerprint& x, const Fingerprint& y) {
  auto fx = x.fields(), fy = y.fields();
  for (std::size_t i = 0; i < fx.size(); ++i)
    if (fx[i].second != fy[i].second) return fx[i].first;
  return std::nullopt;
}

inline Subspace commutator_span(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Element> v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v.push_back(sub(a.basis_product(i, j), a.basis_product(j, i)));
  return Subspace::span(n, v);
}

inline Fingerprint fingerprint(const Algebra& a) {
  Fingerprint f;
  f.dim = a.dim();
  f.commutative = is_commutative(a);
  f.unital = find_unit(a).has_value();
  f.nilpotency_index = nilpotency_index(a);
  const Subspace whole = full_space(a);
  Subspace p = whole;
  for (int k = 2; k <= 4; ++k) {
    p = subspace_product(a, whole, p);
    f.power_dims.push_back(p.dim());
  }
  f.dim_left_ann = left_annihilator(a).dim();
  f.dim_right_ann = right_annihilator(a).dim();
  f.dim_two_sided_ann = two_sided_annihilator(a).dim();
  f.dim_center = center(a).dim();
  const Subspace rad = radical(a);
  f.dim_radical = rad.dim();
  f.radical_power_dims = dims_of(power_chain(restrict_to(a, rad)));
  f.dim_commutator_span = commutator_span(a).dim();
  f.trace_form_rank = rank(trace_form(a));
  return f;
}

}  // namespace assocalg
