#pragma once

// Table audit driven by the brute-force oracle: for every catalog entry and
// standard sample, recompute the claimed cells from definitions and list the
// cells that disagree. dim C has no oracle decision procedure; a library
// witness larger than the claim is accepted only after the oracle re-checks it.

#include <string>
#include <vector>

#include "assocalg/assocalg.hpp"
#include "oracle.hpp"

namespace oracle {

struct Mismatch {
  std::string subject;
  std::string entry_id;
  std::string check;
  std::string claimed;
  std::string computed;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

inline std::vector<Mismatch> audit_sample(const assocalg::CatalogEntry& e, const assocalg::Assignment& env) {
  using namespace assocalg;
  const Algebra a = instantiate(e, env);
  const Tensor t = from_algebra(a);
  const std::string subject = subject_name(e, env);
  const auto& c = e.claimed;
  std::vector<Mismatch> out;
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  auto cmp_flag = [&](const char* name, bool claimed, bool computed) {
    if (claimed != computed) out.push_back({subject, e.id, name, yn(claimed), yn(computed)});
  };
  auto cmp_dim = [&](const char* name, std::size_t claimed, std::size_t computed) {
    if (claimed != computed) out.push_back({subject, e.id, name, std::to_string(claimed), std::to_string(computed)});
  };
  const bool comm = commutative(t);
  cmp_flag("commutative", c.commutative, comm);
  cmp_flag("unital", c.unital, unital(t));
  cmp_flag("nilpotent", c.nilpotent, nilpotent(t));
  cmp_dim("dim_L", c.dim_L, dim_left_annihilator(t));
  cmp_dim("dim_R", c.dim_R, dim_right_annihilator(t));
  if (comm) {
    cmp_dim("dim_C", c.dim_C, t.n);
  } else {
    auto rep = max_commutative_subalgebra(a, c.dim_C, derive_seed(0, subject + "/dim_C"));
    std::vector<Row> rows;
    for (const auto& v : rep.witness.basis()) {
      Row r;
      for (const auto& x : v) r.push_back(x.re());
      rows.push_back(r);
    }
    const bool valid = rows.empty() || is_commutative_subalgebra(t, rows);
    if (!valid) out.push_back({subject, e.id, "dim_C", std::to_string(c.dim_C), "invalid witness"});
    else if (rep.found_dim > c.dim_C || c.dim_C >= t.n)
      out.push_back({subject, e.id, "dim_C", std::to_string(c.dim_C), std::to_string(rep.found_dim)});
  }
  if (c.wedderburn) cmp_dim("wedderburn_N", c.wedderburn->n_span.size(), dim_radical(t));
  return out;
}

inline std::vector<Mismatch> audit_catalog() {
  std::vector<Mismatch> out;
  for (const auto& e : assocalg::builtin_catalog())
    for (const auto& env : assocalg::standard_samples(e)) {
      auto m = audit_sample(e, env);
      out.insert(out.end(), m.begin(), m.end());
    }
  return out;
}

}  // namespace oracle
