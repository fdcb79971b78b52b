#pragma once

// The classification tables as data, and the harness that recomputes them:
// per-entry verification reports, fingerprint separation, decomposable
// algebras and table emission.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assocalg/algebra.hpp"
#include "assocalg/catalog_data.hpp"
#include "assocalg/expr.hpp"
#include "assocalg/invariants.hpp"
#include "assocalg/morphisms.hpp"

namespace assocalg {

struct ParamSpec {
  std::string name;
  std::vector<Scalar> excluded;
  friend bool operator==(const ParamSpec&, const ParamSpec&) = default;
};

struct ProductTemplate {
  std::size_t i = 0, j = 0, k = 0;  // 1-based
  Expr coeff;
  friend bool operator==(const ProductTemplate&, const ProductTemplate&) = default;
};

struct ClaimedInvariants {
  bool commutative = false;
  bool unital = false;
  bool nilpotent = false;
  std::size_t dim_C = 0, dim_L = 0, dim_R = 0;
  std::optional<WedderburnClaim> wedderburn;
  friend bool operator==(const ClaimedInvariants&, const ClaimedInvariants&) = default;
};

struct CatalogEntry {
  std::string id;
  std::size_t dim = 0;
  std::string source;
  std::vector<ParamSpec> params;
  std::vector<ProductTemplate> products;
  ClaimedInvariants claimed;
  std::vector<AutFamilyTemplate> aut_families;
  std::vector<std::string> notes;

  bool parametrized() const { return !params.empty(); }
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// ------------------------------------------------------------- text format

namespace detail {

inline std::vector<std::size_t> parse_index_list(std::string_view s, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    out.push_back(parse_index(s.substr(pos, comma - pos), line_no));
    pos = comma + 1;
  }
  return out;
}

inline bool parse_yes_no(std::string_view v, std::size_t line_no) {
  if (v == "yes") return true;
  if (v == "no") return false;
  throw parse_error("line " + std::to_string(line_no) + ": expected yes/no, got '" + std::string(v) + "'");
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x = 0; x < v.size(); ++x) s += (x ? "," : "") + std::to_string(v[x]);
  return s;
}

}  // namespace detail

inline constexpr std::string_view catalog_header = "assocalg-catalog v1";

inline std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> entries;
  std::set<std::string> ids;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  CatalogEntry* cur = nullptr;
  std::optional<AutFamilyTemplate> fam;
  auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
  auto need_entry = [&] {
    if (!cur) throw parse_error(where() + "directive outside an entry");
  };

  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != catalog_header)
        throw parse_error(where() + "expected header '" + std::string(catalog_header) + "'");
      header_seen = true;
      continue;
    }
    auto words = detail::split_ws(line);
    const std::string& key = words.front();

    if (fam) {
      if (key == "end") {
        if (fam->entries.size() != fam->dim)
          throw parse_error(where() + "automorphism family has " + std::to_string(fam->entries.size()) +
                            " rows, expected " + std::to_string(fam->dim));
        cur->aut_families.push_back(std::move(*fam));
        fam.reset();
      } else if (key == "note") {
        fam->notes.emplace_back(detail::trim(line.substr(4)));
      } else if (key == "nonzero") {
        fam->constraints.push_back(Expr::parse(line.substr(7)));
      } else {
        if (words.size() != fam->dim)
          throw parse_error(where() + "matrix row has " + std::to_string(words.size()) + " cells, expected " +
                            std::to_string(fam->dim));
        std::vector<Expr> row;
        for (const auto& w : words) row.push_back(Expr::parse(w));
        fam->entries.push_back(std::move(row));
      }
      continue;
    }

    if (key == "entry") {
      if (words.size() != 2) throw parse_error(where() + "expected 'entry <id>'");
      if (!ids.insert(words[1]).second) throw parse_error(where() + "duplicate entry id " + words[1]);
      entries.emplace_back();
      cur = &entries.back();
      cur->id = words[1];
    } else if (key == "dim") {
      need_entry();
      cur->dim = detail::parse_index(line.substr(3), line_no);
    } else if (key == "source") {
      need_entry();
      cur->source = std::string(detail::trim(line.substr(6)));
    } else if (key == "note") {
      need_entry();
      cur->notes.emplace_back(detail::trim(line.substr(4)));
    } else if (key == "param") {
      need_entry();
      if (words.size() < 2) throw parse_error(where() + "expected 'param <name>'");
      ParamSpec p{words[1], {}};
      for (std::size_t w = 2; w < words.size(); ++w) {
        if (!words[w].starts_with("exclude=")) throw parse_error(where() + "unknown param option " + words[w]);
        std::string_view vals = std::string_view(words[w]).substr(8);
        std::size_t pos = 0;
        while (pos <= vals.size()) {
          auto comma = vals.find(',', pos);
          if (comma == std::string_view::npos) comma = vals.size();
          p.excluded.push_back(parse_scalar(vals.substr(pos, comma - pos)));
          pos = comma + 1;
        }
      }
      cur->params.push_back(std::move(p));
    } else if (key == "claimed") {
      need_entry();
      for (std::size_t w = 1; w < words.size(); ++w) {
        auto eq = words[w].find('=');
        if (eq == std::string::npos) throw parse_error(where() + "expected key=value, got " + words[w]);
        std::string k = words[w].substr(0, eq);
        std::string_view v = std::string_view(words[w]).substr(eq + 1);
        if (k == "commutative") cur->claimed.commutative = detail::parse_yes_no(v, line_no);
        else if (k == "unital") cur->claimed.unital = detail::parse_yes_no(v, line_no);
        else if (k == "nilpotent") cur->claimed.nilpotent = detail::parse_yes_no(v, line_no);
        else if (k == "dim_C") cur->claimed.dim_C = detail::parse_index(v, line_no);
        else if (k == "dim_L") cur->claimed.dim_L = detail::parse_index(v, line_no);
        else if (k == "dim_R") cur->claimed.dim_R = detail::parse_index(v, line_no);
        else throw parse_error(where() + "unknown claimed key " + k);
      }
    } else if (key == "wedderburn") {
      need_entry();
      WedderburnClaim w;
      for (std::size_t x = 1; x < words.size(); ++x) {
        std::string_view tok = words[x];
        if (tok.starts_with("N=")) w.n_span = detail::parse_index_list(tok.substr(2), line_no);
        else if (tok.starts_with("S=")) w.s_span = detail::parse_index_list(tok.substr(2), line_no);
        else throw parse_error(where() + "expected N=... or S=...");
      }
      cur->claimed.wedderburn = std::move(w);
    } else if (key == "autfamily") {
      need_entry();
      fam.emplace();
      fam->dim = cur->dim;
      for (std::size_t w = 1; w < words.size(); ++w) {
        if (!words[w].starts_with("corrects=")) throw parse_error(where() + "unknown autfamily option " + words[w]);
        fam->corrects = detail::parse_index(std::string_view(words[w]).substr(9), line_no);
      }
    } else if (auto p = detail::split_product_line(line, line_no)) {
      need_entry();
      if (p->i < 1 || p->j < 1 || p->k < 1 || p->i > cur->dim || p->j > cur->dim || p->k > cur->dim)
        throw parse_error(where() + "product index outside 1.." + std::to_string(cur->dim));
      cur->products.push_back({p->i, p->j, p->k, Expr::parse(p->coeff)});
    } else {
      throw parse_error(where() + "unrecognized '" + std::string(line) + "'");
    }
  }
  if (fam) throw parse_error("unterminated autfamily block");
  if (!header_seen) throw parse_error("missing header '" + std::string(catalog_header) + "'");
  return entries;
}

inline std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << catalog_header << '\n';
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& e : entries) {
    os << "\nentry " << e.id << '\n' << "dim " << e.dim << '\n';
    if (!e.source.empty()) os << "source " << e.source << '\n';
    for (const auto& n : e.notes) os << "note " << n << '\n';
    for (const auto& p : e.params) {
      os << "param " << p.name;
      if (!p.excluded.empty()) {
        os << " exclude=";
        for (std::size_t x = 0; x < p.excluded.size(); ++x) os << (x ? "," : "") << p.excluded[x];
      }
      os << '\n';
    }
    for (const auto& p : e.products) os << p.i << ' ' << p.j << " -> " << p.k << " : " << p.coeff.source() << '\n';
    const auto& c = e.claimed;
    os << "claimed commutative=" << yn(c.commutative) << " unital=" << yn(c.unital) << " nilpotent=" << yn(c.nilpotent)
       << " dim_C=" << c.dim_C << " dim_L=" << c.dim_L << " dim_R=" << c.dim_R << '\n';
    if (c.wedderburn)
      os << "wedderburn N=" << detail::join_indices(c.wedderburn->n_span)
         << " S=" << detail::join_indices(c.wedderburn->s_span) << '\n';
    for (const auto& f : e.aut_families) {
      os << "autfamily";
      if (f.corrects) os << " corrects=" << *f.corrects;
      os << '\n';
      for (const auto& row : f.entries) {
        os << " ";
        for (const auto& x : row) os << ' ' << x.source();
        os << '\n';
      }
      for (const auto& x : f.constraints) os << "  nonzero " << x.source() << '\n';
      for (const auto& n : f.notes) os << "  note " << n << '\n';
      os << "end\n";
    }
  }
  return os.str();
}

inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(data::builtin_catalog_text);
  return entries;
}

inline const CatalogEntry& find_entry(std::string_view id) {
  for (const auto& e : builtin_catalog())
    if (e.id == id) return e;
  throw unknown_entry("no catalog entry named '" + std::string(id) + "'");
}

inline std::vector<const CatalogEntry*> entries_of_dim(std::optional<std::size_t> dim) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : builtin_catalog())
    if (!dim || e.dim == *dim) out.push_back(&e);
  return out;
}

// ---------------------------------------------------------- instantiation

/// alpha samples: 0, a generic integer, a negative and a non-integer.
inline std::vector<Scalar> standard_alpha_values() {
  return {Scalar(0), Scalar(2), Scalar(-1), Scalar::fraction(1, 2)};
}

inline std::vector<Assignment> standard_samples(const CatalogEntry& e) {
  if (!e.parametrized()) return {Assignment{}};
  std::vector<Assignment> out;
  for (const auto& v : standard_alpha_values()) {
    Assignment env;
    bool ok = true;
    for (const auto& p : e.params) {
      if (std::find(p.excluded.begin(), p.excluded.end(), v) != p.excluded.end()) ok = false;
      env[p.name] = v;
    }
    if (ok) out.push_back(std::move(env));
  }
  return out;
}

/// `As_3_2` or `As_3_2[alpha=2]`.
inline std::string subject_name(const CatalogEntry& e, const Assignment& env) {
  if (env.empty()) return e.id;
  return e.id + "[" + assignment_to_string(env) + "]";
}

inline Algebra instantiate(const CatalogEntry& e, const Assignment& env) {
  for (const auto& [k, v] : env)
    if (std::none_of(e.params.begin(), e.params.end(), [&](const ParamSpec& p) { return p.name == k; }))
      throw unbound_parameter(e.id + " has no parameter '" + k + "'");
  for (const auto& p : e.params) {
    auto it = env.find(p.name);
    if (it == env.end()) throw unbound_parameter(e.id + " needs a value for '" + p.name + "'");
    if (std::find(p.excluded.begin(), p.excluded.end(), it->second) != p.excluded.end())
      throw excluded_parameter(e.id + ": " + p.name + "=" + it->second.to_string() + " is excluded");
  }
  std::vector<Product> prods;
  for (const auto& p : e.products) {
    Scalar v = p.coeff.eval(env);
    if (!v.is_zero()) prods.push_back({p.i, p.j, p.k, v});
  }
  Algebra a = make_algebra(e.dim, prods, subject_name(e, env));
  auto assoc = is_associative(a);
  if (!assoc.associative) {
    auto [i, j, k] = *assoc.triple;
    throw associativity_failure(subject_name(e, env) + " is not associative at (e" + std::to_string(i) + "e" +
                                std::to_string(j) + ")e" + std::to_string(k));
  }
  return a;
}

/// `As_4_16:alpha=2` (extra `name=value` pairs separated by commas).
inline std::pair<const CatalogEntry*, Assignment> parse_instance_spec(std::string_view spec) {
  auto colon = spec.find(':');
  const CatalogEntry& e = find_entry(spec.substr(0, colon));
  Assignment env;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string_view::npos) comma = rest.size();
      auto kv = rest.substr(pos, comma - pos);
      auto eq = kv.find('=');
      if (eq == std::string_view::npos) throw parse_error("expected NAME=VALUE in '" + std::string(kv) + "'");
      env[std::string(kv.substr(0, eq))] = parse_scalar(kv.substr(eq + 1));
      pos = comma + 1;
    }
  }
  return {&e, env};
}

// ------------------------------------------------------------ verification

enum class Status { pass, fail, discrepancy, lower_bound_only };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::discrepancy: return "DISCREPANCY";
    case Status::lower_bound_only: return "LOWER_BOUND_ONLY";
  }
  return "?";
}

struct ReportLine {
  std::string subject;
  std::string check;
  Status status = Status::pass;
  std::string details;
};

enum class Overall { pass, pass_with_notes, discrepancy };

inline std::string_view overall_name(Overall o) {
  switch (o) {
    case Overall::pass: return "PASS";
    case Overall::pass_with_notes: return "PASS_WITH_NOTES";
    case Overall::discrepancy: return "DISCREPANCY";
  }
  return "?";
}

struct VerificationReport {
  std::string id;
  std::vector<ReportLine> lines;
  std::vector<std::string> notes;  // entry-level and family transcription notes

  Overall overall() const {
    bool noted = !notes.empty();
    for (const auto& l : lines) {
      if (l.status == Status::discrepancy) return Overall::discrepancy;
      if (l.status != Status::pass) noted = true;
    }
    return noted ? Overall::pass_with_notes : Overall::pass;
  }
  bool has(std::string_view check, Status s) const {
    return std::any_of(lines.begin(), lines.end(),
                       [&](const ReportLine& l) { return l.check == check && l.status == s; });
  }
};

struct VerifyOptions {
  std::size_t family_samples = 3;
  std::uint64_t seed = 0;
  std::optional<std::vector<Assignment>> param_samples;  // default: standard samples
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string family_label(const AutFamilyTemplate& f, std::size_t index) {
  std::string s = "aut.F" + std::to_string(index + 1);
  if (f.corrects) s += "(fixes F" + std::to_string(*f.corrects) + ")";
  return s;
}

namespace detail {

inline std::string first_asymmetric_pair(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i))
        return "e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + "=" +
               element_to_string(a.basis_product(i, j)) + " but e" + std::to_string(j + 1) + "e" +
               std::to_string(i + 1) + "=" + element_to_string(a.basis_product(j, i));
  return "all basis products symmetric";
}

inline void check_sample(const CatalogEntry& e, const Assignment& env, const VerifyOptions& opt,
                         VerificationReport& rep) {
  const std::string subj = subject_name(e, env);
  auto add = [&](std::string check, Status s, std::string details) {
    rep.lines.push_back({subj, std::move(check), s, std::move(details)});
  };
  Algebra a;
  try {
    a = instantiate(e, env);
  } catch (const associativity_failure& ex) {
    add("associativity", Status::discrepancy, ex.what());
    return;
  }
  add("associativity", Status::pass, "all " + std::to_string(a.dim() * a.dim() * a.dim()) + " basis triples");
  const auto& cl = e.claimed;

  const bool comm = is_commutative(a);
  add("commutative", comm == cl.commutative ? Status::pass : Status::discrepancy,
      "claimed=" + yes_no(cl.commutative) + " computed=" + yes_no(comm) + " (" + first_asymmetric_pair(a) + ")");

  auto unit = find_unit(a);
  add("unital", unit.has_value() == cl.unital ? Status::pass : Status::discrepancy,
      "claimed=" + yes_no(cl.unital) + " computed=" + yes_no(unit.has_value()) +
          (unit ? " unit=" + element_to_string(*unit) : std::string(" unit system inconsistent")));

  auto chain = power_chain(a);
  auto idx = nilpotency_index(a);
  add("nilpotent", idx.has_value() == cl.nilpotent ? Status::pass : Status::discrepancy,
      "claimed=" + yes_no(cl.nilpotent) + " computed=" + yes_no(idx.has_value()) +
          (idx ? " index=" + std::to_string(*idx) : std::string()) + " chain=" + dims_to_string(dims_of(chain)));

  auto left = left_annihilator(a);
  add("dim_L", left.dim() == cl.dim_L ? Status::pass : Status::discrepancy,
      "claimed=" + std::to_string(cl.dim_L) + " computed=" + std::to_string(left.dim()) + " L=" + left.to_string());
  auto right = right_annihilator(a);
  add("dim_R", right.dim() == cl.dim_R ? Status::pass : Status::discrepancy,
      "claimed=" + std::to_string(cl.dim_R) + " computed=" + std::to_string(right.dim()) + " R=" + right.to_string());

  auto cs = max_commutative_subalgebra(a, cl.dim_C, derive_seed(opt.seed, subj + "/dim_C"));
  Status cstat;
  std::string bound = cs.upper_bound_proved ? "proved" : "unproved";
  if (cs.found_dim > cl.dim_C) {
    cstat = Status::discrepancy;
  } else if (cl.dim_C == a.dim() && !comm) {
    cstat = Status::discrepancy;  // a noncommutative algebra is not its own commutative subalgebra
    bound = "claimed value impossible: algebra is noncommutative";
  } else if (cs.found_dim == cl.dim_C) {
    cstat = cs.upper_bound_proved ? Status::pass : Status::lower_bound_only;
  } else {
    cstat = Status::fail;
  }
  add("dim_C", cstat,
      "claimed=" + std::to_string(cl.dim_C) + " found=" + std::to_string(cs.found_dim) + " upper_bound=" + bound +
          " witness=" + cs.witness.to_string());

  if (cl.wedderburn) {
    auto w = verify_wedderburn(a, *cl.wedderburn);
    std::string d = "N=<" + join_indices(cl.wedderburn->n_span) + "> S=<" + join_indices(cl.wedderburn->s_span) + ">";
    for (const auto& c : w.checks) d += " " + c.name + "=" + (c.ok ? "ok" : "failed(" + c.detail + ")");
    add("wedderburn", w.all_ok() ? Status::pass : Status::discrepancy, d);
  }

  std::set<std::string> bound_names;
  for (const auto& [k, v] : env) bound_names.insert(k);
  for (std::size_t f = 0; f < e.aut_families.size(); ++f) {
    const auto& fam = e.aut_families[f];
    const std::string label = family_label(fam, f);
    auto fr = verify_family(a, fam, opt.family_samples, derive_seed(opt.seed, subj + "/" + label), env);
    std::string d;
    if (fr.ok()) {
      d = "convention=" + fr.convention + " samples=" + std::to_string(fr.passed) + " closure=ok";
    } else if (!fr.convention.empty()) {
      d = "convention=" + fr.convention + " samples=" + std::to_string(fr.passed) + " closure failed: " + fr.failure;
    } else {
      d = "verified " + std::to_string(fr.passed) + "/" + std::to_string(fr.assignments.size()) +
          " samples under either convention; " + fr.failure;
    }
    for (const auto& n : fam.notes) d += "; note: " + n;
    Status s;
    if (fr.ok())
      s = Status::pass;
    else if (fam.corrects || fr.assignments.empty())
      s = Status::fail;  // our repair or no admissible sample: nothing printed is refuted
    else
      s = Status::discrepancy;
    if (fr.ok() && fr.matrices.size() < opt.family_samples) {
      s = Status::fail;
      d += "; only " + std::to_string(fr.matrices.size()) + " admissible samples";
    }
    add(label, s, d);
  }
}

}  // namespace detail

inline VerificationReport verify_entry(const CatalogEntry& e, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.id = e.id;
  rep.notes = e.notes;
  for (const auto& f : e.aut_families)
    for (const auto& n : f.notes) rep.notes.push_back(n);
  const auto samples = opt.param_samples ? *opt.param_samples : standard_samples(e);
  for (const auto& env : samples) detail::check_sample(e, env, opt, rep);
  return rep;
}

inline std::vector<VerificationReport> verify_all(std::optional<std::size_t> dim, const VerifyOptions& opt = {}) {
  std::vector<VerificationReport> out;
  for (const auto* e : entries_of_dim(dim)) out.push_back(verify_entry(*e, opt));
  return out;
}

enum class ReportFormat { text, records };

namespace detail {

inline std::string quote_record(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string render_reports(const std::vector<VerificationReport>& reports, const VerifyOptions& opt,
                                  ReportFormat fmt = ReportFormat::text) {
  std::ostringstream os;
  std::string alphas;
  for (const auto& v : standard_alpha_values()) alphas += (alphas.empty() ? "" : ",") + v.to_string();
  os << "# assocalg verification report\n";
  os << "# seed=" << opt.seed << " family-samples=" << opt.family_samples << " alpha-samples=" << alphas << '\n';
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : reports) {
    for (const auto& l : r.lines) {
      if (fmt == ReportFormat::text)
        os << l.subject << ' ' << l.check << ' ' << status_name(l.status) << ' ' << l.details << '\n';
      else
        os << "subject=" << l.subject << " check=" << l.check << " status=" << status_name(l.status)
           << " details=" << detail::quote_record(l.details) << '\n';
    }
    const Overall o = r.overall();
    ++counts[static_cast<int>(o)];
    if (fmt == ReportFormat::text)
      os << r.id << " overall " << overall_name(o) << '\n';
    else
      os << "subject=" << r.id << " check=overall status=" << overall_name(o) << '\n';
  }
  os << "# entries=" << reports.size() << " pass=" << counts[0] << " pass_with_notes=" << counts[1]
     << " discrepancy=" << counts[2] << '\n';
  return os.str();
}

// -------------------------------------------------------------- separation

struct SeparationUnit {
  std::string subject;
  std::string entry_id;
  Fingerprint fp;
};

struct SeparationReport {
  std::size_t dim = 0;
  std::size_t pairs = 0;
  std::size_t separated = 0;
  std::vector<std::pair<std::string, std::string>> unseparated;      // different entries
  std::vector<std::pair<std::string, std::string>> same_entry_ties;  // samples of one family
  double percent() const { return pairs ? 100.0 * static_cast<double>(separated) / static_cast<double>(pairs) : 100.0; }
};

inline std::vector<SeparationUnit> separation_units(std::size_t dim) {
  std::vector<SeparationUnit> units;
  for (const auto* e : entries_of_dim(dim))
    for (const auto& env : standard_samples(*e))
      units.push_back({subject_name(*e, env), e->id, fingerprint(instantiate(*e, env))});
  return units;
}

/// Pairwise fingerprint comparison over all sampled algebras of one
/// dimension. Pairs drawn from the same entry are listed apart and do not
/// count toward the separation rate.
inline SeparationReport separation_matrix(std::size_t dim) {
  SeparationReport rep;
  rep.dim = dim;
  const auto units = separation_units(dim);
  for (std::size_t x = 0; x < units.size(); ++x)
    for (std::size_t y = x + 1; y < units.size(); ++y) {
      const bool same = units[x].fp == units[y].fp;
      if (units[x].entry_id == units[y].entry_id) {
        if (same) rep.same_entry_ties.emplace_back(units[x].subject, units[y].subject);
        continue;
      }
      ++rep.pairs;
      if (same)
        rep.unseparated.emplace_back(units[x].subject, units[y].subject);
      else
        ++rep.separated;
    }
  return rep;
}

inline std::string render_separation(const SeparationReport& r) {
  std::ostringstream os;
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.2f", r.percent());
  os << "dim " << r.dim << " separated " << r.separated << "/" << r.pairs << " (" << pct << "%)\n";
  for (const auto& [a, b] : r.unseparated) os << "unseparated " << a << " " << b << '\n';
  for (const auto& [a, b] : r.same_entry_ties) os << "same-entry-tie " << a << " " << b << '\n';
  return os.str();
}

// ----------------------------------------------------------- decomposables

/// The zero algebra and the field e1e1 = e1.
inline std::vector<Algebra> one_dim_algebras() {
  return {make_algebra(1, {}, "Z1"), make_algebra(1, {{1, 1, 1, Scalar(1)}}, "F1")};
}

struct Decomposable {
  std::string label;
  Algebra algebra;
  std::vector<Algebra> summands;
};

/// Direct sums of at least two indecomposable pieces with total dimension
/// `dim`, as unordered multisets. Pieces: the two 1-dim algebras and the
/// catalog entries of smaller dimension at their standard samples.
inline std::vector<Decomposable> generate_decomposables(std::size_t dim) {
  if (dim < 2 || dim > 4) throw index_out_of_range("decomposables are generated for dim 2..4");
  std::vector<Algebra> pieces = one_dim_algebras();
  for (const auto& e : builtin_catalog())
    if (e.dim < dim)
      for (const auto& env : standard_samples(e)) pieces.push_back(instantiate(e, env));
  std::vector<Decomposable> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t remaining) {
    if (remaining == 0) {
      if (pick.size() < 2) return;
      Decomposable d;
      d.algebra = Algebra(0);
      for (auto p : pick) {
        d.summands.push_back(pieces[p]);
        d.algebra = direct_sum(d.algebra, pieces[p]);
        d.label += (d.label.empty() ? "" : "+") + pieces[p].label();
      }
      d.algebra.set_label(d.label);
      out.push_back(std::move(d));
      return;
    }
    for (std::size_t p = from; p < pieces.size(); ++p) {
      if (pieces[p].dim() > remaining) continue;
      pick.push_back(p);
      rec(p, remaining - pieces[p].dim());
      pick.pop_back();
    }
  };
  rec(0, dim);
  return out;
}

// --------------------------------------------------------------- tables

enum class TableFormat { markdown, csv };

namespace detail {

inline std::string product_text(const Algebra& a) {
  std::string s;
  for (const auto& p : nonzero_products(a)) {
    std::string lhs = "e" + std::to_string(p.i) + "e" + std::to_string(p.j) + "=";
    std::string target = "e" + std::to_string(p.k);
    std::string c;
    if (p.coeff.is_one()) c = target;
    else if (p.coeff == Scalar(-1)) c = "-" + target;
    else c = p.coeff.to_string() + "*" + target;
    s += (s.empty() ? "" : ", ") + lhs + c;
  }
  return s.empty() ? "0" : s;
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

/// Recomputed invariant columns of one dimension's table. dim C carries a
/// `>=` marker when only the lower bound is certified.
inline std::string emit_table(std::size_t dim, TableFormat fmt, std::uint64_t seed = 0) {
  std::ostringstream os;
  if (fmt == TableFormat::markdown) {
    os << "| algebra | products | type | dim C | dim L | dim R |\n";
    os << "|---|---|---|---|---|---|\n";
  } else {
    os << "algebra,products,type,dim_C,dim_L,dim_R\n";
  }
  for (const auto* e : entries_of_dim(dim))
    for (const auto& env : standard_samples(*e)) {
      const std::string subj = subject_name(*e, env);
      Algebra a = instantiate(*e, env);
      std::vector<std::string> type;
      if (is_commutative(a)) type.push_back("commutative");
      if (find_unit(a)) type.push_back("unitary");
      if (auto k = nilpotency_index(a)) {
        type.push_back("nilpotent(index " + std::to_string(*k) + ")");
      } else {
        type.push_back("dim N=" + std::to_string(radical(a).dim()));
      }
      std::string t;
      for (const auto& x : type) t += (t.empty() ? "" : ", ") + x;
      auto cs = max_commutative_subalgebra(a, e->claimed.dim_C, derive_seed(seed, subj + "/dim_C"));
      std::string c = (cs.upper_bound_proved ? "" : ">=") + std::to_string(cs.found_dim);
      std::vector<std::string> row = {subj, detail::product_text(a), t, c,
                                      std::to_string(left_annihilator(a).dim()),
                                      std::to_string(right_annihilator(a).dim())};
      if (fmt == TableFormat::markdown) {
        os << "|";
        for (const auto& x : row) os << ' ' << x << " |";
        os << '\n';
      } else {
        for (std::size_t x = 0; x < row.size(); ++x) os << (x ? "," : "") << detail::csv_cell(row[x]);
        os << '\n';
      }
    }
  return os.str();
}

}  // namespace assocalg
