// Command-line front end: verify-catalog, invariants, compare, check-hom,
// table, dump, separation.
//
// Exit codes: 0 clean, 1 usage or internal error, 2 mathematical
// discrepancy or refutation.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "assocalg/assocalg.hpp"

namespace {

using namespace assocalg;

constexpr int exit_clean = 0;
constexpr int exit_usage = 1;
constexpr int exit_refuted = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<std::size_t> dim;
  std::vector<std::string> params;
  std::size_t samples = 3;
  std::uint64_t seed = 0;
  std::string format;
  std::string out;
  std::size_t budget = 2000;
  std::vector<std::string> ids;
  std::string a, b, matrix_file;
};

Assignment parse_params(const std::vector<std::string>& raw) {
  Assignment env;
  for (const auto& p : raw) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw usage_error("--param expects NAME=VALUE, got '" + p + "'");
    auto v = try_parse_scalar(p.substr(eq + 1));
    if (!v) throw usage_error("malformed scalar in --param '" + p + "'");
    env[p.substr(0, eq)] = *v;
  }
  return env;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A catalog id (optionally `Id:name=value`) or the path of an algebra file.
Algebra load_algebra(const std::string& spec, const Assignment& defaults) {
  if (std::filesystem::is_regular_file(spec)) return parse_algebra(read_file(spec));
  auto [entry, env] = parse_instance_spec(spec);
  for (const auto& p : entry->params)
    if (!env.contains(p.name)) {
      auto it = defaults.find(p.name);
      if (it == defaults.end())
        throw usage_error(entry->id + " is a family; pass " + p.name + " via --param or " + entry->id + ":" +
                          p.name + "=VALUE");
      env[p.name] = it->second;
    }
  return instantiate(*entry, env);
}

void validate_dim(const Config& c) {
  if (c.dim && (*c.dim < 2 || *c.dim > 4)) throw usage_error("--dim must be 2, 3 or 4");
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw usage_error("cannot write '" + c.out + "'");
  f << text;
}

int cmd_verify_catalog(const Config& c) {
  validate_dim(c);
  if (!c.format.empty() && c.format != "text" && c.format != "records")
    throw usage_error("verify-catalog supports --format text|records");
  VerifyOptions opt;
  opt.family_samples = c.samples;
  opt.seed = c.seed;
  std::vector<VerificationReport> reports;
  if (!c.ids.empty()) {
    for (const auto& id : c.ids) {
      auto [entry, env] = parse_instance_spec(id);
      if (!env.empty()) opt.param_samples = std::vector<Assignment>{env};
      reports.push_back(verify_entry(*entry, opt));
      opt.param_samples.reset();
    }
  } else {
    reports = verify_all(c.dim, opt);
  }
  emit(c, render_reports(reports, opt, c.format == "records" ? ReportFormat::records : ReportFormat::text));
  for (const auto& r : reports)
    if (r.overall() == Overall::discrepancy) return exit_refuted;
  return exit_clean;
}

int cmd_invariants(const Config& c) {
  Algebra a = load_algebra(c.a, parse_params(c.params));
  const bool records = c.format == "records";
  if (!c.format.empty() && c.format != "text" && !records)
    throw usage_error("invariants supports --format text|records");
  std::ostringstream os;
  auto put = [&](const std::string& k, const std::string& v) {
    if (records)
      os << k << '=' << v << '\n';
    else
      os << k << ": " << v << '\n';
  };
  put("algebra", a.label().empty() ? c.a : a.label());
  auto fp = fingerprint(a);
  for (const auto& [k, v] : fp.fields()) put(k, v);
  put("power_chain", dims_to_string(dims_of(power_chain(a))));
  put("left_annihilator", left_annihilator(a).to_string());
  put("right_annihilator", right_annihilator(a).to_string());
  put("two_sided_annihilator", two_sided_annihilator(a).to_string());
  put("center", center(a).to_string());
  auto u = find_unit(a);
  put("unit", u ? element_to_string(*u) : "none");
  put("radical", radical(a).to_string());
  std::size_t claimed = fp.commutative ? a.dim() : (a.dim() ? a.dim() - 1 : 0);
  auto cs = max_commutative_subalgebra(a, claimed, derive_seed(c.seed, "invariants/dim_C"));
  put("dim_C", (cs.upper_bound_proved ? "" : ">=") + std::to_string(cs.found_dim));
  put("commutative_subalgebra", cs.witness.to_string());
  emit(c, os.str());
  return exit_clean;
}

int cmd_compare(const Config& c) {
  const auto defaults = parse_params(c.params);
  Algebra a = load_algebra(c.a, defaults);
  Algebra b = load_algebra(c.b, defaults);
  std::ostringstream os;
  if (a.dim() != b.dim()) {
    os << "DISTINGUISHED dim " << a.dim() << " vs " << b.dim() << '\n';
  } else {
    auto fa = fingerprint(a), fb = fingerprint(b);
    if (auto field = first_difference(fa, fb)) {
      std::string va, vb;
      for (const auto& [k, v] : fa.fields())
        if (k == *field) va = v;
      for (const auto& [k, v] : fb.fields())
        if (k == *field) vb = v;
      os << "DISTINGUISHED " << *field << " " << va << " vs " << vb << '\n';
    } else {
      IsoSearchOptions opt;
      opt.budget = c.budget;
      opt.seed = c.seed;
      if (auto m = search_isomorphism(a, b, opt)) {
        os << "ISOMORPHIC\n" << serialize_matrix(*m);
      } else {
        os << "UNDECIDED fingerprints agree; no certificate within budget " << c.budget << '\n';
      }
    }
  }
  emit(c, os.str());
  return exit_clean;
}

int cmd_check_hom(const Config& c) {
  const auto defaults = parse_params(c.params);
  Algebra a = load_algebra(c.a, defaults);
  Algebra b = load_algebra(c.b, defaults);
  Matrix m = parse_matrix(read_file(c.matrix_file));
  if (m.rows() != b.dim() || m.cols() != a.dim())
    throw usage_error("matrix must be " + std::to_string(b.dim()) + "x" + std::to_string(a.dim()));
  auto r = is_homomorphism(a, b, m);
  std::ostringstream os;
  int code = exit_clean;
  if (r.ok) {
    os << (a.dim() == b.dim() && invert(m) ? "ISOMORPHISM" : "HOMOMORPHISM") << '\n';
  } else {
    const auto& w = *r.witness;
    os << "NOT_A_HOMOMORPHISM at (" << w.i << "," << w.j << "): " << describe(r) << '\n';
    code = exit_refuted;
  }
  emit(c, os.str());
  return code;
}

int cmd_table(const Config& c) {
  if (!c.dim) throw usage_error("table needs --dim");
  validate_dim(c);
  TableFormat fmt = TableFormat::markdown;
  if (c.format == "csv")
    fmt = TableFormat::csv;
  else if (!c.format.empty() && c.format != "md")
    throw usage_error("table supports --format md|csv");
  emit(c, emit_table(*c.dim, fmt, c.seed));
  return exit_clean;
}

int cmd_dump(const Config& c) {
  emit(c, serialize_algebra(load_algebra(c.a, parse_params(c.params))));
  return exit_clean;
}

int cmd_separation(const Config& c) {
  validate_dim(c);
  std::string text;
  for (std::size_t d = 2; d <= 4; ++d)
    if (!c.dim || *c.dim == d) text += render_separation(separation_matrix(d));
  emit(c, text);
  return exit_clean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of low-dimensional associative algebra tables"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--param", cfg.params, "Parameter value NAME=VALUE (repeatable)");
    sub->add_option("--seed", cfg.seed, "Seed for all sampling")->default_val(0);
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };

  auto* verify = app.add_subcommand("verify-catalog", "Recompute every table column and report");
  common(verify);
  verify->add_option("--dim", cfg.dim, "Restrict to one dimension (2, 3 or 4)");
  verify->add_option("--samples", cfg.samples, "Samples per automorphism family")->default_val(3);
  verify->add_option("--format", cfg.format, "text or records");
  verify->add_option("ids", cfg.ids, "Entry ids, optionally Id:alpha=VALUE");

  auto* inv = app.add_subcommand("invariants", "Fingerprint and witnesses of one algebra");
  common(inv);
  inv->add_option("algebra", cfg.a, "Catalog id or algebra file")->required();
  inv->add_option("--format", cfg.format, "text or records");

  auto* cmp = app.add_subcommand("compare", "Separate two algebras or find an isomorphism");
  common(cmp);
  cmp->add_option("a", cfg.a, "Catalog id or algebra file")->required();
  cmp->add_option("b", cfg.b, "Catalog id or algebra file")->required();
  cmp->add_option("--budget", cfg.budget, "Random trials in the isomorphism search")->default_val(2000);

  auto* hom = app.add_subcommand("check-hom", "Check a matrix A -> B for the homomorphism property");
  common(hom);
  hom->add_option("a", cfg.a, "Source algebra")->required();
  hom->add_option("b", cfg.b, "Target algebra")->required();
  hom->add_option("matrix", cfg.matrix_file, "Matrix file; column j is the image of e_j")->required();

  auto* table = app.add_subcommand("table", "Re-emit one table from computed values");
  common(table);
  table->add_option("--dim", cfg.dim, "Dimension (2, 3 or 4)");
  table->add_option("--format", cfg.format, "md or csv");

  auto* dump = app.add_subcommand("dump", "Write an algebra file for a catalog entry");
  common(dump);
  dump->add_option("id", cfg.a, "Catalog id, optionally Id:alpha=VALUE")->required();

  auto* sep = app.add_subcommand("separation", "Pairwise fingerprint separation per dimension");
  common(sep);
  sep->add_option("--dim", cfg.dim, "Restrict to one dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_clean : exit_usage;
  }

  try {
    if (*verify) return cmd_verify_catalog(cfg);
    if (*inv) return cmd_invariants(cfg);
    if (*cmp) return cmd_compare(cfg);
    if (*hom) return cmd_check_hom(cfg);
    if (*table) return cmd_table(cfg);
    if (*dump) return cmd_dump(cfg);
    if (*sep) return cmd_separation(cfg);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const assocalg::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
