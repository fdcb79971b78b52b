#include <catch_amalgamated.hpp>

#include <map>

#include "support.hpp"

using namespace assocalg;
using testing_support::entry;

TEST_CASE("catalog shape", "[catalog]") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() == 62);
  CHECK(entries_of_dim(2).size() == 4);
  CHECK(entries_of_dim(3).size() == 12);
  CHECK(entries_of_dim(4).size() == 46);
  CHECK(entries_of_dim(std::nullopt).size() == 62);

  std::set<std::string> ids;
  for (const auto& e : cat) ids.insert(e.id);
  CHECK(ids.size() == 62);
  CHECK(ids.contains("As_2_4"));
  CHECK(ids.contains("As_3_12"));
  CHECK(ids.contains("As_4_46"));

  std::vector<std::string> param_ids;
  for (const auto& e : cat)
    if (e.parametrized()) param_ids.push_back(e.id);
  CHECK(param_ids == std::vector<std::string>{"As_3_2", "As_4_6", "As_4_16", "As_4_18", "As_4_28", "As_4_44"});

  const auto& as32 = find_entry("As_3_2");
  REQUIRE(as32.params.size() == 1);
  CHECK(as32.params[0].name == "alpha");
  CHECK(as32.params[0].excluded == std::vector<Scalar>{Scalar(1)});

  const auto& as444 = find_entry("As_4_44");
  CHECK(as444.products.size() == 9);
  bool found = false;
  for (const auto& p : as444.products)
    if (p.i == 2 && p.j == 3 && p.k == 4 && p.coeff.source() == "alpha") found = true;
  CHECK(found);
  CHECK(as444.aut_families.size() == 3);
  CHECK_THROWS_AS(find_entry("As_5_1"), unknown_entry);
}

TEST_CASE("instantiation", "[catalog]") {
  CHECK(standard_samples(find_entry("As_3_2")).size() == 4);
  CHECK(standard_samples(find_entry("As_2_1")).size() == 1);
  CHECK(subject_name(find_entry("As_3_2"), {{"alpha", 2}}) == "As_3_2[alpha=2]");
  CHECK_THROWS_AS(instantiate(find_entry("As_3_2"), {{"alpha", 1}}), excluded_parameter);
  CHECK_THROWS_AS(instantiate(find_entry("As_3_2"), {}), unbound_parameter);
  CHECK_THROWS_AS(instantiate(find_entry("As_2_1"), {{"alpha", 1}}), unbound_parameter);
  CHECK_THROWS_AS(parse_instance_spec("As_3_2:alpha"), parse_error);
  auto [e, env] = parse_instance_spec("As_4_16:alpha=-1/2");
  CHECK(e->id == "As_4_16");
  CHECK(env.at("alpha") == Scalar::fraction(-1, 2));
  // every entry at every standard sample is associative (instantiate checks)
  CHECK(testing_support::all_catalog_samples().size() == 4 + 15 + 41 + 4 * 5);
}

TEST_CASE("catalog text format round-trips", "[catalog]") {
  const auto& cat = builtin_catalog();
  auto text = serialize_catalog(cat);
  CHECK(text.rfind("assocalg-catalog v1\n", 0) == 0);
  CHECK(parse_catalog(text) == cat);
  for (const auto& e : cat)
    for (const auto& env : standard_samples(e)) {
      Algebra a = instantiate(e, env);
      CHECK(parse_algebra(serialize_algebra(a)) == a);
    }
}

TEST_CASE("catalog parse errors", "[catalog]") {
  CHECK_THROWS_AS(parse_catalog("entry X\ndim 2\n"), parse_error);
  const std::string head = "assocalg-catalog v1\n";
  const std::string one = "entry X\ndim 2\n1 1 -> 2 : 1\nclaimed commutative=yes unital=no nilpotent=yes dim_C=2 dim_L=1 dim_R=1\n";
  CHECK(parse_catalog(head + one).size() == 1);
  CHECK_THROWS_AS(parse_catalog(head + one + one), parse_error);
  CHECK_THROWS_AS(parse_catalog(head + one + "bogus 1\n"), parse_error);
  CHECK_THROWS_AS(parse_catalog(head + one + "autfamily\n  a 0\nend\n"), parse_error);
}

TEST_CASE("verify_entry examples", "[catalog]") {
  auto r = verify_entry(find_entry("As_2_2"));
  CHECK(r.overall() == Overall::pass);
  for (const auto& l : r.lines) CHECK(l.status == Status::pass);

  r = verify_entry(find_entry("As_3_12"));
  CHECK(r.overall() == Overall::pass);

  r = verify_entry(find_entry("As_3_4"));
  CHECK(r.overall() == Overall::discrepancy);
  for (const auto& l : r.lines) {
    INFO(l.check << " " << l.details);
    if (l.check == "dim_L") {
      CHECK(l.status == Status::discrepancy);
      CHECK(l.details.find("computed=1") != std::string::npos);
    } else {
      CHECK(l.status == Status::pass);
    }
  }
}

TEST_CASE("report rendering", "[catalog]") {
  VerifyOptions opt;
  auto reports = verify_all(2, opt);
  auto text = render_reports(reports, opt, ReportFormat::text);
  CHECK(text.rfind("# assocalg verification report\n# seed=0 family-samples=3 alpha-samples=0,2,-1,1/2\n", 0) == 0);
  CHECK(text.find("As_2_2 dim_L PASS claimed=1 computed=1") != std::string::npos);
  CHECK(text.find("# entries=4 pass=4 pass_with_notes=0 discrepancy=0") != std::string::npos);
  CHECK(render_reports(verify_all(2, opt), opt, ReportFormat::text) == text);
  auto rec = render_reports(reports, opt, ReportFormat::records);
  CHECK(rec.find("subject=As_2_4 check=unital status=PASS") != std::string::npos);
}

TEST_CASE("overall status rules", "[catalog]") {
  VerificationReport r;
  r.lines.push_back({"X", "a", Status::pass, ""});
  CHECK(r.overall() == Overall::pass);
  r.lines.push_back({"X", "b", Status::lower_bound_only, ""});
  CHECK(r.overall() == Overall::pass_with_notes);
  r.lines.push_back({"X", "c", Status::discrepancy, ""});
  CHECK(r.overall() == Overall::discrepancy);
}

TEST_CASE("separation", "[catalog]") {
  auto s2 = separation_matrix(2);
  CHECK(s2.pairs == 6);
  CHECK(s2.separated == 6);
  auto s3 = separation_matrix(3);
  CHECK(s3.percent() >= 90.0);
  auto u3 = separation_units(3);
  auto fp = [&](const char* id) {
    for (const auto& u : u3)
      if (u.subject == id) return u.fp;
    FAIL("missing " << id);
    return Fingerprint{};
  };
  CHECK(first_difference(fp("As_3_8"), fp("As_3_9")) == "dim_left_ann");
  CHECK(fp("As_3_8") == fp("As_3_8"));
  CHECK(separation_matrix(4).percent() >= 90.0);
}

TEST_CASE("one-dimensional algebras and decomposables", "[catalog]") {
  auto one = one_dim_algebras();
  REQUIRE(one.size() == 2);
  CHECK(fingerprint(one[0]).nilpotency_index == 2u);
  CHECK(find_unit(one[1]).has_value());

  CHECK(generate_decomposables(2).size() == 3);
  CHECK(generate_decomposables(3).size() == 12);
  CHECK(generate_decomposables(4).size() == 57);
  CHECK_THROWS_AS(generate_decomposables(5), index_out_of_range);

  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& x : generate_decomposables(d)) {
      INFO(x.label);
      CHECK(x.algebra.dim() == d);
      CHECK(is_associative(x.algebra).associative);
      auto fs = fingerprint(x.algebra);
      std::size_t left = 0, right = 0, rad = 0, cen = 0;
      for (const auto& s : x.summands) {
        auto f = fingerprint(s);
        left += f.dim_left_ann;
        right += f.dim_right_ann;
        rad += f.dim_radical;
        cen += f.dim_center;
      }
      CHECK(fs.dim_left_ann == left);
      CHECK(fs.dim_right_ann == right);
      CHECK(fs.dim_radical == rad);
      CHECK(fs.dim_center == cen);
    }
}

// Decomposables whose fingerprint equals a catalog row. The three dim-3 rows
// are isomorphic to the listed direct sums as printed (certificate checked
// below); the dim-4 pair is a fingerprint tie only.
TEST_CASE("decomposable collisions with catalog rows", "[catalog]") {
  std::vector<std::pair<std::string, std::string>> found;
  for (std::size_t d = 2; d <= 4; ++d) {
    auto units = separation_units(d);
    for (const auto& x : generate_decomposables(d)) {
      auto f = fingerprint(x.algebra);
      for (const auto& u : units)
        if (u.fp == f) found.emplace_back(x.label, u.subject);
    }
  }
  const std::vector<std::pair<std::string, std::string>> expected{
      {"Z1+As_2_2", "As_3_6"},
      {"Z1+As_2_3", "As_3_4"},
      {"Z1+As_2_4", "As_3_11"},
      {"As_2_1+As_2_1", "As_4_6[alpha=0]"},
  };
  CHECK(found == expected);

  // e1 - e2 splits off as a one-dimensional zero ideal
  const Matrix cert{{-1, 0, 0}, {1, 0, 1}, {0, 1, 0}};
  const Algebra z1 = one_dim_algebras()[0];
  CHECK(is_isomorphism(direct_sum(z1, entry("As_2_2")), entry("As_3_6"), cert));
  CHECK(is_isomorphism(direct_sum(z1, entry("As_2_3")), entry("As_3_4"), cert));
  CHECK(is_isomorphism(direct_sum(z1, entry("As_2_4")), entry("As_3_11"), cert));
}

TEST_CASE("table emission", "[catalog]") {
  auto md = emit_table(2, TableFormat::markdown, 0);
  CHECK(md.find("| As_2_2 | e1e1=e1, e1e2=e2 | dim N=1 | 1 | 1 | 0 |") != std::string::npos);
  CHECK(emit_table(2, TableFormat::markdown, 0) == md);
  auto csv = emit_table(4, TableFormat::csv, 0);
  CHECK(csv.rfind("algebra,products,type,dim_C,dim_L,dim_R\n", 0) == 0);
  CHECK(csv.find("As_4_7,") != std::string::npos);
  CHECK(emit_table(4, TableFormat::csv, 0) == csv);
}
