#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace assocalg;
using testing_support::entry;

namespace {
const AutFamilyTemplate& family(const char* id, std::size_t k) { return find_entry(id).aut_families.at(k); }
}  // namespace

TEST_CASE("homomorphism checks", "[morphisms]") {
  Algebra a1 = entry("As_2_1");
  CHECK(is_homomorphism(a1, a1, Matrix::identity(2)).ok);
  CHECK(is_homomorphism(entry("As_3_5"), entry("As_2_2"), Matrix(2, 3)).ok);

  auto r = is_homomorphism(entry("As_2_2"), entry("As_2_3"), Matrix{{0, 1}, {1, 0}});
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(r.witness->i == 1);
  CHECK(r.witness->j == 1);
  CHECK(r.witness->lhs != r.witness->rhs);
  CHECK_THROWS_AS(is_homomorphism(a1, a1, Matrix::identity(3)), dimension_mismatch);
}

TEST_CASE("automorphism checks", "[morphisms]") {
  CHECK(is_automorphism(entry("As_2_1"), Matrix{{2, 0}, {3, 4}}).ok);
  CHECK(is_automorphism(entry("As_2_4"), Matrix{{1, 0}, {0, 5}}).ok);
  CHECK_FALSE(is_automorphism(entry("As_2_1"), Matrix{{1, 0}, {0, 2}}).ok);
  auto sing = is_automorphism(entry("As_2_1"), Matrix(2, 2));
  CHECK_FALSE(sing.ok);
  CHECK(sing.singular);
  for (const auto& a : testing_support::all_catalog_samples()) CHECK(is_automorphism(a, Matrix::identity(a.dim())).ok);
}

TEST_CASE("family instantiation", "[morphisms]") {
  CHECK(instantiate_family(family("As_2_1", 0), {{"a", 2}, {"b", 3}}) == Matrix{{2, 0}, {3, 4}});
  CHECK(instantiate_family(family("As_3_2", 0), {{"a", 1}, {"b", 0}, {"c", 1}, {"d", 0}, {"alpha", 2}}) ==
        Matrix::identity(3));
  Assignment env{{"a", 8}, {"b", 0}, {"c", 0}, {"d", 0}, {"e", 0}};
  Matrix diag(4, 4);
  diag(0, 0) = 4;
  diag(1, 1) = 8;
  diag(2, 2) = 4;
  diag(3, 3) = 64;
  // first printed family as written; the corrected copy differs only in cell (3,3)
  CHECK(instantiate_family(family("As_4_10", 0), env) == diag);
  CHECK_THROWS_AS(instantiate_family(family("As_4_10", 0), {{"a", 2}, {"b", 0}, {"c", 0}, {"d", 0}, {"e", 0}}),
                  inexact_root);
  CHECK_THROWS_AS(instantiate_family(family("As_2_1", 0), {{"a", 0}, {"b", 3}}), constraint_violated);
}

TEST_CASE("family verification", "[morphisms]") {
  auto r = verify_family(entry("As_2_1"), family("As_2_1", 0), 3, 0);
  CHECK(r.ok());
  CHECK(r.convention == "column");
  CHECK(r.matrices.size() == 3);
  CHECK(r.passed == 3);
  for (const auto& m : r.matrices) CHECK(is_automorphism(entry("As_2_1"), m).ok);

  // a family that only works transposed is accepted with convention "row"
  AutFamilyTemplate t = family("As_2_1", 0);
  std::swap(t.entries[0][1], t.entries[1][0]);
  auto rt = verify_family(entry("As_2_1"), t, 3, 0);
  CHECK(rt.ok());
  CHECK(rt.convention == "row");

  // sampling is reproducible
  auto again = verify_family(entry("As_2_1"), family("As_2_1", 0), 3, 0);
  CHECK(again.matrices == r.matrices);
}

TEST_CASE("root parameters are sampled as exact powers", "[morphisms]") {
  const auto& t = family("As_4_10", 1);
  REQUIRE(t.corrects == 1u);
  CHECK(t.root_parameters() == std::set<std::string>{"a"});
  auto drawn = sample_family(t, {}, 5, 7);
  CHECK(drawn.size() == 5);
  auto r = verify_family(entry("As_4_10"), t, 3, 0);
  CHECK(r.ok());
}

TEST_CASE("matrix file format", "[morphisms]") {
  Matrix m = parse_matrix("1 -1/2\n# comment\n0 3+i\n");
  CHECK(m(0, 1) == Scalar::fraction(-1, 2));
  CHECK(m(1, 1) == Scalar(rational(3), rational(1)));
  CHECK(parse_matrix(serialize_matrix(m)) == m);
  CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), parse_error);
  CHECK_THROWS_AS(parse_matrix("1 x\n"), parse_error);
}

TEST_CASE("isomorphism search", "[morphisms]") {
  CHECK(search_isomorphism(entry("As_2_2"), entry("As_2_2")) == Matrix::identity(2));
  CHECK_FALSE(search_isomorphism(entry("As_2_2"), entry("As_2_3")));

  seeded_rng rng(derive_seed(0, "morphisms/search"));
  auto samples = testing_support::all_catalog_samples();
  for (int trial = 0; trial < 30; ++trial) {
    const Algebra& a = samples[rng.below(samples.size())];
    const std::size_t n = a.dim();
    // signed permutation conjugate: found in the structured phase
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Matrix p(n, n);
    for (std::size_t j = 0; j < n; ++j) p(perm[j], j) = rng.below(2) ? Scalar(1) : Scalar(-1);
    Algebra b = change_basis(a, p);
    auto m = search_isomorphism(a, b);
    REQUIRE(m);
    CHECK(is_homomorphism(a, b, *m).ok);
    CHECK(invert(*m).has_value());
    CHECK(fingerprint(a) == fingerprint(b));
  }
}
