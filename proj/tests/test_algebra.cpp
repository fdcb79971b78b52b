#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace assocalg;
using testing_support::entry;
using testing_support::vec;

TEST_CASE("make_algebra", "[algebra]") {
  Algebra a = make_algebra(2, {{1, 1, 2, 1}});
  CHECK(a == entry("As_2_1"));
  CHECK(a.c(0, 0, 1) == Scalar(1));

  Algebra z = make_algebra(3, {});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(is_zero_vector<Scalar>(z.basis_product(i, j)));

  CHECK(make_algebra(3, {{1, 3, 2, 1}, {3, 1, 2, 2}}) == entry("As_3_2:alpha=2"));
  CHECK_THROWS_AS(make_algebra(2, {{1, 3, 1, 1}}), index_out_of_range);
  CHECK_THROWS_AS(make_algebra(2, {{1, 1, 1, 1}, {1, 1, 1, 2}}), duplicate_product);
}

TEST_CASE("multiply", "[algebra]") {
  Algebra a = entry("As_2_1");
  CHECK(multiply(a, basis_vector(2, 0), basis_vector(2, 0)) == basis_vector(2, 1));
  CHECK(multiply(a, zero_element(2), vec({3, 7})) == zero_element(2));
  CHECK(multiply(a, vec({1, 1}), vec({1, 1})) == basis_vector(2, 1));
  CHECK_THROWS_AS(multiply(a, vec({1, 1, 1}), vec({1, 1})), dimension_mismatch);
}

TEST_CASE("is_associative", "[algebra]") {
  CHECK(is_associative(entry("As_2_1")).associative);
  CHECK(is_associative(make_algebra(3, {})).associative);
  // e1e1=e1, e1e2=e2, e2e1=e1. The first failing triple is (2,1,2):
  // (e2e1)e2 = e1e2 = e2 while e2(e1e2) = e2e2 = 0.
  Algebra bad = make_algebra(2, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 1, 1}});
  auto r = is_associative(bad);
  REQUIRE_FALSE(r.associative);
  REQUIRE(r.triple);
  CHECK(*r.triple == std::tuple<std::size_t, std::size_t, std::size_t>{2, 1, 2});
  CHECK(r.lhs == basis_vector(2, 1));
  CHECK(r.rhs == zero_element(2));
}

TEST_CASE("power_chain examples", "[algebra]") {
  CHECK(dims_of(power_chain(entry("As_2_1"))) == std::vector<std::size_t>{2, 1, 0});
  CHECK(dims_of(power_chain(entry("As_3_3"))) == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(dims_of(power_chain(entry("As_2_4"))) == std::vector<std::size_t>{2, 2});
}

TEST_CASE("direct_sum examples", "[algebra]") {
  Algebra a = entry("As_2_1");
  CHECK(direct_sum(a, Algebra(0)) == a);
  Algebra field = make_algebra(1, {{1, 1, 1, 1}});
  CHECK(direct_sum(a, field) == make_algebra(3, {{1, 1, 2, 1}, {3, 3, 3, 1}}));
  CHECK(direct_sum(entry("As_2_2"), entry("As_2_3")).dim() == 4);
}

TEST_CASE("algebra file format", "[algebra]") {
  const char* text =
      "dim 3\n"
      "label As_3_2\n"
      "# e_i e_j = coeff * e_k\n"
      "1 3 -> 2 : 1\n"
      "3 1 -> 2 : 2\n";
  Algebra a = parse_algebra(text);
  CHECK(a == entry("As_3_2:alpha=2"));
  CHECK(a.label() == "As_3_2");
  CHECK(parse_algebra(serialize_algebra(a)) == a);
  CHECK_THROWS_AS(parse_algebra("dim 2\n1 1 -> 3 : 1\n"), index_out_of_range);
  CHECK_THROWS_AS(parse_algebra("dim 2\n1 1 2 : 1\n"), parse_error);
  CHECK_THROWS_AS(parse_algebra("1 1 -> 2 : 1\n"), parse_error);
  CHECK_THROWS_AS(parse_algebra("dim 2\n1 1 -> 2 : 1\n1 1 -> 2 : 3\n"), duplicate_product);
}

TEST_CASE("basis change and direct sum preserve the calculus", "[algebra]") {
  seeded_rng rng(derive_seed(0, "algebra/property"));
  auto samples = testing_support::all_catalog_samples();
  for (int trial = 0; trial < 60; ++trial) {
    const Algebra& a = samples[rng.below(samples.size())];
    Matrix p = testing_support::random_invertible(rng, a.dim());
    Algebra b = change_basis(a, p);
    CHECK(is_associative(b).associative);
    CHECK(change_basis(b, *invert(p)) == a);
    CHECK(change_basis(a, Matrix::identity(a.dim())) == a);
    // p is an isomorphism b -> a: it maps the new basis to the old coordinates
    CHECK(is_homomorphism(b, a, p).ok);

    const Algebra& c = samples[rng.below(samples.size())];
    CHECK(is_associative(direct_sum(a, c)).associative);

    auto chain = power_chain(a);
    auto dims = dims_of(chain);
    for (std::size_t k = 1; k < dims.size(); ++k) CHECK(dims[k] <= dims[k - 1]);
    CHECK(subspace_product(a, full_space(a), chain.back()) == chain.back());

    std::vector<Vector> prods;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) prods.push_back(a.basis_product(i, j));
    CHECK(subspace_product(a, full_space(a), full_space(a)).dim() ==
          rank(Matrix::from_rows(prods, a.dim())));

    std::vector<Element> gens{testing_support::small_vector(rng, a.dim())};
    auto g = generated_subalgebra(a, gens);
    CHECK(g.contains(gens[0]));
    CHECK(g.contains(subspace_product(a, g, g)));
    CHECK(is_product_closed(a, g));
  }
}

TEST_CASE("direct sums: swap is an isomorphism", "[algebra]") {
  Algebra a = entry("As_2_2"), b = entry("As_3_5");
  Matrix swap(5, 5);
  // basis of b+a -> basis of a+b
  for (std::size_t i = 0; i < 3; ++i) swap(2 + i, i) = 1;
  for (std::size_t i = 0; i < 2; ++i) swap(i, 3 + i) = 1;
  CHECK(is_isomorphism(direct_sum(b, a), direct_sum(a, b), swap));
}
