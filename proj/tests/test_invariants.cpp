#include <catch_amalgamated.hpp>

#include "audit.hpp"
#include "support.hpp"

using namespace assocalg;
using testing_support::entry;
using testing_support::vec;

namespace {
Subspace span(std::size_t n, std::vector<Vector> v) { return Subspace::span(n, v); }
}  // namespace

TEST_CASE("annihilators", "[invariants]") {
  CHECK(left_annihilator(entry("As_2_2")) == span(2, {vec({0, 1})}));
  CHECK(left_annihilator(entry("As_2_1")) == span(2, {vec({0, 1})}));
  CHECK(left_annihilator(make_algebra(3, {})) == Subspace::full(3));
  CHECK(right_annihilator(entry("As_2_2")).dim() == 0);
  CHECK(right_annihilator(entry("As_3_5")) == span(3, {vec({0, 1, 0})}));
  CHECK(right_annihilator(make_algebra(3, {})) == Subspace::full(3));
  CHECK(two_sided_annihilator(entry("As_2_1")) == span(2, {vec({0, 1})}));
  // the left annihilator of As_3_4 contains e1 - e2
  CHECK(left_annihilator(entry("As_3_4")) == span(3, {vec({1, -1, 0})}));
}

TEST_CASE("center and commutativity", "[invariants]") {
  CHECK(center(entry("As_2_2")).dim() == 0);
  CHECK(center(entry("As_3_1")) == Subspace::full(3));
  CHECK(is_commutative(entry("As_2_1")));
  CHECK_FALSE(is_commutative(entry("As_2_2")));
  CHECK(is_commutative(entry("As_4_40")));
}

TEST_CASE("unit and nilpotency", "[invariants]") {
  CHECK(find_unit(entry("As_2_4")) == basis_vector(2, 0));
  CHECK(find_unit(entry("As_3_12")) == basis_vector(3, 2));
  CHECK_FALSE(find_unit(entry("As_2_1")));
  CHECK(nilpotency_index(entry("As_2_1")) == 3u);
  CHECK(nilpotency_index(entry("As_4_33")) == 5u);
  CHECK_FALSE(nilpotency_index(entry("As_2_2")));
}

TEST_CASE("radical", "[invariants]") {
  CHECK(radical(entry("As_2_2")) == span(2, {vec({0, 1})}));
  CHECK(radical(entry("As_2_1")) == Subspace::full(2));
  CHECK(radical(entry("As_4_29")) == span(4, {vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));
  CHECK(radical(entry("As_4_42")).dim() == 0);
}

TEST_CASE("wedderburn checks", "[invariants]") {
  CHECK(verify_wedderburn(entry("As_2_2"), {{2}, {1}}).all_ok());
  CHECK(verify_wedderburn(entry("As_4_36"), {{3, 4}, {1, 2}}).all_ok());
  auto swapped = verify_wedderburn(entry("As_2_2"), {{1}, {2}});
  CHECK_FALSE(swapped.all_ok());
  REQUIRE(swapped.checks.size() == 5);
  CHECK(swapped.checks[0].name == "radical");
  CHECK_FALSE(swapped.checks[0].ok);
}

TEST_CASE("commutative subalgebra search", "[invariants]") {
  auto r = max_commutative_subalgebra(entry("As_2_1"), 2);
  CHECK(r.found_dim == 2);
  CHECK(r.upper_bound_proved);
  r = max_commutative_subalgebra(entry("As_2_2"), 1);
  CHECK(r.found_dim == 1);
  CHECK(r.upper_bound_proved);
  CHECK(is_product_closed(entry("As_2_2"), r.witness));
  r = max_commutative_subalgebra(entry("As_4_40"), 4);
  CHECK(r.found_dim == 4);
  CHECK(r.upper_bound_proved);
  // found 3 in a 4-dim noncommutative algebra: n - 1 is forced
  r = max_commutative_subalgebra(entry("As_4_31"), 2);
  CHECK(r.found_dim == 3);
  CHECK(r.upper_bound_proved);
}

TEST_CASE("fingerprint examples", "[invariants]") {
  auto f2 = fingerprint(entry("As_2_2")), f3 = fingerprint(entry("As_2_3"));
  CHECK(f2 != f3);
  CHECK(f2.dim_left_ann == 1);
  CHECK(f3.dim_left_ann == 0);
  CHECK(f2.dim_right_ann == 0);
  CHECK(f3.dim_right_ann == 1);
  CHECK(first_difference(f2, f3) == "dim_left_ann");
  auto f8 = fingerprint(entry("As_3_8")), f9 = fingerprint(entry("As_3_9"));
  CHECK(std::pair(f8.dim_left_ann, f8.dim_right_ann) == std::pair<std::size_t, std::size_t>(0, 1));
  CHECK(std::pair(f9.dim_left_ann, f9.dim_right_ann) == std::pair<std::size_t, std::size_t>(1, 0));
  CHECK(fingerprint(entry("As_2_1")).fields().size() == 13);
}

TEST_CASE("library invariants agree with the oracle on every catalog sample", "[invariants]") {
  for (const auto& a : testing_support::all_catalog_samples()) {
    INFO(a.label());
    auto t = oracle::from_algebra(a);
    auto fp = fingerprint(a);
    CHECK(fp.commutative == oracle::commutative(t));
    CHECK(fp.unital == oracle::unital(t));
    CHECK(fp.nilpotency_index.has_value() == oracle::nilpotent(t));
    CHECK(fp.dim_left_ann == oracle::dim_left_annihilator(t));
    CHECK(fp.dim_right_ann == oracle::dim_right_annihilator(t));
    CHECK(fp.dim_radical == oracle::dim_radical(t));
    auto pd = oracle::power_dims(t);
    // the oracle chain stops at A^(n+1), where it is already stable
    for (std::size_t k = 0; k < fp.power_dims.size(); ++k)
      CHECK(fp.power_dims[k] == pd[std::min(k + 1, pd.size() - 1)]);
  }
}

TEST_CASE("structural properties on every catalog sample", "[invariants]") {
  for (const auto& a : testing_support::all_catalog_samples()) {
    INFO(a.label());
    const auto whole = full_space(a);
    for (const auto& ann : {left_annihilator(a), right_annihilator(a)}) {
      CHECK(ann.contains(subspace_product(a, whole, ann)));
      CHECK(ann.contains(subspace_product(a, ann, whole)));
    }
    if (auto idx = nilpotency_index(a); idx && a.dim() > 0) {
      auto chain = power_chain(a);
      const auto& last = chain[*idx - 2];  // A^(k-1), the last nonzero power
      CHECK(left_annihilator(a).contains(last));
      CHECK(right_annihilator(a).contains(last));
    }
    if (auto u = find_unit(a)) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        CHECK(multiply(a, *u, basis_vector(a.dim(), i)) == basis_vector(a.dim(), i));
        CHECK(multiply(a, basis_vector(a.dim(), i), *u) == basis_vector(a.dim(), i));
      }
      CHECK_FALSE(nilpotency_index(a));
    }
    CHECK(dims_of(power_chain(restrict_to(a, radical(a)))).back() == 0);
    CHECK(is_commutative(a) == (center(a).dim() == a.dim()));
    auto fp = fingerprint(a);
    if (fp.commutative) {
      CHECK(fp.dim_commutator_span == 0);
      CHECK(fp.dim_left_ann == fp.dim_right_ann);
    }
  }
}

TEST_CASE("fingerprint is invariant under basis change", "[invariants]") {
  seeded_rng rng(derive_seed(0, "invariants/fingerprint"));
  auto samples = testing_support::all_catalog_samples();
  for (int trial = 0; trial < 100; ++trial) {
    const Algebra& a = samples[rng.below(samples.size())];
    CHECK(fingerprint(change_basis(a, testing_support::random_invertible(rng, a.dim()))) == fingerprint(a));
  }
}

TEST_CASE("direct sums are additive", "[invariants]") {
  seeded_rng rng(derive_seed(0, "invariants/additivity"));
  auto samples = testing_support::all_catalog_samples();
  for (int trial = 0; trial < 40; ++trial) {
    const Algebra& a = samples[rng.below(samples.size())];
    const Algebra& b = samples[rng.below(samples.size())];
    auto s = direct_sum(a, b);
    auto fa = fingerprint(a), fb = fingerprint(b), fs = fingerprint(s);
    CHECK(fs.dim_left_ann == fa.dim_left_ann + fb.dim_left_ann);
    CHECK(fs.dim_right_ann == fa.dim_right_ann + fb.dim_right_ann);
    CHECK(fs.dim_two_sided_ann == fa.dim_two_sided_ann + fb.dim_two_sided_ann);
    CHECK(fs.dim_center == fa.dim_center + fb.dim_center);
    CHECK(fs.dim_radical == fa.dim_radical + fb.dim_radical);
    if (fa.nilpotency_index && fb.nilpotency_index)
      CHECK(fs.nilpotency_index == std::max(*fa.nilpotency_index, *fb.nilpotency_index));
    else
      CHECK_FALSE(fs.nilpotency_index);
  }
}

// Frozen output of the oracle audit at seed 0: every table cell that the
// definitional recomputation contradicts.
TEST_CASE("table cells contradicted by the oracle", "[invariants]") {
  const std::vector<oracle::Mismatch> expected{
      {"As_3_2[alpha=0]", "As_3_2", "dim_L", "1", "2"},
      {"As_3_2[alpha=0]", "As_3_2", "dim_R", "1", "2"},
      {"As_3_4", "As_3_4", "dim_L", "0", "1"},
      {"As_3_6", "As_3_6", "dim_R", "0", "1"},
      {"As_3_11", "As_3_11", "dim_L", "0", "1"},
      {"As_3_11", "As_3_11", "dim_R", "0", "1"},
      {"As_4_6[alpha=0]", "As_4_6", "commutative", "no", "yes"},
      {"As_4_6[alpha=0]", "As_4_6", "dim_C", "3", "4"},
      {"As_4_6[alpha=-1]", "As_4_6", "dim_R", "2", "3"},
      {"As_4_11", "As_4_11", "dim_L", "1", "2"},
      {"As_4_16[alpha=0]", "As_4_16", "dim_L", "1", "2"},
      {"As_4_16[alpha=0]", "As_4_16", "dim_R", "1", "2"},
      {"As_4_28[alpha=0]", "As_4_28", "commutative", "no", "yes"},
      {"As_4_28[alpha=0]", "As_4_28", "dim_C", "3", "4"},
      {"As_4_31", "As_4_31", "dim_C", "2", "3"},
      {"As_4_36", "As_4_36", "dim_C", "2", "3"},
      {"As_4_42", "As_4_42", "wedderburn_N", "2", "0"},
  };
  CHECK(oracle::audit_catalog() == expected);
}
