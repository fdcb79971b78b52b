#pragma once

#include <vector>

#include "assocalg/assocalg.hpp"

namespace testing_support {

using namespace assocalg;

/// Invertible n x n matrix with small rational entries, by rejection.
inline Matrix random_invertible(seeded_rng& rng, std::size_t n) {
  while (true) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = small_rational(rng, 3, 2);
    if (invert(m)) return m;
  }
}

inline Vector small_vector(seeded_rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = small_rational(rng, 2, 2);
  return v;
}

/// Every catalog entry at every standard sample.
inline std::vector<Algebra> all_catalog_samples() {
  std::vector<Algebra> out;
  for (const auto& e : builtin_catalog())
    for (const auto& env : standard_samples(e)) out.push_back(instantiate(e, env));
  return out;
}

inline Algebra entry(const char* spec) {
  auto [e, env] = parse_instance_spec(spec);
  return instantiate(*e, env);
}

inline Vector vec(std::initializer_list<Scalar> v) { return Vector(v); }

}  // namespace testing_support
