#pragma once

// Small fixtures shared by the unit tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "coringlab/constructions.hpp"

namespace fixtures {

using namespace coringlab;

// F_p^n with orthogonal idempotents e_i, unit (1, ..., 1).
inline AlgebraPtr product_algebra(Scalar p, std::size_t n) {
  std::vector<Scalar> sc(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) sc[(i * n + i) * n + i] = 1;
  return make_algebra(FiniteAlgebra::build(p, n, sc, Vec(n, 1)));
}

// Permutations of {0..n-1} in the order FiniteGroup::symmetric uses.
inline std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> q(n);
  std::iota(q.begin(), q.end(), 0);
  do out.push_back(q);
  while (std::next_permutation(q.begin(), q.end()));
  return out;
}

// S_n on F_p^n: e_i^s = e_{s^{-1}(i)}, a right action.
inline GroupAction permutation_action(Scalar p, std::size_t n) {
  auto perms = permutations(n);
  std::vector<Matrix> maps;
  for (const auto& s : perms) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = static_cast<std::size_t>(std::find(s.begin(), s.end(), i) - s.begin());
      m(j, i) = 1;
    }
    maps.push_back(std::move(m));
  }
  return GroupAction::build(FiniteGroup::symmetric(n), product_algebra(p, n), std::move(maps));
}

inline AlgebraPtr field(Scalar p, std::size_t n) { return make_algebra(finite_field(p, n)); }

}  // namespace fixtures
