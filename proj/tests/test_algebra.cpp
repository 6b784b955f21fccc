#include "coringlab/algebra.hpp"
#include "coringlab/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coringlab;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadShape;
}

}  // namespace

TEST_CASE("finite fields have cyclic unit groups of order q - 1") {
  for (auto [p, n] : std::vector<std::pair<Scalar, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    auto f = fixtures::field(p, n);
    UnitGroup u = units(f);
    std::size_t q = 1;
    for (std::size_t i = 0; i < n; ++i) q *= p;
    CHECK(u.size() == q - 1);
    CHECK(f->is_commutative());
    CHECK(is_division_ring(*f, whole_algebra(*f)));
    // some element has order q - 1
    bool cyclic = false;
    for (const auto& g : u.elements()) {
      Vec x = g;
      std::size_t order = 1;
      while (x != f->unit()) {
        x = f->mul(x, g);
        ++order;
      }
      cyclic = cyclic || order == q - 1;
    }
    CHECK(cyclic);
  }
}

TEST_CASE("F4 is reduced modulo x^2 + x + 1") {
  CHECK(irreducible_polynomial(2, 2) == Vec{1, 1});
  auto f = fixtures::field(2, 2);
  CHECK(f->mul({0, 1}, {0, 1}) == Vec{1, 1});
}

TEST_CASE("matrix algebras") {
  auto m = make_algebra(matrix_algebra(2, 2));
  CHECK(m->unit() == Vec{1, 0, 0, 1});
  CHECK(units(m).size() == 6);
  CHECK_FALSE(m->is_commutative());
  CHECK(m->mul({0, 1, 0, 0}, {0, 0, 1, 0}) == Vec{1, 0, 0, 0});
  auto m3 = make_algebra(matrix_algebra(3, 2));
  CHECK(units(m3).size() == 48);
  CHECK_FALSE(is_division_ring(*m3, whole_algebra(*m3)));
}

TEST_CASE("build rejects malformed algebras") {
  // e0 e0 = e1, e1 anything = 0: not associative with a unit
  std::vector<Scalar> sc(8, 0);
  sc[(0 * 2 + 0) * 2 + 1] = 1;
  CHECK(code_of([&] { FiniteAlgebra::build(2, 2, sc, {1, 0}); }) == ErrorCode::NoUnit);
  CHECK(code_of([&] { FiniteAlgebra::build(4, 1, {1}, {1}); }) == ErrorCode::NotPrime);
  CHECK(code_of([&] { FiniteAlgebra::build(2, 2, {1, 0}, {1, 0}); }) == ErrorCode::BadShape);

  // unit e0, e1 e1 = e2, e1 e2 = e1, e2 e1 = 0: (e1 e1) e1 != e1 (e1 e1)
  std::vector<Scalar> nonassoc(27, 0);
  auto set = [&](int i, int j, Vec v) { std::copy(v.begin(), v.end(), nonassoc.begin() + (i * 3 + j) * 3); };
  set(0, 0, {1, 0, 0});
  set(0, 1, {0, 1, 0});
  set(0, 2, {0, 0, 1});
  set(1, 0, {0, 1, 0});
  set(2, 0, {0, 0, 1});
  set(1, 1, {0, 0, 1});
  set(1, 2, {0, 1, 0});
  set(2, 1, {0, 0, 0});
  set(2, 2, {0, 0, 0});
  CHECK(code_of([&] { FiniteAlgebra::build(3, 3, nonassoc, {1, 0, 0}); }) == ErrorCode::NotAssociative);
}

TEST_CASE("unit group bookkeeping") {
  auto m = make_algebra(matrix_algebra(2, 2));
  UnitGroup u = units(m);
  for (std::size_t i = 0; i < u.size(); ++i) {
    CHECK(m->mul(u[i], u.inverse(i)) == m->unit());
    CHECK(u.index_of(u[i]) == i);
    for (std::size_t j = 0; j < u.size(); ++j) CHECK(u[u.mul_index(i, j)] == m->mul(u[i], u[j]));
  }
  CHECK(u[u.identity_index()] == m->unit());
  CHECK_FALSE(u.index_of({0, 0, 0, 0}));
  // the greedy generators generate
  std::vector<bool> seen(u.size(), false);
  std::vector<std::size_t> frontier{u.identity_index()};
  seen[u.identity_index()] = true;
  auto gens = u.generators();
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      std::size_t y = u.mul_index(x, g);
      if (!seen[y]) {
        seen[y] = true;
        frontier.push_back(y);
      }
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
}

TEST_CASE("units respect the enumeration budget") {
  auto f = fixtures::field(2, 5);
  CHECK(code_of([&] { units(f, Budget{16, 16}); }) == ErrorCode::TooLarge);
}

TEST_CASE("subrings") {
  auto m = make_algebra(matrix_algebra(2, 2));
  Subring f4 = subring_closure(*m, {{0, 1, 1, 1}});
  CHECK(f4.dim() == 2);
  CHECK(is_division_ring(*m, f4));
  CHECK(subring_units(*m, f4).size() == 3);
  CHECK(prime_subring(*m).dim() == 1);
  CHECK(whole_algebra(*m).dim() == 4);
  CHECK(f4.contains_subring(prime_subring(*m), 2));
  CHECK(code_of([&] { Subring::from_span(*m, {{0, 1, 0, 0}}); }) == ErrorCode::NotASubring);
  CHECK(code_of([&] { Subring::from_span(*m, {{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}); }) ==
        ErrorCode::NotASubring);

  // conjugating F4 by the elementary matrix [[1,1],[0,1]] moves it
  Vec alpha{1, 1, 0, 1};
  Subring c = conjugate_subring(*m, alpha, f4);
  CHECK(c.dim() == 2);
  Vec ai = m->inverse(alpha);
  for (const auto& b : f4.basis_vectors()) CHECK(c.contains(m->mul(m->mul(ai, b), alpha), 2));
  CHECK(conjugate_subring(*m, m->unit(), f4) == f4);
  CHECK(code_of([&] { conjugate_subring(*m, {1, 0, 0, 0}, f4); }) == ErrorCode::NotAUnit);
}
