#include "coringlab/constructions.hpp"
#include "coringlab/error.hpp"
#include "coringlab/group.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coringlab;

TEST_CASE("group presets") {
  FiniteGroup c5 = FiniteGroup::cyclic(5);
  CHECK(c5.order() == 5);
  CHECK(c5.mul(3, 4) == 2);
  CHECK(c5.inv(2) == 3);
  CHECK(FiniteGroup::trivial().order() == 1);

  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  auto perms = fixtures::permutations(3);
  bool abelian = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> c(3);
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      CHECK(perms[s3.mul(a, b)] == c);
      abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
    }
  CHECK_FALSE(abelian);
  CHECK(s3.generators().size() == 2);
}

TEST_CASE("group tables are validated") {
  CHECK_THROWS_AS(FiniteGroup::build({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::build({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), Error);
}

TEST_CASE("actions compose as right actions") {
  GroupAction act = fixtures::permutation_action(2, 3);
  const FiniteGroup& g = act.group();
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      for (std::size_t i = 0; i < 3; ++i) {
        Vec e = act.algebra()->basis(i);
        CHECK(act.act(e, g.mul(x, y)) == act.act(act.act(e, x), y));
      }

  // The left-action convention is rejected for a non-abelian group.
  std::vector<Matrix> left;
  auto perms = fixtures::permutations(3);
  for (const auto& s : perms) {
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) m(s[i], i) = 1;
    left.push_back(m);
  }
  try {
    GroupAction::build(g, act.algebra(), left);
    FAIL("left action accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnAction);
  }
}

TEST_CASE("non-automorphisms are rejected with a witness") {
  auto f4 = fixtures::field(2, 2);
  // swap of the basis 1, x does not fix 1
  Matrix swap = Matrix::from_rows(2, {{0, 1}, {1, 0}});
  try {
    GroupAction::build(FiniteGroup::cyclic(2), f4, {Matrix::identity(2), swap});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnAutomorphism);
  }
}

TEST_CASE("Frobenius action") {
  auto f8 = fixtures::field(2, 3);
  GroupAction frob = GroupAction::frobenius(f8, 3);
  Vec x{0, 1, 0};
  CHECK(frob.act(x, 1) == f8->mul(x, x));
  CHECK(frob.act(frob.act(x, 1), 2) == x);
  CHECK_THROWS_AS(GroupAction::frobenius(f8, 2), Error);
}

TEST_CASE("crossed product multiplication for S3 on F2^3") {
  GroupAction act = fixtures::permutation_action(2, 3);
  FiniteAlgebra r = crossed_product(act);  // associativity is checked on construction
  CHECK(r.dim() == 18);
  const FiniteGroup& g = act.group();
  const FiniteAlgebra& a = *act.algebra();
  // (x e_i)(y e_j) = (x y)(e_i^y e_j) on every basis pair
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          Vec got = r.mul(r.basis(x * 3 + i), r.basis(y * 3 + j));
          Vec coeff = a.mul(act.act(a.basis(i), y), a.basis(j));
          Vec want(18, 0);
          std::size_t xy = g.mul(x, y);
          for (std::size_t k = 0; k < 3; ++k) want[xy * 3 + k] = coeff[k];
          CHECK(got == want);
        }
  // 1 = e . 1_A
  Vec one(18, 0);
  for (std::size_t k = 0; k < 3; ++k) one[g.identity() * 3 + k] = 1;
  CHECK(r.unit() == one);
}
