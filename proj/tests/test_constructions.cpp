#include <set>

#include "coringlab/constructions.hpp"
#include "coringlab/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coringlab;

TEST_CASE("psi is a coring isomorphism") {
  auto m = make_algebra(matrix_algebra(2, 2));
  Subring f4 = subring_closure(*m, {{0, 1, 1, 1}});
  UnitGroup u = units(m);
  for (const auto& alpha : u.elements()) {
    CHECK(psi_is_coring_iso(m, f4, alpha));
    PsiIso psi = psi_iso(m, f4, alpha);
    CHECK(psi.target.middle() == conjugate_subring(*m, alpha, f4));
    Vec a{1, 1, 0, 0}, b{0, 0, 1, 1};
    CHECK(fp::apply(psi.matrix, psi.source.pure(a, b), 2) ==
          psi.target.pure(m->mul(a, alpha), m->mul(m->inverse(alpha), b)));
  }
  CHECK_THROWS_AS(psi_iso(m, f4, {1, 0, 0, 0}), Error);
}

TEST_CASE("dual of the crossed product for Frobenius on F4") {
  auto f4 = fixtures::field(2, 2);
  DualCoring d = dual_coring(GroupAction::frobenius(f4, 2));
  CHECK(d.ring->dim() == 4);
  CHECK(d.coring.dim() == 4);
  CHECK(d.coring.is_grouplike(d.trace));
  for (std::size_t x = 0; x < 2; ++x) CHECK(d.value_at(d.trace, x) == f4->unit());

  auto gl = grouplikes(d.coring);
  CHECK(gl.size() == 3);
  UnitGroup u = units(f4);
  auto z = z1(d.action, u);
  CHECK(z == z1_bruteforce(d.action, u));
  CHECK(z.size() == 3);
  std::set<Cocycle> images;
  for (const auto& h : gl) {
    Cocycle f = theta(d, h);
    CHECK(is_cocycle(d.action, f));
    CHECK(theta_inverse(d, f) == h);
    images.insert(f);
  }
  CHECK(images.size() == 3);
  CHECK(h0(d.action, u).size() == 1);
  for (const auto& f : z)
    for (const auto& h : z) CHECK(are_cohomologous(d.action, u, f, h));
}

TEST_CASE("cocycle identity with a non-abelian group") {
  GroupAction act = fixtures::permutation_action(3, 3);
  UnitGroup u = units(act.algebra());
  auto z = z1(act, u);
  CHECK(z == z1_bruteforce(act, u));
  for (const auto& f : z) CHECK(is_cocycle(act, f));
  // the constant 1 is a cocycle, the constant -1 is not (f(e) must be 1)
  Cocycle bad{std::vector<Vec>(6, Vec{2, 2, 2})};
  CHECK_FALSE(is_cocycle(act, bad));
  CHECK_THROWS_AS(theta_inverse(dual_coring(act), bad), Error);
}

TEST_CASE("group algebra Hopf structure") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  HopfData h = group_algebra(2, s3);
  CHECK_NOTHROW(validate_hopf(h));
  HopfData broken = h;
  broken.antipode = Matrix::identity(6);
  CHECK_THROWS_AS(validate_hopf(broken), Error);

  Coring c = hopf_coalgebra(h);
  CHECK(grouplikes(c).size() == 6);
  GlEmbeddingReport r = gl_embedding_check(h);
  CHECK(r.pass());
  CHECK(r.images.size() == 6);
}

TEST_CASE("regular comodule algebra coring of F3[C2]") {
  HopfData h = group_algebra(3, FiniteGroup::cyclic(2));
  ComoduleAlgebra ca = regular_comodule_algebra(h);
  CHECK_NOTHROW(validate_comodule_algebra(ca));
  ComoduleCoring cc = comodule_algebra_coring(ca);
  CHECK(cc.coring.dim() == 4);
  CHECK(cc.coring.is_grouplike(cc.one));
  CHECK(coaction_coinvariants(ca).dim() == 1);
  CHECK(coinvariants(cc.coring, cc.one) == coaction_coinvariants(ca));
  UnitGroup u = units(ca.algebra);
  CHECK(u.size() == 4);
  for (const auto& a : u.elements()) CHECK(cc.coring.is_grouplike(coaction_grouplike(ca, a)));

  ComoduleAlgebra broken = ca;
  broken.coaction = Matrix(4, 2);
  CHECK_THROWS_AS(validate_comodule_algebra(broken), Error);
}
