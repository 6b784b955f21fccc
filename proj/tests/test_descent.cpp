#include <set>

#include "coringlab/descent.hpp"
#include "coringlab/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coringlab;

namespace {

void require_suite(const Coring& c) {
  DescentData d = descent_data(c);
  AutomorphismGroup aut = coring_automorphisms(c);
  for (const auto& check : property_suite(d, aut)) {
    INFO(check.name << ": " << check.witness);
    CHECK(check.pass);
  }
}

}  // namespace

TEST_CASE("phi_g is a homomorphism on M2(F2) over F2") {
  auto m = make_algebra(matrix_algebra(2, 2));
  SweedlerCoring s = sweedler(m, prime_subring(*m));
  DescentData d = descent_data(s.coring);
  AutomorphismGroup aut = coring_automorphisms(s.coring);
  CHECK(d.grouplikes.size() == 6);
  CHECK(aut.size() == 6);
  PhiG phi = phi_g(d, aut, s.one);
  CHECK(phi.domain.size() == 6);
  CHECK(phi.homomorphism);
  CHECK_FALSE(phi.anti_homomorphism);
  CHECK(phi.kernel == std::vector<Vec>{m->unit()});

  ExactSequenceReport e = exact_sequence_report(d, aut, s.one);
  CHECK(e.pass());
  CHECK(e.surjective == true);
  CHECK(e.cosets.size() == 6);

  MejorReport r = mejor_check(d, aut, s.one);
  CHECK(r.applicable);
  CHECK(r.conditions_hold());
  CHECK(r.pass());
  CHECK(r.group.size() == 6);
  // the transported product is not commutative
  bool abelian = true;
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) abelian = abelian && r.table[x][y] == r.table[y][x];
  CHECK_FALSE(abelian);
}

TEST_CASE("N1 is finer than D1 for M2(F3) over F9") {
  auto m = make_algebra(matrix_algebra(3, 2));
  Subring f9 = subring_closure(*m, {{0, 2, 1, 0}});
  SweedlerCoring s = sweedler(m, f9);
  DescentData d = descent_data(s.coring);
  CHECK(d.units.size() == 48);
  CHECK(d.grouplikes.size() == 6);
  CHECK(d.galois.size() == 6);
  PointedOrbitSet o = std::get<PointedOrbitSet>(d1(d, s.one));
  CHECK(o.size() == 1);
  N1Set n = std::get<N1Set>(n1(d, s.one));
  CHECK(n.orbits.size() == 2);
  CHECK(n.well_defined);
  CHECK(n.surjective);
  CHECK(n.pointed);
  CHECK(unit_stabilizer(d, s.one).size() == 16);
  CHECK(d0(d, s.one).size() == 8);
  CHECK(is_normal_subgroup(d0(d, s.one), unit_stabilizer(d, s.one)));
  CHECK(conjugation_orbits(d, d.units, s.one, true) == o);

  AutomorphismGroup aut = coring_automorphisms(s.coring);
  MejorReport r = mejor_check(d, aut, s.one);
  CHECK(r.applicable);
  CHECK_FALSE(r.conditions_hold());
  CHECK(r.equivalent);
  CHECK(r.pass());
}

TEST_CASE("non-Galois grouplikes") {
  auto f2 = fixtures::field(2, 1);
  Bimodule carrier =
      Bimodule::build(f2, 2, {Matrix::identity(2)}, {Matrix::identity(2)});
  TensorModule cc = tensor_over(carrier, whole_algebra(*f2), carrier);
  Matrix comul(cc.dim(), 2);
  comul.set_col(0, cc.pure({1, 0}, {1, 0}));
  comul.set_col(1, cc.pure({0, 1}, {0, 1}));
  Coring c = Coring::build(carrier, comul, Matrix::from_rows(2, {{1, 1}}));
  DescentData d = descent_data(c);
  CHECK(d.grouplikes.size() == 2);
  CHECK(d.galois.empty());
  CHECK_THROWS_AS(phi_g(d, coring_automorphisms(c), d.grouplikes[0]), Error);
  MejorReport r = mejor_check(d, coring_automorphisms(c), d.grouplikes[0]);
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(units_transitive_on_galois(d));
  require_suite(c);
}

TEST_CASE("empty grouplike set") {
  // The dual of F4 as an F2-coalgebra: grouplikes would be ring maps F4 -> F2.
  auto f2 = fixtures::field(2, 1);
  Bimodule carrier = Bimodule::build(f2, 2, {Matrix::identity(2)}, {Matrix::identity(2)});
  TensorModule cc = tensor_over(carrier, whole_algebra(*f2), carrier);
  Matrix comul(cc.dim(), 2);
  comul.set_col(0, cc.project_raw({1, 0, 0, 1}));
  comul.set_col(1, cc.project_raw({0, 1, 1, 1}));
  Coring c = Coring::build(carrier, comul, Matrix::from_rows(2, {{1, 0}}));
  DescentData d = descent_data(c);
  CHECK(d.grouplikes.empty());
  CHECK(grouplikes_bruteforce(c).empty());
  CHECK(std::holds_alternative<EmptyGrouplikeSet>(d1(d)));
  CHECK(std::holds_alternative<EmptyGrouplikeSet>(n1(d)));
  AutomorphismGroup aut = coring_automorphisms(c);
  CHECK(std::holds_alternative<EmptyGrouplikeSet>(aut_orbits(d, aut)));
  require_suite(c);
}

TEST_CASE("unknown base grouplike") {
  auto f4 = fixtures::field(2, 2);
  SweedlerCoring s = sweedler(f4, prime_subring(*f4));
  DescentData d = descent_data(s.coring);
  CHECK_THROWS_AS(d1(d, Vec{0, 0, 0, 0}), Error);
}

TEST_CASE("cohomology orbits for S3 on F3^3") {
  GroupAction act = fixtures::permutation_action(3, 3);
  UnitGroup u = units(act.algebra());
  auto z = z1(act, u);
  PointedOrbitSet classes = h1(act, u, z);
  CHECK(classes == h1(act, u, z, true));
  CHECK(classes.representative(classes.distinguished).size() == 18);
  // F3^3 with permuted factors is induced from the trivial S2-module, so H1 = H1(S2, U(F3)) = Hom(S2, C2)
  CHECK(classes.size() == 2);
}

TEST_CASE("descent for the swap on F3 x F3") {
  GroupAction act = fixtures::permutation_action(3, 2);
  DualCoring d = dual_coring(act);
  ClasicoReport r = clasico_check(d);
  CHECK(r.pass());
  CHECK(r.d1_size == r.h1_size);
  CHECK(r.h1_size == 1);
}

TEST_CASE("property suite on assorted corings") {
  auto f4 = fixtures::field(2, 2);
  require_suite(sweedler(f4, prime_subring(*f4)).coring);
  require_suite(trivial_coring(fixtures::field(3, 1)));
  auto m = make_algebra(matrix_algebra(2, 2));
  require_suite(sweedler(m, subring_closure(*m, {{0, 1, 1, 1}})).coring);
  require_suite(dual_coring(GroupAction::frobenius(fixtures::field(3, 2), 2)).coring);
  require_suite(comodule_algebra_coring(regular_comodule_algebra(group_algebra(3, FiniteGroup::cyclic(2)))).coring);
}
