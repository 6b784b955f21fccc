#include <set>

#include "coringlab/constructions.hpp"
#include "coringlab/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coringlab;

TEST_CASE("Sweedler coring of F4 over F2") {
  auto f4 = fixtures::field(2, 2);
  SweedlerCoring s = sweedler(f4, prime_subring(*f4));
  const Coring& c = s.coring;
  CHECK(c.dim() == 4);
  CHECK(c.is_grouplike(s.one));
  CHECK(c.epsilon(s.one) == f4->unit());

  auto gl = grouplikes(c);
  CHECK(gl == grouplikes_bruteforce(c));
  CHECK(gl.size() == 3);
  std::set<Vec> family;
  UnitGroup u = units(f4);
  for (std::size_t i = 0; i < u.size(); ++i) family.insert(s.tensor.pure(u[i], u.inverse(i)));
  CHECK(std::vector<Vec>(family.begin(), family.end()) == gl);

  Subring coinv = coinvariants(c, s.one);
  CHECK(coinv == prime_subring(*f4));
  CHECK(is_galois(c, s.one));
  CHECK(galois_grouplikes(c, gl) == gl);

  // alpha (1 (x) 1) alpha^{-1} = alpha (x) alpha^{-1}: the tensor is over F2, not F4
  for (std::size_t i = 0; i < u.size(); ++i)
    CHECK(conjugate_grouplike(c, u[i], s.one) == s.tensor.pure(u[i], u.inverse(i)));

  AutomorphismGroup aut = coring_automorphisms(c);
  CHECK(aut.size() == 3);
  for (std::size_t i = 0; i < aut.size(); ++i) {
    CHECK(is_coring_automorphism(c, aut[i]));
    CHECK(aut.compose(i, aut.inverse(i)) == aut.identity());
  }
  CHECK(aut[aut.identity()] == Matrix::identity(4));
}

TEST_CASE("comodule homs between grouplikes") {
  auto f4 = fixtures::field(2, 2);
  SweedlerCoring s = sweedler(f4, prime_subring(*f4));
  auto gl = grouplikes(s.coring);
  for (const auto& g : gl)
    for (const auto& h : gl) {
      // [g]A and [h]A are isomorphic, so the hom space is one-dimensional over F2
      auto homs = comodule_hom_elements(s.coring, g, h);
      CHECK(homs.size() == 2);
      for (const auto& a : homs) CHECK(s.coring.sandwich(a, g, f4->unit()) == s.coring.sandwich(f4->unit(), h, a));
    }
}

TEST_CASE("perturbed comultiplication is rejected") {
  auto f4 = fixtures::field(2, 2);
  SweedlerCoring s = sweedler(f4, prime_subring(*f4));
  Matrix comul = s.coring.comul();
  comul(0, 0) ^= 1;
  try {
    Coring::build(s.coring.carrier(), comul, s.coring.counit());
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoassociative);
    CHECK(std::string(e.what()).find("basis element") != std::string::npos);
  }
  Matrix counit = s.coring.counit();
  counit(0, 0) ^= 1;
  try {
    Coring::build(s.coring.carrier(), s.coring.comul(), counit);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CounitFails);
  }
}

TEST_CASE("trivial coring") {
  for (Scalar p : {2u, 3u}) {
    auto f = fixtures::field(p, 1);
    Coring c = trivial_coring(f);
    auto gl = grouplikes(c);
    REQUIRE(gl.size() == 1);
    CHECK(gl[0] == f->unit());
    CHECK(is_galois(c, gl[0]));
    CHECK(coring_automorphisms(c).size() == 1);
  }
}

TEST_CASE("grouplike search respects the budget") {
  auto f8 = fixtures::field(2, 3);
  SweedlerCoring s = sweedler(f8, prime_subring(*f8));
  CHECK_THROWS_AS(grouplikes(s.coring, Budget{8, 8}), Error);
  CHECK(grouplikes(s.coring).size() == 7);
}
