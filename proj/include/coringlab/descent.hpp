#pragma once

// Descent data of a coring at a grouplike: the unit groups D^0 and U(A)_g,
// the pointed orbit sets D^1 and N^1, the map phi_g into Aut(C), the
// exact-sequence and transitivity reports, and the cocycle side (H^1 and the
// comparison with the dual of a crossed product).

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coringlab/constructions.hpp"
#include "coringlab/orbits.hpp"

namespace coringlab {

// Returned instead of an orbit set when Gl(C) is empty.
struct EmptyGrouplikeSet {};

// What every descent computation needs about one coring, computed once.
struct DescentData {
  Coring coring;
  UnitGroup units;               // U(A)
  std::vector<Vec> grouplikes;   // Gl(C), sorted
  std::vector<Vec> galois;       // Gal(C), sorted
  Budget budget;

  bool is_galois(const Vec& g) const { return std::binary_search(galois.begin(), galois.end(), g); }
};

DescentData descent_data(const Coring& c, const Budget& budget = {});

// A subgroup of U(A), stored like U(A) itself.
using UnitSubgroup = UnitGroup;

// Closed under multiplication (inverses are checked on construction).
bool is_closed(const UnitSubgroup& h);
// n is a normal subgroup of g.
bool is_normal_subgroup(const UnitSubgroup& n, const UnitSubgroup& g);

// D^0(C, g) = U(A^g).
UnitSubgroup d0(const DescentData& d, const Vec& g);
// U(A)_g = {alpha : alpha A^g = A^g alpha}.
UnitSubgroup unit_stabilizer(const DescentData& d, const Vec& g);

// Orbits of alpha . h = alpha h alpha^{-1} for alpha in `acting`, based at g.
// `full_product` switches to the oracle that applies every element.
PointedOrbitSet conjugation_orbits(const DescentData& d, const UnitSubgroup& acting, const Vec& g,
                                   bool full_product = false);

using OrbitResult = std::variant<PointedOrbitSet, EmptyGrouplikeSet>;

// Gl(C) modulo U(A), pointed at the orbit of g (default: the smallest grouplike).
// Throws NotAGrouplike for a base that is not grouplike.
OrbitResult d1(const DescentData& d, const std::optional<Vec>& g = std::nullopt);

struct N1Set {
  PointedOrbitSet orbits;           // Gl(C) modulo U(A)_g
  std::vector<std::size_t> to_d1;   // N^1 -> D^1 on orbit indices
  bool well_defined = false;        // each N^1 orbit lies in one D^1 orbit
  bool surjective = false;
  bool pointed = false;             // base orbit to base orbit
};

std::variant<N1Set, EmptyGrouplikeSet> n1(const DescentData& d, const std::optional<Vec>& g = std::nullopt);

// phi_g(alpha) = can_g o psi_{alpha^{-1}} o can_g^{-1} on U(A)_g.
struct PhiG {
  UnitSubgroup domain;                 // U(A)_g
  std::vector<Matrix> images;          // per element of domain
  std::vector<std::size_t> aut_index;  // position of each image in Aut(C)
  std::vector<Vec> kernel;
  bool homomorphism = false;           // phi(a b) = phi(a) o phi(b)
  bool anti_homomorphism = false;      // phi(a b) = phi(b) o phi(a)
};

// Throws NotGalois.
PhiG phi_g(const DescentData& d, const AutomorphismGroup& aut, const Vec& g);

// U(A) acts transitively on Gal(C) (vacuously false when Gal(C) is empty).
bool units_transitive_on_galois(const DescentData& d);

struct CosetRow {
  Vec representative;          // smallest element of the coset alpha U(A^g)
  std::size_t size = 0;
  std::size_t automorphism = 0;  // index in Aut(C) of phi_g(representative)
};

struct ExactSequenceReport {
  std::size_t stabilizer_order = 0;   // |U(A)_g|
  std::size_t coinvariant_units = 0;  // |U(A^g)|
  std::size_t aut_order = 0;
  bool normal = false;                // U(A^g) normal in U(A)_g
  bool kernel_matches = false;        // ker phi_g = U(A^g)
  bool images_automorphisms = false;  // every phi_g(alpha) is a coring automorphism
  bool homomorphism = false;
  bool anti_homomorphism = false;
  bool transitive = false;
  // Only evaluated when transitive.
  std::optional<bool> surjective;
  std::optional<bool> coset_bijection;
  std::vector<CosetRow> cosets;

  bool pass() const;
};

// Throws NotGalois.
ExactSequenceReport exact_sequence_report(const DescentData& d, const AutomorphismGroup& aut, const Vec& g);

struct MejorReport {
  bool applicable = false;
  std::string reason;  // why not applicable

  bool cond_i = false;    // U(A)_g = U(A)
  bool cond_ii = false;   // U(A)_h = U(A) for every Galois h
  bool cond_iii = false;  // Aut(C) transitive on Gal(C)
  bool equivalent = false;

  // Filled when the conditions hold.
  bool coinvariants_agree = false;  // A^h = A^g for every Galois h
  bool generates = false;           // A g A spans C
  bool xi_bijective = false;        // phi -> phi(g)
  std::vector<Vec> group;           // Gal(C), sorted
  std::vector<std::vector<std::size_t>> table;  // transported multiplication
  std::size_t identity = 0;
  bool is_group = false;
  bool sequence_surjective = false;  // U(A) -> Gal(C), alpha -> alpha^{-1} g alpha
  bool sequence_kernel = false;      // kernel = U(A^g)
  bool sequence_homomorphism = false;

  bool conditions_hold() const { return cond_i && cond_ii && cond_iii; }
  bool pass() const;
};

MejorReport mejor_check(const DescentData& d, const AutomorphismGroup& aut, const Vec& g);

// Gl(C) modulo Aut(C), pointed at g; plus whether Gal(C) is a union of orbits.
struct AutOrbits {
  PointedOrbitSet orbits;
  bool galois_is_union = false;
};

std::variant<AutOrbits, EmptyGrouplikeSet> aut_orbits(const DescentData& d, const AutomorphismGroup& aut,
                                                      const std::optional<Vec>& g = std::nullopt);

// ---- Identities checked on every instance -------------------------------

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;  // first counterexample, empty on success
  bool vacuous = false;  // hypothesis not met on this instance
};

// A^{alpha g alpha^{-1}} = alpha A^g alpha^{-1}
Check check_conjugate_coinvariants(const DescentData& d);
// can_{alpha g alpha^{-1}} o psi_{alpha^{-1}} = can_g, and Galois is conjugation invariant
Check check_canonical_triangle(const DescentData& d);
// A^{phi(g)} = A^g and can_{phi(g)} = phi o can_g
Check check_automorphism_coinvariants(const DescentData& d, const AutomorphismGroup& aut);
// For Galois g, h: A^g = A^h iff phi(h) = g for some phi
Check check_automorphism_transport(const DescentData& d, const AutomorphismGroup& aut);
// U(A^g) normal in U(A)_g
Check check_normality(const DescentData& d);
// beta U(A)_g beta^{-1} = U(A)_{beta g beta^{-1}}
Check check_stabilizer_conjugation(const DescentData& d);
// ker phi_g = U(A^g) for Galois g
Check check_phi_kernel(const DescentData& d, const AutomorphismGroup& aut);
// phi(alpha g alpha^{-1}) = alpha phi(g) alpha^{-1}
Check check_action_commutation(const DescentData& d, const AutomorphismGroup& aut);
// psi_{alpha beta} = psi_beta o psi_alpha over B = A^g
Check check_psi_anti_homomorphism(const DescentData& d);
// N^1 -> D^1 is a well-defined pointed surjection at every grouplike
Check check_n1_surjection(const DescentData& d);
// If A^g or A is a division ring for some Galois g: Gl = Gal = {alpha g alpha^{-1}}
Check check_division_ring_conclusion(const DescentData& d);

std::vector<Check> property_suite(const DescentData& d, const AutomorphismGroup& aut);

// ---- Cocycle side --------------------------------------------------------

// Cohomology classes: orbits of (alpha . h)(x) = alpha^{-1} h(x) alpha^x on Z^1,
// pointed at the trivial cocycle. Points are flattened cocycles.
PointedOrbitSet h1(const GroupAction& action, const UnitGroup& units, const std::vector<Cocycle>& z,
                   bool full_product = false);

struct ClasicoReport {
  std::size_t grouplikes = 0;
  std::size_t cocycles = 0;
  std::optional<bool> z1_matches_oracle;  // unset when the oracle is over budget
  bool theta_bijective = false;
  bool theta_trace_trivial = false;
  bool round_trip = false;
  bool cohomologous_iff_conjugate = false;
  bool d1_h1_bijection = false;  // pointed bijection on classes
  bool d0_equals_h0 = false;
  bool trace_galois = false;
  bool coinvariants_are_invariants = false;  // A^t = A^G
  std::size_t d1_size = 0;
  std::size_t h1_size = 0;

  bool pass() const;
};

ClasicoReport clasico_check(const DualCoring& dual, const Budget& budget = {});

}  // namespace coringlab
