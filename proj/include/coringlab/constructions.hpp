#pragma once

// Coring factories: Sweedler corings of ring extensions, right duals of
// crossed products (with the grouplike <-> 1-cocycle bijection), and
// corings A (x) H of comodule algebras. Also finite non-abelian group
// cohomology Z^1 / H^1 / H^0 with unit coefficients.

#include <variant>
#include <vector>

#include "coringlab/coring.hpp"
#include "coringlab/group.hpp"

namespace coringlab {

// ---- Sweedler coring ----------------------------------------------------

struct SweedlerCoring {
  Coring coring;
  TensorModule tensor;  // A (x)_B A, whose quotient coordinates are the carrier's
  Vec one;              // 1 (x) 1
};

// A (x)_B A with Delta(a (x) a') = (a (x) 1) (x)_A (1 (x) a') and eps = multiplication.
SweedlerCoring sweedler(const AlgebraPtr& algebra, const Subring& b);
// The trivial coring: A with Delta the unit isomorphism A -> A (x)_A A and eps = id.
Coring trivial_coring(const AlgebraPtr& algebra);

// psi_alpha : A (x)_B A -> A (x)_{alpha^{-1} B alpha} A, a (x) a' -> a alpha (x) alpha^{-1} a'.
struct PsiIso {
  TensorModule source;
  TensorModule target;
  Matrix matrix;  // target.dim x source.dim
};

// Throws NotAUnit; checks the raw formula is balanced on the source relations.
PsiIso psi_iso(const AlgebraPtr& algebra, const Subring& b, const Vec& alpha);
// Bijective, and commutes with both Sweedler coring structures.
bool psi_is_coring_iso(const AlgebraPtr& algebra, const Subring& b, const Vec& alpha);

// ---- Crossed products and their duals ----------------------------------

// R = G*A: basis x.e_i at index x * dim A + i, free as a right A-module on G,
// with (x a)(y b) = (x y)(a^y b), equivalently a x = x a^x.
FiniteAlgebra crossed_product(const GroupAction& action);

struct DualCoring {
  GroupAction action;
  AlgebraPtr ring;  // R = G*A
  Coring coring;    // R* over A
  Vec trace;        // t(sum x a_x) = sum a_x

  std::size_t group_order() const { return action.group().order(); }
  std::size_t algebra_dim() const { return action.algebra()->dim(); }
  // h(x) for a carrier element h (its value on the basis element x of R_A).
  Vec value_at(const Vec& h, std::size_t x) const;
};

// Carrier: right A-linear maps R -> A in coordinates (h(x))_{x in G}; bimodule
// actions (a h b)(r) = a h(b r); Delta(h) = sum_x h x (x) x*; eps(h) = h(1).
DualCoring dual_coring(const GroupAction& action);

// A 1-cocycle f : G -> U(A) with f(e) = 1 and f(x y) = f(y) f(x)^y.
struct Cocycle {
  std::vector<Vec> values;  // indexed by group element

  bool operator==(const Cocycle&) const = default;
  auto operator<=>(const Cocycle&) const = default;
  Vec flatten() const;
};

bool is_cocycle(const GroupAction& action, const Cocycle& f);
// Theta(h) = restriction of h to G. Throws NotAGrouplike (or NotACocycle,
// which would indicate the bijection itself failing).
Cocycle theta(const DualCoring& dual, const Vec& h);
// The right A-linear extension x a -> f(x) a. Throws NotACocycle.
Vec theta_inverse(const DualCoring& dual, const Cocycle& f);

// Z^1(G^op, U(A)) by propagating values chosen on a generating set along the
// cocycle identity. Throws TooLarge when |U|^{#generators} exceeds the budget.
std::vector<Cocycle> z1(const GroupAction& action, const UnitGroup& units, const Budget& budget = {});
// Oracle: every function G -> U(A) with f(e) = 1.
std::vector<Cocycle> z1_bruteforce(const GroupAction& action, const UnitGroup& units, const Budget& budget = {});
// f(x) = alpha^{-1} h(x) alpha^x for a single unit alpha
bool are_cohomologous(const GroupAction& action, const UnitGroup& units, const Cocycle& f, const Cocycle& h);
// H^0 = U(A)^G
std::vector<Vec> h0(const GroupAction& action, const UnitGroup& units);

// ---- Hopf algebras and comodule algebras --------------------------------

struct HopfData {
  AlgebraPtr algebra;
  Matrix comul;     // dim^2 x dim, raw H (x)_{F_p} H coordinates
  Matrix counit;    // 1 x dim
  Matrix antipode;  // dim x dim
};

// Throws NotHopf naming the failed identity.
void validate_hopf(const HopfData& h);
// F_p[G] with Delta(x) = x (x) x, eps(x) = 1, S(x) = x^{-1}; basis = group elements.
HopfData group_algebra(Scalar p, const FiniteGroup& group);
FiniteAlgebra group_algebra_ring(Scalar p, const FiniteGroup& group);
// The underlying coalgebra of H seen as an F_p-coring.
Coring hopf_coalgebra(const HopfData& h);

struct ComoduleAlgebra {
  AlgebraPtr algebra;
  HopfData hopf;
  Matrix coaction;  // (dim A * dim H) x dim A, raw A (x) H coordinates
};

// Throws NotComoduleAlgebra naming the failed identity.
void validate_comodule_algebra(const ComoduleAlgebra& ca);
// A = H^a with rho = Delta.
ComoduleAlgebra regular_comodule_algebra(const HopfData& h);

struct ComoduleCoring {
  Coring coring;
  Vec one;  // 1 (x) 1
};

// A (x) H with a'(a (x) h) = a'a (x) h, (a (x) h)a' = a a'_(0) (x) h a'_(1),
// Delta(a (x) h) = (a (x) h_(1)) (x)_A (1 (x) h_(2)), eps(a (x) h) = a eps(h).
ComoduleCoring comodule_algebra_coring(const ComoduleAlgebra& ca);
// {a : rho(a) = a (x) 1}
Subring coaction_coinvariants(const ComoduleAlgebra& ca);
// alpha^{-1} alpha_(0) (x) alpha_(1)
Vec coaction_grouplike(const ComoduleAlgebra& ca, const Vec& alpha);

struct GlEmbeddingReport {
  std::vector<Vec> hopf_grouplikes;           // Gl(H) as a coalgebra
  std::vector<Vec> images;                    // 1 (x) x
  bool images_grouplike = false;
  bool injective = false;
  bool multiplicative = false;                // product formula on images matches 1 (x) xy
  bool pass() const { return images_grouplike && injective && multiplicative; }
};

GlEmbeddingReport gl_embedding_check(const HopfData& h, const Budget& budget = {});

}  // namespace coringlab
