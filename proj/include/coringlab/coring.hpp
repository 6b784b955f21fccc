#pragma once

// Corings over a finite algebra: axioms, grouplikes, coinvariants, the
// canonical map and the automorphism group.

#include <optional>
#include <vector>

#include "coringlab/bimodule.hpp"

namespace coringlab {

class Coring {
 public:
  // comul: C -> C (x)_A C in quotient coordinates of tensor_over(C, A, C);
  // counit: C -> A. Checks coassociativity and counitality first (so a
  // corrupted comultiplication is reported as such), then bilinearity.
  // Throws NotCoassociative, CounitFails (with witness basis vector) or NotBilinear.
  static Coring build(Bimodule carrier, Matrix comul, Matrix counit);

  const Bimodule& carrier() const { return data_->carrier; }
  const AlgebraPtr& algebra() const { return data_->carrier.algebra(); }
  const FiniteAlgebra& alg() const { return data_->carrier.alg(); }
  Scalar p() const { return data_->carrier.p(); }
  std::size_t dim() const { return data_->carrier.dim(); }
  const TensorModule& cc() const { return data_->cc; }  // C (x)_A C
  const Matrix& comul() const { return data_->comul; }
  const Matrix& counit() const { return data_->counit; }

  Vec delta(const Vec& c) const { return fp::apply(data_->comul, c, p()); }
  Vec epsilon(const Vec& c) const { return fp::apply(data_->counit, c, p()); }
  Vec square(const Vec& g) const { return data_->cc.pure(g, g); }  // g (x) g
  bool is_grouplike(const Vec& g) const;

  // alpha c beta
  Vec sandwich(const Vec& alpha, const Vec& c, const Vec& beta) const;

 private:
  struct Data {
    Bimodule carrier;
    TensorModule cc;
    Matrix comul;
    Matrix counit;
  };
  std::shared_ptr<const Data> data_;
};

// Gl(C) sorted lexicographically: particular solution of eps(g) = 1 plus
// ker eps, filtered by Delta(g) = g (x) g. Throws TooLarge when the affine
// space exceeds budget.enumeration.
std::vector<Vec> grouplikes(const Coring& c, const Budget& budget = {});
// Oracle: every one of the p^dim carrier elements. Throws TooLarge.
std::vector<Vec> grouplikes_bruteforce(const Coring& c, const Budget& budget = {});

// A^g = {a : a g = g a}.
Subring coinvariants(const Coring& c, const Vec& g);

// Hom([g]A, [h]A) = {alpha : alpha g = h alpha}: rows of the returned matrix
// are a basis; `comodule_hom_elements` enumerates the space.
Matrix comodule_hom_basis(const Coring& c, const Vec& g, const Vec& h);
std::vector<Vec> comodule_hom_elements(const Coring& c, const Vec& g, const Vec& h, const Budget& budget = {});

// alpha g alpha^{-1}. Throws NotAUnit; result checked grouplike.
Vec conjugate_grouplike(const Coring& c, const Vec& alpha, const Vec& g);

struct CanonicalMap {
  TensorModule source;  // A (x)_{A^g} A
  Subring coinvariants;
  BimoduleMap map;      // a (x) a' -> a g a'
};

CanonicalMap canonical_map(const Coring& c, const Vec& g);
bool is_galois(const Coring& c, const Vec& g);
std::vector<Vec> galois_grouplikes(const Coring& c, const std::vector<Vec>& gl);

// Aut(C), sorted by row-major matrix entries, with its group tables.
class AutomorphismGroup {
 public:
  AutomorphismGroup() = default;
  AutomorphismGroup(const Coring& c, std::vector<Matrix> elements);

  std::size_t size() const { return elements_.size(); }
  const Matrix& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Matrix>& elements() const { return elements_; }
  std::size_t compose(std::size_t i, std::size_t j) const { return compose_[i][j]; }  // phi_i o phi_j
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t identity() const { return identity_; }
  std::optional<std::size_t> index_of(const Matrix& m) const;
  Vec apply(std::size_t i, const Vec& v) const { return fp::apply(elements_[i], v, p_); }

 private:
  Scalar p_ = 2;
  std::vector<Matrix> elements_;
  std::vector<std::vector<std::size_t>> compose_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

// Solves the linear conditions (bimodule map, eps o phi = eps), enumerates
// that affine space and keeps the invertible phi with Delta o phi = (phi (x) phi) o Delta.
// Throws TooLarge when the space exceeds budget.automorphisms.
AutomorphismGroup coring_automorphisms(const Coring& c, const Budget& budget = {});
// True when phi is a coring automorphism of c.
bool is_coring_automorphism(const Coring& c, const Matrix& phi);

}  // namespace coringlab
