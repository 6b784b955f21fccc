#pragma once

// Finite-dimensional associative unital algebras over F_p, their units and
// subrings.

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coringlab/linalg.hpp"

namespace coringlab {

// Enumeration limits. `enumeration` caps any exhaustive walk over p^n
// elements; `automorphisms` caps the candidate space of the Aut(C) search.
struct Budget {
  std::uint64_t enumeration = std::uint64_t{1} << 24;
  std::uint64_t automorphisms = std::uint64_t{1} << 20;
};

class FiniteAlgebra {
 public:
  // sc[(i * dim + j) * dim + k] is the coefficient of e_k in e_i e_j.
  // Throws NotPrime, BadShape, NotAssociative (witness triple) or NoUnit.
  static FiniteAlgebra build(Scalar p, std::size_t dim, std::vector<Scalar> sc, Vec unit);

  Scalar p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  Scalar sc(std::size_t i, std::size_t j, std::size_t k) const { return sc_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Scalar>& structure_constants() const { return sc_; }

  Vec zero() const { return Vec(dim_, 0); }
  Vec basis(std::size_t i) const { return fp::unit_vector(dim_, i); }
  Vec scalar(Scalar c) const { return fp::scale(unit_, c, p_); }

  Vec mul(const Vec& a, const Vec& b) const;
  Vec add(const Vec& a, const Vec& b) const { return fp::add(a, b, p_); }
  Vec sub(const Vec& a, const Vec& b) const { return fp::sub(a, b, p_); }

  // Matrices of x -> a x and x -> x a.
  Matrix left_mul(const Vec& a) const;
  Matrix right_mul(const Vec& a) const;

  std::optional<Vec> try_inverse(const Vec& a) const;
  Vec inverse(const Vec& a) const;  // throws NotAUnit
  bool is_unit(const Vec& a) const { return try_inverse(a).has_value(); }
  bool is_commutative() const;

  std::uint64_t cardinality(const Budget& budget) const;  // throws TooLarge

 private:
  FiniteAlgebra() = default;

  Scalar p_ = 2;
  std::size_t dim_ = 0;
  std::vector<Scalar> sc_;
  Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

inline AlgebraPtr make_algebra(FiniteAlgebra a) { return std::make_shared<const FiniteAlgebra>(std::move(a)); }

// F_{p^n} on the power basis 1, x, ..., x^{n-1}, reduced modulo the monic
// irreducible of degree n whose lower coefficients have the smallest base-p code.
FiniteAlgebra finite_field(Scalar p, std::size_t n);
// M_n(F_p) on the matrix units e_rc at index r * n + c.
FiniteAlgebra matrix_algebra(Scalar p, std::size_t n);
// The monic irreducible used by finite_field, lowest degree first, leading 1 omitted.
Vec irreducible_polynomial(Scalar p, std::size_t n);

// U(A): units sorted lexicographically by coordinates, with inverses.
class UnitGroup {
 public:
  UnitGroup() = default;
  UnitGroup(AlgebraPtr algebra, std::vector<Vec> elements);

  const std::vector<Vec>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Vec& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  const Vec& inverse(std::size_t i) const { return elements_[inverse_[i]]; }
  std::optional<std::size_t> index_of(const Vec& a) const;
  std::size_t identity_index() const { return identity_; }
  std::size_t mul_index(std::size_t i, std::size_t j) const;
  const AlgebraPtr& algebra() const { return algebra_; }

  // A small generating set picked greedily in sorted order.
  std::vector<std::size_t> generators() const;

 private:
  AlgebraPtr algebra_;
  std::vector<Vec> elements_;
  std::vector<std::size_t> inverse_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t identity_ = 0;
};

// Throws TooLarge when p^dim exceeds budget.enumeration.
UnitGroup units(const AlgebraPtr& algebra, const Budget& budget = {});

// An F_p-subspace closed under multiplication and containing 1, stored by
// its reduced echelon basis so that equality is structural.
class Subring {
 public:
  // Throws NotASubring when the span misses 1 or is not closed.
  static Subring from_span(const FiniteAlgebra& algebra, const std::vector<Vec>& spanning);

  const Matrix& basis() const { return echelon_.basis; }
  std::size_t dim() const { return echelon_.rank(); }
  std::vector<Vec> basis_vectors() const;
  bool contains(const Vec& a, Scalar p) const { return fp::in_span(echelon_, a, p); }
  bool contains_subring(const Subring& other, Scalar p) const;
  std::vector<Vec> elements(Scalar p, const Budget& budget = {}) const;

  bool operator==(const Subring& o) const { return echelon_.basis == o.echelon_.basis; }

 private:
  fp::Echelon echelon_;
};

Subring whole_algebra(const FiniteAlgebra& algebra);
Subring prime_subring(const FiniteAlgebra& algebra);
Subring subring_closure(const FiniteAlgebra& algebra, const std::vector<Vec>& generators);
// alpha^{-1} B alpha. Throws NotAUnit.
Subring conjugate_subring(const FiniteAlgebra& algebra, const Vec& alpha, const Subring& b);
// Every nonzero element is a unit (exhaustive; throws TooLarge).
bool is_division_ring(const FiniteAlgebra& algebra, const Subring& s, const Budget& budget = {});
// Units of A lying in S; these are exactly U(S) because S is finite-dimensional.
std::vector<Vec> subring_units(const FiniteAlgebra& algebra, const Subring& s, const Budget& budget = {});

}  // namespace coringlab
