#pragma once

// Finite groups given by multiplication tables, and actions of them on
// finite algebras by ring automorphisms.

#include <cstddef>
#include <vector>

#include "coringlab/algebra.hpp"

namespace coringlab {

class FiniteGroup {
 public:
  // mul[x][y] = index of x*y. Throws NotAGroup.
  static FiniteGroup build(std::vector<std::vector<std::size_t>> mul);
  static FiniteGroup cyclic(std::size_t n);
  // Permutations of {0..n-1} in lexicographic order; (s*t)(i) = s(t(i)).
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup trivial() { return cyclic(1); }

  std::size_t order() const { return mul_.size(); }
  std::size_t mul(std::size_t x, std::size_t y) const { return mul_[x][y]; }
  std::size_t inv(std::size_t x) const { return inv_[x]; }
  std::size_t identity() const { return id_; }
  const std::vector<std::vector<std::size_t>>& table() const { return mul_; }

  // Greedy generating set in index order.
  std::vector<std::size_t> generators() const;

 private:
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inv_;
  std::size_t id_ = 0;
};

// A right action in exponent notation: a^x = maps[x] a, with
// a^{xy} = (a^x)^y, i.e. maps[x*y] = maps[y] * maps[x] as matrices. This is
// the convention under which the crossed product and the cocycle identity
// f(xy) = f(y) f(x)^y fit together for non-abelian groups.
class GroupAction {
 public:
  // Throws NotAnAutomorphism (with witness) or NotAnAction.
  static GroupAction build(FiniteGroup group, AlgebraPtr algebra, std::vector<Matrix> maps);
  static GroupAction trivial(FiniteGroup group, AlgebraPtr algebra);
  // C_n acting on F_{p^n} (built by finite_field) where the generator 1 is a -> a^p.
  static GroupAction frobenius(AlgebraPtr field, std::size_t n);

  const FiniteGroup& group() const { return group_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const Matrix& map(std::size_t x) const { return maps_[x]; }
  Vec act(const Vec& a, std::size_t x) const { return fp::apply(maps_[x], a, algebra_->p()); }

 private:
  FiniteGroup group_;
  AlgebraPtr algebra_;
  std::vector<Matrix> maps_;
};

}  // namespace coringlab
