#include "coringlab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

FiniteAlgebra FiniteAlgebra::build(Scalar p, std::size_t dim, std::vector<Scalar> sc, Vec unit) {
  if (!fp::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (dim == 0) throw Error(ErrorCode::BadShape, "algebra dimension must be at least 1");
  if (sc.size() != dim * dim * dim) throw Error(ErrorCode::BadShape, "structure constants must have dim^3 entries");
  if (unit.size() != dim) throw Error(ErrorCode::BadShape, "unit must have dim coordinates");
  for (auto& s : sc) s %= p;
  for (auto& s : unit) s %= p;

  FiniteAlgebra a;
  a.p_ = p;
  a.dim_ = dim;
  a.sc_ = std::move(sc);
  a.unit_ = std::move(unit);

  for (std::size_t i = 0; i < dim; ++i) {
    Vec ei = a.basis(i);
    if (a.mul(a.unit_, ei) != ei || a.mul(ei, a.unit_) != ei) {
      throw Error(ErrorCode::NoUnit, "unit is not an identity on basis element " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vec eij = a.mul(a.basis(i), a.basis(j));
      for (std::size_t k = 0; k < dim; ++k) {
        Vec lhs = a.mul(eij, a.basis(k));
        Vec rhs = a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k)));
        if (lhs != rhs) {
          std::ostringstream msg;
          msg << "(e" << i << " e" << j << ") e" << k << " != e" << i << " (e" << j << " e" << k << ")";
          throw Error(ErrorCode::NotAssociative, msg.str());
        }
      }
    }
  return a;
}

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      std::uint64_t c = std::uint64_t{a[i]} * b[j] % p_;
      const Scalar* row = &sc_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (row[k] != 0) acc[k] = (acc[k] + c * row[k]) % p_;
    }
  }
  return Vec(acc.begin(), acc.end());
}

Matrix FiniteAlgebra::left_mul(const Vec& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, mul(a, basis(j)));
  return m;
}

Matrix FiniteAlgebra::right_mul(const Vec& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, mul(basis(j), a));
  return m;
}

std::optional<Vec> FiniteAlgebra::try_inverse(const Vec& a) const {
  auto x = fp::solve(left_mul(a), unit_, p_);
  if (!x) return std::nullopt;
  if (mul(*x, a) != unit_) return std::nullopt;
  return x;
}

Vec FiniteAlgebra::inverse(const Vec& a) const {
  auto x = try_inverse(a);
  if (!x) throw Error(ErrorCode::NotAUnit, "element (" + format_vec(a) + ") has no two-sided inverse");
  return *x;
}

bool FiniteAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (mul(basis(i), basis(j)) != mul(basis(j), basis(i))) return false;
  return true;
}

std::uint64_t FiniteAlgebra::cardinality(const Budget& budget) const {
  auto n = checked_power(p_, dim_, budget.enumeration);
  if (!n) {
    throw Error(ErrorCode::TooLarge, std::to_string(p_) + "^" + std::to_string(dim_) +
                                         " elements exceed the enumeration budget " +
                                         std::to_string(budget.enumeration));
  }
  return *n;
}

namespace {

// Polynomials are coefficient vectors, lowest degree first.
Vec poly_mod(Vec a, const Vec& m, Scalar p) {
  const std::size_t dm = m.size() - 1;
  Scalar lead_inv = fp::inv(m.back(), p);
  while (a.size() > dm) {
    Scalar c = fp::mul(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    if (c != 0)
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = fp::sub(a[shift + i], fp::mul(c, m[i], p), p);
    a.pop_back();
  }
  return a;
}

bool has_factor_of_degree(const Vec& f, std::size_t d, Scalar p) {
  // Try every monic polynomial of degree d as a divisor.
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Vec g = decode(code, d, p);
    g.push_back(1);
    if (fp::is_zero(poly_mod(f, g, p))) return true;
  }
  return false;
}

}  // namespace

Vec irreducible_polynomial(Scalar p, std::size_t n) {
  if (!fp::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n == 0) throw Error(ErrorCode::BadShape, "field degree must be at least 1");
  if (n == 1) return Vec{0};
  auto count = checked_power(p, n, std::uint64_t{1} << 32);
  if (!count) throw Error(ErrorCode::TooLarge, "field too large for irreducible search");
  for (std::uint64_t code = 0; code < *count; ++code) {
    Vec low = decode(code, n, p);
    Vec f = low;
    f.push_back(1);
    if (f[0] == 0) continue;
    bool irreducible = true;
    for (std::size_t d = 1; d <= n / 2 && irreducible; ++d)
      if (has_factor_of_degree(f, d, p)) irreducible = false;
    if (irreducible) return low;
  }
  throw Error(ErrorCode::ValidationError, "no irreducible polynomial found");
}

FiniteAlgebra finite_field(Scalar p, std::size_t n) {
  Vec low = irreducible_polynomial(p, n);
  Vec modulus = low;
  modulus.push_back(1);
  std::vector<Scalar> sc(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod(i + j + 1, 0);
      prod[i + j] = 1;
      Vec r = poly_mod(prod, modulus, p);
      r.resize(n, 0);
      for (std::size_t k = 0; k < n; ++k) sc[(i * n + j) * n + k] = r[k];
    }
  return FiniteAlgebra::build(p, n, std::move(sc), fp::unit_vector(n, 0));
}

FiniteAlgebra matrix_algebra(Scalar p, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadShape, "matrix size must be at least 1");
  const std::size_t dim = n * n;
  std::vector<Scalar> sc(dim * dim * dim, 0);
  Vec unit(dim, 0);
  for (std::size_t r = 0; r < n; ++r) {
    unit[r * n + r] = 1;
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t c = 0; c < n; ++c) sc[((r * n + m) * dim + (m * n + c)) * dim + r * n + c] = 1;
  }
  return FiniteAlgebra::build(p, dim, std::move(sc), std::move(unit));
}

UnitGroup::UnitGroup(AlgebraPtr algebra, std::vector<Vec> elements)
    : algebra_(std::move(algebra)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  const Scalar p = algebra_->p();
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(encode(elements_[i], p), i);
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto inv = algebra_->try_inverse(elements_[i]);
    auto j = inv ? index_of(*inv) : std::nullopt;
    if (!j) throw Error(ErrorCode::NotAGroup, "unit list not closed under inverses");
    inverse_[i] = *j;
  }
  auto id = index_of(algebra_->unit());
  if (!id) throw Error(ErrorCode::NotAGroup, "unit list misses 1");
  identity_ = *id;
}

std::optional<std::size_t> UnitGroup::index_of(const Vec& a) const {
  auto it = index_.find(encode(a, algebra_->p()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t UnitGroup::mul_index(std::size_t i, std::size_t j) const {
  auto k = index_of(algebra_->mul(elements_[i], elements_[j]));
  if (!k) throw Error(ErrorCode::NotAGroup, "unit list not closed under multiplication");
  return *k;
}

std::vector<std::size_t> UnitGroup::generators() const {
  std::vector<std::size_t> gens;
  std::vector<bool> reached(size(), false);
  std::vector<std::size_t> members{identity_};
  reached[identity_] = true;
  for (std::size_t cand = 0; cand < size(); ++cand) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    // Re-close the generated subgroup from scratch under right multiplication by gens.
    std::vector<std::size_t> frontier = members;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t x : frontier)
        for (std::size_t g : gens) {
          std::size_t y = mul_index(x, g);
          if (!reached[y]) {
            reached[y] = true;
            members.push_back(y);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

UnitGroup units(const AlgebraPtr& algebra, const Budget& budget) {
  const std::uint64_t n = algebra->cardinality(budget);
  std::vector<Vec> found;
  for (std::uint64_t code = 0; code < n; ++code) {
    Vec a = decode(code, algebra->dim(), algebra->p());
    if (fp::rank(algebra->left_mul(a), algebra->p()) == algebra->dim() && algebra->is_unit(a)) found.push_back(a);
  }
  return UnitGroup(algebra, std::move(found));
}

Subring Subring::from_span(const FiniteAlgebra& algebra, const std::vector<Vec>& spanning) {
  const Scalar p = algebra.p();
  Subring s;
  s.echelon_ = fp::row_echelon(Matrix::from_rows(algebra.dim(), spanning), p);
  if (!s.contains(algebra.unit(), p)) throw Error(ErrorCode::NotASubring, "span does not contain 1");
  auto basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!s.contains(algebra.mul(basis[i], basis[j]), p)) {
        throw Error(ErrorCode::NotASubring,
                    "product of basis elements " + std::to_string(i) + "," + std::to_string(j) + " leaves the span");
      }
  return s;
}

std::vector<Vec> Subring::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < echelon_.basis.rows(); ++r) out.push_back(echelon_.basis.row_vec(r));
  return out;
}

bool Subring::contains_subring(const Subring& other, Scalar p) const {
  for (const auto& v : other.basis_vectors())
    if (!contains(v, p)) return false;
  return true;
}

std::vector<Vec> Subring::elements(Scalar p, const Budget& budget) const {
  auto n = checked_power(p, dim(), budget.enumeration);
  if (!n) throw Error(ErrorCode::TooLarge, "subring has too many elements to enumerate");
  auto basis = basis_vectors();
  std::vector<Vec> out;
  out.reserve(*n);
  for (std::uint64_t code = 0; code < *n; ++code) {
    Vec coeff = decode(code, dim(), p);
    Vec v(echelon_.basis.cols(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) fp::axpy(v, coeff[i], basis[i], p);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subring whole_algebra(const FiniteAlgebra& algebra) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < algebra.dim(); ++i) basis.push_back(algebra.basis(i));
  return Subring::from_span(algebra, basis);
}

Subring prime_subring(const FiniteAlgebra& algebra) { return Subring::from_span(algebra, {algebra.unit()}); }

Subring subring_closure(const FiniteAlgebra& algebra, const std::vector<Vec>& generators) {
  const Scalar p = algebra.p();
  std::vector<Vec> span = generators;
  span.push_back(algebra.unit());
  fp::Echelon e = fp::row_echelon(Matrix::from_rows(algebra.dim(), span), p);
  for (;;) {
    std::vector<Vec> basis;
    for (std::size_t r = 0; r < e.basis.rows(); ++r) basis.push_back(e.basis.row_vec(r));
    std::vector<Vec> grown = basis;
    for (const auto& a : basis)
      for (const auto& b : basis) {
        Vec ab = algebra.mul(a, b);
        if (!fp::in_span(e, ab, p)) grown.push_back(std::move(ab));
      }
    if (grown.size() == basis.size()) return Subring::from_span(algebra, basis);
    e = fp::row_echelon(Matrix::from_rows(algebra.dim(), grown), p);
  }
}

Subring conjugate_subring(const FiniteAlgebra& algebra, const Vec& alpha, const Subring& b) {
  Vec alpha_inv = algebra.inverse(alpha);
  std::vector<Vec> conj;
  for (const auto& v : b.basis_vectors()) conj.push_back(algebra.mul(algebra.mul(alpha_inv, v), alpha));
  return Subring::from_span(algebra, conj);
}

bool is_division_ring(const FiniteAlgebra& algebra, const Subring& s, const Budget& budget) {
  for (const auto& a : s.elements(algebra.p(), budget)) {
    if (fp::is_zero(a)) continue;
    if (!algebra.is_unit(a)) return false;
  }
  return true;
}

std::vector<Vec> subring_units(const FiniteAlgebra& algebra, const Subring& s, const Budget& budget) {
  std::vector<Vec> out;
  for (auto& a : s.elements(algebra.p(), budget))
    if (algebra.is_unit(a)) out.push_back(std::move(a));
  return out;
}

}  // namespace coringlab
