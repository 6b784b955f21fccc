#include "coringlab/coring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

namespace {

std::optional<std::size_t> first_differing_column(const Matrix& a, const Matrix& b) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (a.col(c) != b.col(c)) return c;
  return std::nullopt;
}

// C (x)_A C -> C, c (x) c' -> c eps(c').
Matrix contract_right(const Coring& c, const TensorModule& cc, const Matrix& counit) {
  const Bimodule& carrier = c.carrier();
  const std::size_t n = carrier.dim();
  Matrix out(n, cc.dim());
  for (std::size_t k = 0; k < cc.dim(); ++k) {
    std::size_t raw = cc.lift_index(k);
    out.set_col(k, carrier.act_right(fp::unit_vector(n, raw / n), counit.col(raw % n)));
  }
  return out;
}

// C (x)_A C -> C, c (x) c' -> eps(c) c'.
Matrix contract_left(const Coring& c, const TensorModule& cc, const Matrix& counit) {
  const Bimodule& carrier = c.carrier();
  const std::size_t n = carrier.dim();
  Matrix out(n, cc.dim());
  for (std::size_t k = 0; k < cc.dim(); ++k) {
    std::size_t raw = cc.lift_index(k);
    out.set_col(k, carrier.act_left(counit.col(raw / n), fp::unit_vector(n, raw % n)));
  }
  return out;
}

}  // namespace

Coring Coring::build(Bimodule carrier, Matrix comul, Matrix counit) {
  const AlgebraPtr& algebra = carrier.algebra();
  const Scalar p = carrier.p();
  const std::size_t n = carrier.dim();
  const Subring whole = whole_algebra(*algebra);
  TensorModule cc = tensor_over(carrier, whole, carrier);
  if (comul.rows() != cc.dim() || comul.cols() != n)
    throw Error(ErrorCode::BadShape, "comultiplication must be dim(C (x)_A C) x dim(C)");
  if (counit.rows() != algebra->dim() || counit.cols() != n)
    throw Error(ErrorCode::BadShape, "counit must be dim(A) x dim(C)");

  Coring c;
  c.data_ = std::make_shared<const Data>(Data{carrier, cc, comul, counit});

  // (C (x) Delta) o Delta against assoc o (Delta (x) C) o Delta.
  const Bimodule& ccm = cc.module();
  TensorModule left_triple = tensor_over(ccm, whole, carrier, false);
  TensorModule right_triple = tensor_over(carrier, whole, ccm, false);
  const Matrix id = Matrix::identity(n);
  Matrix lhs = fp::mul(tensor_of_maps(cc, id, comul, right_triple), comul, p);
  Matrix rhs = fp::mul(assoc_iso(cc, left_triple, cc, right_triple),
                       fp::mul(tensor_of_maps(cc, comul, id, left_triple), comul, p), p);
  if (auto col = first_differing_column(lhs, rhs))
    throw Error(ErrorCode::NotCoassociative, "coassociativity fails on carrier basis element " + std::to_string(*col));

  Matrix right_counit = fp::mul(contract_right(c, cc, counit), comul, p);
  if (auto col = first_differing_column(right_counit, id))
    throw Error(ErrorCode::CounitFails, "(C (x) eps) o Delta != id on carrier basis element " + std::to_string(*col));
  Matrix left_counit = fp::mul(contract_left(c, cc, counit), comul, p);
  if (auto col = first_differing_column(left_counit, id))
    throw Error(ErrorCode::CounitFails, "(eps (x) C) o Delta != id on carrier basis element " + std::to_string(*col));

  BimoduleMap::build(carrier, ccm, comul);
  BimoduleMap::build(carrier, Bimodule::regular(algebra), counit);
  return c;
}

bool Coring::is_grouplike(const Vec& g) const {
  return epsilon(g) == alg().unit() && delta(g) == square(g);
}

Vec Coring::sandwich(const Vec& alpha, const Vec& c, const Vec& beta) const {
  return carrier().act_right(carrier().act_left(alpha, c), beta);
}

std::vector<Vec> grouplikes(const Coring& c, const Budget& budget) {
  const Scalar p = c.p();
  auto g0 = fp::solve(c.counit(), c.alg().unit(), p);
  if (!g0) return {};
  Matrix ker = fp::kernel(c.counit(), p);
  auto count = checked_power(p, ker.rows(), budget.enumeration);
  if (!count) {
    throw Error(ErrorCode::TooLarge, "affine solution space of eps(g) = 1 has p^" + std::to_string(ker.rows()) +
                                         " elements, over the enumeration budget");
  }
  std::vector<Vec> found;
  for (std::uint64_t code = 0; code < *count; ++code) {
    Vec coeff = decode(code, ker.rows(), p);
    Vec g = *g0;
    for (std::size_t i = 0; i < coeff.size(); ++i) fp::axpy(g, coeff[i], ker.row(i), p);
    if (c.delta(g) == c.square(g)) found.push_back(std::move(g));
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Vec> grouplikes_bruteforce(const Coring& c, const Budget& budget) {
  auto count = checked_power(c.p(), c.dim(), budget.enumeration);
  if (!count) throw Error(ErrorCode::TooLarge, "carrier too large for brute-force grouplike search");
  std::vector<Vec> found;
  for (std::uint64_t code = 0; code < *count; ++code) {
    Vec g = decode(code, c.dim(), c.p());
    if (c.is_grouplike(g)) found.push_back(std::move(g));
  }
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

Matrix commutator_system(const Coring& c, const Vec& g, const Vec& h) {
  const std::size_t da = c.alg().dim();
  Matrix m(c.dim(), da);
  for (std::size_t i = 0; i < da; ++i) {
    Vec lhs = fp::apply(c.carrier().lact(i), g, c.p());
    Vec rhs = fp::apply(c.carrier().ract(i), h, c.p());
    m.set_col(i, fp::sub(lhs, rhs, c.p()));
  }
  return m;
}

}  // namespace

Subring coinvariants(const Coring& c, const Vec& g) {
  Matrix k = fp::kernel(commutator_system(c, g, g), c.p());
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < k.rows(); ++r) basis.push_back(k.row_vec(r));
  return Subring::from_span(c.alg(), basis);
}

Matrix comodule_hom_basis(const Coring& c, const Vec& g, const Vec& h) {
  return fp::kernel(commutator_system(c, g, h), c.p());
}

std::vector<Vec> comodule_hom_elements(const Coring& c, const Vec& g, const Vec& h, const Budget& budget) {
  Matrix basis = comodule_hom_basis(c, g, h);
  const Scalar p = c.p();
  auto count = checked_power(p, basis.rows(), budget.enumeration);
  if (!count) throw Error(ErrorCode::TooLarge, "comodule hom space too large to enumerate");
  std::vector<Vec> out;
  for (std::uint64_t code = 0; code < *count; ++code) {
    Vec coeff = decode(code, basis.rows(), p);
    Vec v(c.alg().dim(), 0);
    for (std::size_t i = 0; i < coeff.size(); ++i) fp::axpy(v, coeff[i], basis.row(i), p);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vec conjugate_grouplike(const Coring& c, const Vec& alpha, const Vec& g) {
  Vec alpha_inv = c.alg().inverse(alpha);
  Vec h = c.sandwich(alpha, g, alpha_inv);
  if (!c.is_grouplike(h)) throw Error(ErrorCode::NotAGrouplike, "conjugate is not grouplike; input was not grouplike");
  return h;
}

CanonicalMap canonical_map(const Coring& c, const Vec& g) {
  const FiniteAlgebra& a = c.alg();
  const std::size_t da = a.dim();
  Subring b = coinvariants(c, g);
  Bimodule reg = Bimodule::regular(c.algebra());
  TensorModule t = tensor_over(reg, b, reg);

  Matrix raw_map(c.dim(), t.raw_dim());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) raw_map.set_col(i * da + j, c.sandwich(a.basis(i), g, a.basis(j)));
  // The raw map must kill the balancing relations.
  if (t.relations().rows() > 0) {
    Matrix on_relations = fp::mul(raw_map, fp::transpose(t.relations()), c.p());
    if (!on_relations.is_zero())
      throw Error(ErrorCode::ValidationError, "canonical map is not balanced over the coinvariants");
  }
  Matrix m = fp::mul(raw_map, t.section(), c.p());
  BimoduleMap map = BimoduleMap::build(t.module(), c.carrier(), std::move(m));
  return CanonicalMap{std::move(t), std::move(b), std::move(map)};
}

bool is_galois(const Coring& c, const Vec& g) { return canonical_map(c, g).map.is_bijective(); }

std::vector<Vec> galois_grouplikes(const Coring& c, const std::vector<Vec>& gl) {
  std::vector<Vec> out;
  for (const auto& g : gl)
    if (is_galois(c, g)) out.push_back(g);
  return out;
}

AutomorphismGroup::AutomorphismGroup(const Coring& c, std::vector<Matrix> elements)
    : p_(c.p()), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  const std::size_t n = elements_.size();
  compose_.assign(n, std::vector<std::size_t>(n));
  inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto k = index_of(fp::mul(elements_[i], elements_[j], p_));
      if (!k) throw Error(ErrorCode::NotAGroup, "automorphism set not closed under composition");
      compose_[i][j] = *k;
    }
  auto id = index_of(Matrix::identity(c.dim()));
  if (!id) throw Error(ErrorCode::NotAGroup, "identity automorphism missing");
  identity_ = *id;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find(compose_[i].begin(), compose_[i].end(), identity_);
    if (it == compose_[i].end()) throw Error(ErrorCode::NotAGroup, "automorphism without inverse");
    inverse_[i] = static_cast<std::size_t>(it - compose_[i].begin());
  }
}

std::optional<std::size_t> AutomorphismGroup::index_of(const Matrix& m) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), m);
  if (it == elements_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

bool preserves_comultiplication(const Coring& c, const Matrix& phi) {
  const Scalar p = c.p();
  Matrix lhs = fp::mul(c.comul(), phi, p);
  Matrix rhs = fp::mul(tensor_of_maps(c.cc(), phi, phi, c.cc()), c.comul(), p);
  return lhs == rhs;
}

}  // namespace

bool is_coring_automorphism(const Coring& c, const Matrix& phi) {
  const Scalar p = c.p();
  if (phi.rows() != c.dim() || phi.cols() != c.dim()) return false;
  try {
    BimoduleMap::build(c.carrier(), c.carrier(), phi);
  } catch (const Error&) {
    return false;
  }
  if (fp::mul(c.counit(), phi, p) != c.counit()) return false;
  if (!fp::inverse(phi, p)) return false;
  return preserves_comultiplication(c, phi);
}

AutomorphismGroup coring_automorphisms(const Coring& c, const Budget& budget) {
  const Scalar p = c.p();
  const std::size_t n = c.dim();
  const std::size_t da = c.alg().dim();
  const std::size_t unknowns = n * n;  // phi[r][s] at r * n + s

  Matrix eqs(0, unknowns);
  Vec rhs;
  // phi L - L phi = 0 for every left and right action matrix L.
  auto add_commutation = [&](const Matrix& l) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        Vec row(unknowns, 0);
        for (std::size_t k = 0; k < n; ++k) {
          row[r * n + k] = fp::add(row[r * n + k], l(k, s), p);
          row[k * n + s] = fp::sub(row[k * n + s], l(r, k), p);
        }
        if (!fp::is_zero(row)) {
          eqs.append_row(row);
          rhs.push_back(0);
        }
      }
  };
  for (std::size_t i = 0; i < da; ++i) {
    add_commutation(c.carrier().lact(i));
    add_commutation(c.carrier().ract(i));
  }
  // eps phi = eps
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t s = 0; s < n; ++s) {
      Vec row(unknowns, 0);
      for (std::size_t k = 0; k < n; ++k) row[k * n + s] = c.counit()(a, k);
      eqs.append_row(row);
      rhs.push_back(c.counit()(a, s));
    }

  auto particular = fp::solve(eqs, rhs, p);
  if (!particular) return AutomorphismGroup(c, {});
  Matrix ker = fp::kernel(eqs, p);
  auto count = checked_power(p, ker.rows(), budget.automorphisms);
  if (!count) {
    throw Error(ErrorCode::TooLarge, "automorphism candidate space has p^" + std::to_string(ker.rows()) +
                                         " elements, over the automorphism budget");
  }
  std::vector<Matrix> found;
  for (std::uint64_t code = 0; code < *count; ++code) {
    Vec coeff = decode(code, ker.rows(), p);
    Vec flat = *particular;
    for (std::size_t i = 0; i < coeff.size(); ++i) fp::axpy(flat, coeff[i], ker.row(i), p);
    Matrix phi(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) phi(r, s) = flat[r * n + s];
    if (!fp::inverse(phi, p)) continue;
    if (!preserves_comultiplication(c, phi)) continue;
    found.push_back(std::move(phi));
  }
  return AutomorphismGroup(c, std::move(found));
}

}  // namespace coringlab
