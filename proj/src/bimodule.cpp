#include "coringlab/bimodule.hpp"

#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vec& coeffs, std::size_t dim, Scalar p) {
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t r = 0; r < dim; ++r) fp::axpy(out.row(r), coeffs[i], mats[i].row(r), p);
  }
  return out;
}

std::string witness(const char* what, std::size_t i, std::size_t j) {
  std::ostringstream msg;
  msg << what << " at algebra basis pair (" << i << "," << j << ")";
  return msg.str();
}

}  // namespace

Bimodule Bimodule::build(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> lact, std::vector<Matrix> ract) {
  const FiniteAlgebra& a = *algebra;
  const Scalar p = a.p();
  const std::size_t n = a.dim();
  if (lact.size() != n || ract.size() != n) throw Error(ErrorCode::BadShape, "one action matrix per algebra basis element");
  for (const auto* side : {&lact, &ract})
    for (const auto& m : *side)
      if (m.rows() != dim || m.cols() != dim) throw Error(ErrorCode::BadShape, "action matrices must be dim x dim");

  const Matrix id = Matrix::identity(dim);
  if (combine(lact, a.unit(), dim, p) != id) throw Error(ErrorCode::NoUnit, "1 does not act as the identity on the left");
  if (combine(ract, a.unit(), dim, p) != id) throw Error(ErrorCode::NoUnit, "1 does not act as the identity on the right");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec eij = a.mul(a.basis(i), a.basis(j));
      if (fp::mul(lact[i], lact[j], p) != combine(lact, eij, dim, p))
        throw Error(ErrorCode::NotARepresentation, witness("left action not multiplicative", i, j));
      // m (e_i e_j) = (m e_i) e_j
      if (fp::mul(ract[j], ract[i], p) != combine(ract, eij, dim, p))
        throw Error(ErrorCode::NotARepresentation, witness("right action not multiplicative", i, j));
      if (fp::mul(lact[i], ract[j], p) != fp::mul(ract[j], lact[i], p))
        throw Error(ErrorCode::ActionsDoNotCommute, witness("left and right actions do not commute", i, j));
    }

  Bimodule b;
  b.data_ = std::make_shared<const Data>(Data{std::move(algebra), dim, std::move(lact), std::move(ract)});
  return b;
}

Bimodule Bimodule::regular(AlgebraPtr algebra) {
  std::vector<Matrix> lact, ract;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    lact.push_back(algebra->left_mul(algebra->basis(i)));
    ract.push_back(algebra->right_mul(algebra->basis(i)));
  }
  const std::size_t dim = algebra->dim();
  return build(std::move(algebra), dim, std::move(lact), std::move(ract));
}

Matrix Bimodule::left(const Vec& a) const { return combine(data_->lact, a, dim(), p()); }
Matrix Bimodule::right(const Vec& a) const { return combine(data_->ract, a, dim(), p()); }
Vec Bimodule::act_left(const Vec& a, const Vec& m) const { return fp::apply(left(a), m, p()); }
Vec Bimodule::act_right(const Vec& m, const Vec& a) const { return fp::apply(right(a), m, p()); }

const Bimodule& TensorModule::module() const {
  if (!data_->module) throw Error(ErrorCode::ValidationError, "tensor module was built without induced actions");
  return *data_->module;
}

Vec TensorModule::project_raw(const Vec& raw) const {
  Vec reduced = fp::reduce_against(data_->relations, raw, p());
  Vec out(dim());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = reduced[data_->free_columns[k]];
  return out;
}

Vec TensorModule::pure(const Vec& m, const Vec& n) const { return project_raw(fp::outer(m, n, p())); }

TensorModule tensor_over(const Bimodule& m, const Subring& b, const Bimodule& n, bool induce) {
  const Scalar p = m.p();
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  const std::size_t raw = dm * dn;

  Matrix rel(0, raw);
  for (const Vec& bv : b.basis_vectors()) {
    Matrix mr = m.right(bv);
    Matrix nl = n.left(bv);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) {
        // (m_i b) (x) n_j - m_i (x) (b n_j)
        Vec v(raw, 0);
        for (std::size_t a = 0; a < dm; ++a)
          if (mr(a, i) != 0) v[a * dn + j] = fp::add(v[a * dn + j], mr(a, i), p);
        for (std::size_t c = 0; c < dn; ++c)
          if (nl(c, j) != 0) v[i * dn + c] = fp::sub(v[i * dn + c], nl(c, j), p);
        if (!fp::is_zero(v)) rel.append_row(v);
      }
  }
  if (rel.rows() == 0) rel = Matrix(0, raw);

  auto data = std::make_shared<TensorModule::Data>(TensorModule::Data{m, n, b, fp::row_echelon(std::move(rel), p), {}, {}, {}, std::nullopt});
  std::vector<bool> is_pivot(raw, false);
  for (std::size_t c : data->relations.pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < raw; ++c)
    if (!is_pivot[c]) data->free_columns.push_back(c);

  const std::size_t q = data->free_columns.size();
  data->project = Matrix(q, raw);
  data->section = Matrix(raw, q);
  std::vector<std::size_t> quotient_index(raw, 0);
  for (std::size_t k = 0; k < q; ++k) {
    data->project(k, data->free_columns[k]) = 1;
    data->section(data->free_columns[k], k) = 1;
    quotient_index[data->free_columns[k]] = k;
  }
  for (std::size_t r = 0; r < data->relations.pivots.size(); ++r) {
    std::size_t c = data->relations.pivots[r];
    for (std::size_t k = 0; k < q; ++k) {
      Scalar x = data->relations.basis(r, data->free_columns[k]);
      if (x != 0) data->project(k, c) = fp::neg(x, p);
    }
  }

  TensorModule t;
  t.data_ = data;
  if (induce) {
    std::vector<Matrix> lact, ract;
    const FiniteAlgebra& a = m.alg();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      lact.push_back(tensor_map_from_raw(t, t, [&](std::size_t x, std::size_t y) {
        return fp::outer(m.lact(i).col(x), fp::unit_vector(dn, y), p);
      }));
      ract.push_back(tensor_map_from_raw(t, t, [&](std::size_t x, std::size_t y) {
        return fp::outer(fp::unit_vector(dm, x), n.ract(i).col(y), p);
      }));
    }
    data->module = Bimodule::build(m.algebra(), q, std::move(lact), std::move(ract));
  }
  return t;
}

BimoduleMap BimoduleMap::build(Bimodule source, Bimodule target, Matrix matrix) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw Error(ErrorCode::BadShape, "map matrix must be target.dim x source.dim");
  const Scalar p = source.p();
  const FiniteAlgebra& a = source.alg();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix l1 = fp::mul(matrix, source.lact(i), p);
    Matrix l2 = fp::mul(target.lact(i), matrix, p);
    Matrix r1 = fp::mul(matrix, source.ract(i), p);
    Matrix r2 = fp::mul(target.ract(i), matrix, p);
    for (std::size_t c = 0; c < source.dim(); ++c) {
      if (l1.col(c) != l2.col(c) || r1.col(c) != r2.col(c)) {
        std::ostringstream msg;
        msg << "map does not commute with the action of algebra basis element " << i << " on source basis element "
            << c;
        throw Error(ErrorCode::NotBilinear, msg.str());
      }
    }
  }
  return BimoduleMap(std::move(source), std::move(target), std::move(matrix));
}

std::size_t BimoduleMap::rank() const { return fp::rank(matrix_, source_.p()); }
Matrix BimoduleMap::kernel() const { return fp::kernel(matrix_, source_.p()); }
bool BimoduleMap::is_bijective() const {
  return source_.dim() == target_.dim() && rank() == source_.dim();
}
std::optional<Matrix> BimoduleMap::inverse_matrix() const { return fp::inverse(matrix_, source_.p()); }

BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f) {
  if (f.target().dim() != g.source().dim()) throw Error(ErrorCode::BadShape, "compose: dimension mismatch");
  return BimoduleMap::build(f.source(), g.target(), fp::mul(g.matrix(), f.matrix(), f.source().p()));
}

Matrix tensor_of_maps(const TensorModule& source, const Matrix& f, const Matrix& g, const TensorModule& target) {
  const Scalar p = source.p();
  return tensor_map_from_raw(source, target,
                             [&](std::size_t i, std::size_t j) { return fp::outer(f.col(i), g.col(j), p); });
}

Matrix assoc_iso(const TensorModule& mn, const TensorModule& outer_left, const TensorModule& nq,
                 const TensorModule& outer_right) {
  const Scalar p = mn.p();
  const std::size_t dm = mn.left_factor().dim();
  const std::size_t dn = mn.right_factor().dim();
  const std::size_t dq = nq.right_factor().dim();
  return tensor_map_from_raw(outer_left, outer_right, [&](std::size_t t, std::size_t c) {
    std::size_t raw = mn.lift_index(t);
    std::size_t i = raw / dn;
    std::size_t j = raw % dn;
    return fp::outer(fp::unit_vector(dm, i), nq.pure(fp::unit_vector(dn, j), fp::unit_vector(dq, c)), p);
  });
}

}  // namespace coringlab
