#pragma once

// A-bimodules as F_p-spaces with action matrices, tensor products over
// subrings materialized as explicit quotients, and bimodule maps.

#include <memory>
#include <optional>
#include <vector>

#include "coringlab/algebra.hpp"

namespace coringlab {

class Bimodule {
 public:
  // lact[i] is m -> e_i m, ract[i] is m -> m e_i. Throws BadShape, NoUnit,
  // NotARepresentation or ActionsDoNotCommute (each with a witness).
  static Bimodule build(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> lact, std::vector<Matrix> ract);
  // A over itself by left and right multiplication.
  static Bimodule regular(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return data_->algebra; }
  const FiniteAlgebra& alg() const { return *data_->algebra; }
  Scalar p() const { return data_->algebra->p(); }
  std::size_t dim() const { return data_->dim; }
  const Matrix& lact(std::size_t i) const { return data_->lact[i]; }
  const Matrix& ract(std::size_t i) const { return data_->ract[i]; }

  Matrix left(const Vec& a) const;   // m -> a m
  Matrix right(const Vec& a) const;  // m -> m a
  Vec act_left(const Vec& a, const Vec& m) const;
  Vec act_right(const Vec& m, const Vec& a) const;

 private:
  struct Data {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<Matrix> lact;
    std::vector<Matrix> ract;
  };
  std::shared_ptr<const Data> data_;
};

// M (x)_B N. Raw coordinates are indexed (i, j) -> i * dim N + j. The
// quotient keeps the raw coordinates that are not pivots of the reduced
// balancing subspace, so `section` sends quotient basis vectors to raw unit
// vectors and every coordinate is reproducible.
class TensorModule {
 public:
  const Bimodule& left_factor() const { return data_->left; }
  const Bimodule& right_factor() const { return data_->right; }
  const Subring& middle() const { return data_->middle; }
  Scalar p() const { return data_->left.p(); }

  std::size_t dim() const { return data_->section.cols(); }
  std::size_t raw_dim() const { return data_->left.dim() * data_->right.dim(); }
  const Matrix& project() const { return data_->project; }  // dim x raw_dim
  const Matrix& section() const { return data_->section; }  // raw_dim x dim
  // Reduced echelon basis of the balancing subspace (kernel of project).
  const Matrix& relations() const { return data_->relations.basis; }
  // The raw index that quotient basis vector k lifts to.
  std::size_t lift_index(std::size_t k) const { return data_->free_columns[k]; }

  // Induced A-bimodule structure; present when built with induce = true.
  const Bimodule& module() const;
  bool has_module() const { return data_->module.has_value(); }

  Vec project_raw(const Vec& raw) const;
  Vec pure(const Vec& m, const Vec& n) const;  // image of m (x) n

 private:
  friend TensorModule tensor_over(const Bimodule&, const Subring&, const Bimodule&, bool);
  struct Data {
    Bimodule left;
    Bimodule right;
    Subring middle;
    fp::Echelon relations;
    std::vector<std::size_t> free_columns;
    Matrix project;
    Matrix section;
    std::optional<Bimodule> module;
  };
  std::shared_ptr<const Data> data_;
};

// Requires B to be a subring of the common algebra. With induce = false the
// induced bimodule is skipped (used for large triple tensors).
TensorModule tensor_over(const Bimodule& m, const Subring& b, const Bimodule& n, bool induce = true);

class BimoduleMap {
 public:
  // matrix is target.dim x source.dim. Throws BadShape or NotBilinear.
  static BimoduleMap build(Bimodule source, Bimodule target, Matrix matrix);

  const Bimodule& source() const { return source_; }
  const Bimodule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  Vec operator()(const Vec& v) const { return fp::apply(matrix_, v, source_.p()); }

  std::size_t rank() const;
  Matrix kernel() const;  // rows span the kernel
  bool is_bijective() const;
  std::optional<Matrix> inverse_matrix() const;

 private:
  BimoduleMap(Bimodule s, Bimodule t, Matrix m) : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)) {}
  Bimodule source_;
  Bimodule target_;
  Matrix matrix_;
};

// g o f
BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f);

// Matrix of f (x) g : M (x) N -> M' (x) N' in quotient coordinates, where f and
// g are given on the factors. Well-defined whenever f is right B-linear and g
// left B-linear; the caller is responsible for that.
Matrix tensor_of_maps(const TensorModule& source, const Matrix& f, const Matrix& g, const TensorModule& target);

// Same, with the raw images of pure basis tensors supplied by a callback
// that writes into a raw vector of `target`.
template <typename RawImage>
Matrix tensor_map_from_raw(const TensorModule& source, const TensorModule& target, RawImage&& image) {
  Matrix out(target.dim(), source.dim());
  const std::size_t nr = source.right_factor().dim();
  for (std::size_t k = 0; k < source.dim(); ++k) {
    std::size_t raw = source.lift_index(k);
    Vec v = target.project_raw(image(raw / nr, raw % nr));
    out.set_col(k, v);
  }
  return out;
}

// (M (x) N) (x) P -> M (x) (N (x) P), (m (x) n) (x) q -> m (x) (n (x) q).
// `mn` is the inner tensor on the left of `outer_left`, `nq` the inner on the right of `outer_right`.
Matrix assoc_iso(const TensorModule& mn, const TensorModule& outer_left, const TensorModule& nq,
                 const TensorModule& outer_right);

}  // namespace coringlab
