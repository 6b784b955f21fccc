#include "coringlab/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

// ---- Sweedler -----------------------------------------------------------

SweedlerCoring sweedler(const AlgebraPtr& algebra, const Subring& b) {
  const FiniteAlgebra& a = *algebra;
  const std::size_t da = a.dim();
  Bimodule reg = Bimodule::regular(algebra);
  TensorModule t = tensor_over(reg, b, reg);
  const Bimodule& carrier = t.module();
  TensorModule cc = tensor_over(carrier, whole_algebra(a), carrier);

  Matrix comul(cc.dim(), t.dim());
  Matrix counit(da, t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k) {
    std::size_t raw = t.lift_index(k);
    Vec ai = a.basis(raw / da);
    Vec aj = a.basis(raw % da);
    comul.set_col(k, cc.pure(t.pure(ai, a.unit()), t.pure(a.unit(), aj)));
    counit.set_col(k, a.mul(ai, aj));
  }
  Vec one = t.pure(a.unit(), a.unit());
  return SweedlerCoring{Coring::build(carrier, std::move(comul), std::move(counit)), std::move(t), std::move(one)};
}

Coring trivial_coring(const AlgebraPtr& algebra) {
  const FiniteAlgebra& a = *algebra;
  Bimodule reg = Bimodule::regular(algebra);
  TensorModule cc = tensor_over(reg, whole_algebra(a), reg);
  Matrix comul(cc.dim(), a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) comul.set_col(k, cc.pure(a.basis(k), a.unit()));
  return Coring::build(reg, std::move(comul), Matrix::identity(a.dim()));
}

PsiIso psi_iso(const AlgebraPtr& algebra, const Subring& b, const Vec& alpha) {
  const FiniteAlgebra& a = *algebra;
  const std::size_t da = a.dim();
  Vec alpha_inv = a.inverse(alpha);
  Subring conj = conjugate_subring(a, alpha, b);
  Bimodule reg = Bimodule::regular(algebra);
  TensorModule source = tensor_over(reg, b, reg);
  TensorModule target = tensor_over(reg, conj, reg);

  Matrix raw(target.dim(), source.raw_dim());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      raw.set_col(i * da + j, target.pure(a.mul(a.basis(i), alpha), a.mul(alpha_inv, a.basis(j))));
  if (source.relations().rows() > 0 && !fp::mul(raw, fp::transpose(source.relations()), a.p()).is_zero())
    throw Error(ErrorCode::ValidationError, "psi is not balanced on the source tensor");
  Matrix m = fp::mul(raw, source.section(), a.p());
  return PsiIso{std::move(source), std::move(target), std::move(m)};
}

bool psi_is_coring_iso(const AlgebraPtr& algebra, const Subring& b, const Vec& alpha) {
  const Scalar p = algebra->p();
  PsiIso psi = psi_iso(algebra, b, alpha);
  if (psi.source.dim() != psi.target.dim() || fp::rank(psi.matrix, p) != psi.source.dim()) return false;
  SweedlerCoring s = sweedler(algebra, b);
  SweedlerCoring t = sweedler(algebra, conjugate_subring(*algebra, alpha, b));
  if (fp::mul(t.coring.counit(), psi.matrix, p) != s.coring.counit()) return false;
  Matrix lhs = fp::mul(t.coring.comul(), psi.matrix, p);
  Matrix rhs = fp::mul(tensor_of_maps(s.coring.cc(), psi.matrix, psi.matrix, t.coring.cc()), s.coring.comul(), p);
  if (lhs != rhs) return false;
  BimoduleMap::build(s.coring.carrier(), t.coring.carrier(), psi.matrix);
  return true;
}

// ---- Crossed products ---------------------------------------------------

FiniteAlgebra crossed_product(const GroupAction& action) {
  const FiniteGroup& g = action.group();
  const FiniteAlgebra& a = *action.algebra();
  const std::size_t n = g.order();
  const std::size_t d = a.dim();
  const std::size_t dim = n * d;
  std::vector<Scalar> sc(dim * dim * dim, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t j = 0; j < d; ++j) {
          // (x e_i)(y e_j) = (x y)(e_i^y e_j)
          Vec v = a.mul(action.act(a.basis(i), y), a.basis(j));
          std::size_t xy = g.mul(x, y);
          for (std::size_t k = 0; k < d; ++k) sc[((x * d + i) * dim + (y * d + j)) * dim + xy * d + k] = v[k];
        }
  Vec unit(dim, 0);
  for (std::size_t k = 0; k < d; ++k) unit[g.identity() * d + k] = a.unit()[k];
  return FiniteAlgebra::build(a.p(), dim, std::move(sc), std::move(unit));
}

Vec DualCoring::value_at(const Vec& h, std::size_t x) const {
  const std::size_t d = algebra_dim();
  return Vec(h.begin() + static_cast<std::ptrdiff_t>(x * d), h.begin() + static_cast<std::ptrdiff_t>((x + 1) * d));
}

DualCoring dual_coring(const GroupAction& action) {
  const FiniteGroup& g = action.group();
  const AlgebraPtr& algebra = action.algebra();
  const FiniteAlgebra& a = *algebra;
  const Scalar p = a.p();
  const std::size_t n = g.order();
  const std::size_t d = a.dim();
  const std::size_t dim = n * d;

  AlgebraPtr ring = make_algebra(crossed_product(action));

  std::vector<Matrix> lact, ract;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix l(dim, dim), r(dim, dim);
    Matrix left = a.left_mul(a.basis(i));
    for (std::size_t x = 0; x < n; ++x) {
      // (h e_i)(x) = h(e_i x) = h(x e_i^x) = h(x) e_i^x
      Matrix right = a.right_mul(action.act(a.basis(i), x));
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) {
          l(x * d + s, x * d + t) = left(s, t);
          r(x * d + s, x * d + t) = right(s, t);
        }
    }
    lact.push_back(std::move(l));
    ract.push_back(std::move(r));
  }
  Bimodule carrier = Bimodule::build(algebra, dim, std::move(lact), std::move(ract));
  TensorModule cc = tensor_over(carrier, whole_algebra(a), carrier);

  // x* takes the value 1 on x and 0 on the other basis elements.
  std::vector<Vec> dual_basis;
  for (std::size_t x = 0; x < n; ++x) {
    Vec v(dim, 0);
    for (std::size_t k = 0; k < d; ++k) v[x * d + k] = a.unit()[k];
    dual_basis.push_back(std::move(v));
  }

  Matrix comul(cc.dim(), dim);
  Matrix counit(d, dim);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t k = 0; k < d; ++k) {
      // phi(w) = delta_{w z} e_k; (phi x)(y) = phi(x y) is e_k at y = x^{-1} z.
      Vec col(cc.dim(), 0);
      for (std::size_t x = 0; x < n; ++x) {
        Vec phix(dim, 0);
        phix[g.mul(g.inv(x), z) * d + k] = 1;
        col = fp::add(col, cc.pure(phix, dual_basis[x]), p);
      }
      comul.set_col(z * d + k, col);
      if (z == g.identity()) counit(k, z * d + k) = 1;
    }

  Vec trace(dim, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < d; ++k) trace[x * d + k] = a.unit()[k];

  Coring coring = Coring::build(std::move(carrier), std::move(comul), std::move(counit));
  if (!coring.is_grouplike(trace)) throw Error(ErrorCode::NotAGrouplike, "trace map is not grouplike");
  return DualCoring{action, std::move(ring), std::move(coring), std::move(trace)};
}

// ---- Cocycles -----------------------------------------------------------

Vec Cocycle::flatten() const {
  Vec out;
  for (const auto& v : values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool is_cocycle(const GroupAction& action, const Cocycle& f) {
  const FiniteGroup& g = action.group();
  const FiniteAlgebra& a = *action.algebra();
  if (f.values.size() != g.order()) return false;
  if (f.values[g.identity()] != a.unit()) return false;
  for (const auto& v : f.values)
    if (v.size() != a.dim() || !a.is_unit(v)) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (f.values[g.mul(x, y)] != a.mul(f.values[y], action.act(f.values[x], y))) return false;
  return true;
}

Cocycle theta(const DualCoring& dual, const Vec& h) {
  if (!dual.coring.is_grouplike(h)) throw Error(ErrorCode::NotAGrouplike, "(" + format_vec(h) + ") is not grouplike");
  Cocycle f;
  for (std::size_t x = 0; x < dual.group_order(); ++x) f.values.push_back(dual.value_at(h, x));
  if (!is_cocycle(dual.action, f))
    throw Error(ErrorCode::NotACocycle, "restriction of grouplike (" + format_vec(h) + ") is not a cocycle");
  return f;
}

Vec theta_inverse(const DualCoring& dual, const Cocycle& f) {
  if (!is_cocycle(dual.action, f)) throw Error(ErrorCode::NotACocycle, "(" + format_vec(f.flatten()) + ")");
  Vec h = f.flatten();
  if (!dual.coring.is_grouplike(h))
    throw Error(ErrorCode::NotAGrouplike, "extension of cocycle (" + format_vec(h) + ") is not grouplike");
  return h;
}

std::vector<Cocycle> z1(const GroupAction& action, const UnitGroup& units, const Budget& budget) {
  const FiniteGroup& g = action.group();
  const FiniteAlgebra& a = *action.algebra();
  const std::vector<std::size_t> gens = g.generators();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (count > budget.enumeration / std::max<std::size_t>(units.size(), 1))
      throw Error(ErrorCode::TooLarge, "|U(A)|^#generators exceeds the enumeration budget");
    count *= units.size();
  }

  std::vector<Cocycle> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::optional<Vec>> val(g.order());
    val[g.identity()] = a.unit();
    std::vector<Vec> gen_val;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      gen_val.push_back(units[c % units.size()]);
      c /= units.size();
    }
    bool consistent = true;
    for (std::size_t i = 0; i < gens.size() && consistent; ++i) {
      if (val[gens[i]] && *val[gens[i]] != gen_val[i]) consistent = false;
      val[gens[i]] = gen_val[i];
    }
    // f(x s) = f(s) f(x)^s
    std::vector<std::size_t> queue{g.identity()};
    for (std::size_t i = 0; i < gens.size(); ++i) queue.push_back(gens[i]);
    for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
      std::size_t x = queue[head];
      for (std::size_t i = 0; i < gens.size() && consistent; ++i) {
        std::size_t xs = g.mul(x, gens[i]);
        Vec v = a.mul(gen_val[i], action.act(*val[x], gens[i]));
        if (val[xs]) {
          if (*val[xs] != v) consistent = false;
        } else {
          val[xs] = std::move(v);
          queue.push_back(xs);
        }
      }
    }
    if (!consistent) continue;
    Cocycle f;
    for (auto& v : val) f.values.push_back(std::move(*v));
    if (is_cocycle(action, f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cocycle> z1_bruteforce(const GroupAction& action, const UnitGroup& units, const Budget& budget) {
  const FiniteGroup& g = action.group();
  const std::size_t free_slots = g.order() - 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < free_slots; ++i) {
    if (count > budget.enumeration / std::max<std::size_t>(units.size(), 1))
      throw Error(ErrorCode::TooLarge, "|U(A)|^(|G|-1) exceeds the enumeration budget");
    count *= units.size();
  }
  std::vector<Cocycle> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    Cocycle f;
    std::uint64_t c = code;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (x == g.identity()) {
        f.values.push_back(action.algebra()->unit());
      } else {
        f.values.push_back(units[c % units.size()]);
        c /= units.size();
      }
    }
    if (is_cocycle(action, f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool are_cohomologous(const GroupAction& action, const UnitGroup& units, const Cocycle& f, const Cocycle& h) {
  const FiniteAlgebra& a = *action.algebra();
  for (std::size_t u = 0; u < units.size(); ++u) {
    const Vec& alpha = units[u];
    const Vec& alpha_inv = units.inverse(u);
    bool all = true;
    for (std::size_t x = 0; x < action.group().order() && all; ++x)
      all = f.values[x] == a.mul(a.mul(alpha_inv, h.values[x]), action.act(alpha, x));
    if (all) return true;
  }
  return false;
}

std::vector<Vec> h0(const GroupAction& action, const UnitGroup& units) {
  std::vector<Vec> out;
  for (const auto& alpha : units.elements()) {
    bool fixed = true;
    for (std::size_t x = 0; x < action.group().order() && fixed; ++x) fixed = action.act(alpha, x) == alpha;
    if (fixed) out.push_back(alpha);
  }
  return out;
}

// ---- Hopf algebras ------------------------------------------------------

namespace {

// Product in A1 (x)_{F_p} A2 on raw coordinates: (a (x) b)(c (x) d) = ac (x) bd.
Vec tensor_algebra_mul(const FiniteAlgebra& a1, const FiniteAlgebra& a2, const Vec& u, const Vec& v) {
  const Scalar p = a1.p();
  const std::size_t d2 = a2.dim();
  Vec out(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      Scalar c = fp::mul(u[i], v[j], p);
      Vec left = a1.mul(a1.basis(i / d2), a1.basis(j / d2));
      Vec right = a2.mul(a2.basis(i % d2), a2.basis(j % d2));
      fp::axpy(out, c, fp::outer(left, right, p), p);
    }
  }
  return out;
}

[[noreturn]] void not_hopf(const std::string& what) { throw Error(ErrorCode::NotHopf, what); }
[[noreturn]] void not_comodule(const std::string& what) { throw Error(ErrorCode::NotComoduleAlgebra, what); }

AlgebraPtr prime_field_algebra(Scalar p) { return make_algebra(FiniteAlgebra::build(p, 1, {1}, {1})); }

}  // namespace

void validate_hopf(const HopfData& h) {
  const FiniteAlgebra& a = *h.algebra;
  const Scalar p = a.p();
  const std::size_t n = a.dim();
  if (h.comul.rows() != n * n || h.comul.cols() != n || h.counit.rows() != 1 || h.counit.cols() != n ||
      h.antipode.rows() != n || h.antipode.cols() != n)
    throw Error(ErrorCode::BadShape, "Hopf structure maps have the wrong shape");
  const Matrix id = Matrix::identity(n);
  if (fp::mul(fp::kron(h.comul, id, p), h.comul, p) != fp::mul(fp::kron(id, h.comul, p), h.comul, p))
    not_hopf("comultiplication is not coassociative");
  if (fp::mul(fp::kron(h.counit, id, p), h.comul, p) != id || fp::mul(fp::kron(id, h.counit, p), h.comul, p) != id)
    not_hopf("counit law fails");
  if (fp::apply(h.comul, a.unit(), p) != fp::outer(a.unit(), a.unit(), p)) not_hopf("Delta(1) != 1 (x) 1");
  if (fp::apply(h.counit, a.unit(), p) != Vec{1}) not_hopf("eps(1) != 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = a.mul(a.basis(i), a.basis(j));
      Vec lhs = fp::apply(h.comul, prod, p);
      Vec rhs = tensor_algebra_mul(a, a, h.comul.col(i), h.comul.col(j));
      if (lhs != rhs) not_hopf("Delta is not multiplicative on basis pair " + std::to_string(i) + "," + std::to_string(j));
      if (fp::apply(h.counit, prod, p)[0] != fp::mul(h.counit(0, i), h.counit(0, j), p))
        not_hopf("eps is not multiplicative");
    }
  for (std::size_t k = 0; k < n; ++k) {
    Vec d = h.comul.col(k);
    Vec left(n, 0), right(n, 0);
    for (std::size_t r = 0; r < n * n; ++r) {
      if (d[r] == 0) continue;
      Vec x = a.basis(r / n), y = a.basis(r % n);
      fp::axpy(left, d[r], a.mul(fp::apply(h.antipode, x, p), y), p);
      fp::axpy(right, d[r], a.mul(x, fp::apply(h.antipode, y, p)), p);
    }
    Vec expect = a.scalar(h.counit(0, k));
    if (left != expect || right != expect) not_hopf("antipode identity fails on basis element " + std::to_string(k));
  }
}

FiniteAlgebra group_algebra_ring(Scalar p, const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<Scalar> sc(n * n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) sc[(x * n + y) * n + group.mul(x, y)] = 1;
  return FiniteAlgebra::build(p, n, std::move(sc), fp::unit_vector(n, group.identity()));
}

HopfData group_algebra(Scalar p, const FiniteGroup& group) {
  const std::size_t n = group.order();
  HopfData h{make_algebra(group_algebra_ring(p, group)), Matrix(n * n, n), Matrix(1, n), Matrix(n, n)};
  for (std::size_t x = 0; x < n; ++x) {
    h.comul(x * n + x, x) = 1;
    h.counit(0, x) = 1;
    h.antipode(group.inv(x), x) = 1;
  }
  validate_hopf(h);
  return h;
}

Coring hopf_coalgebra(const HopfData& h) {
  const std::size_t n = h.algebra->dim();
  AlgebraPtr k = prime_field_algebra(h.algebra->p());
  Bimodule carrier = Bimodule::build(k, n, {Matrix::identity(n)}, {Matrix::identity(n)});
  // Over the prime field nothing is identified, so quotient coordinates are raw.
  return Coring::build(std::move(carrier), h.comul, h.counit);
}

void validate_comodule_algebra(const ComoduleAlgebra& ca) {
  const FiniteAlgebra& a = *ca.algebra;
  const FiniteAlgebra& hh = *ca.hopf.algebra;
  const Scalar p = a.p();
  const std::size_t da = a.dim();
  const std::size_t dh = hh.dim();
  if (hh.p() != p) not_comodule("algebra and Hopf algebra live over different primes");
  if (ca.coaction.rows() != da * dh || ca.coaction.cols() != da)
    throw Error(ErrorCode::BadShape, "coaction must be (dim A * dim H) x dim A");
  if (fp::apply(ca.coaction, a.unit(), p) != fp::outer(a.unit(), hh.unit(), p)) not_comodule("rho(1) != 1 (x) 1");
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Vec lhs = fp::apply(ca.coaction, a.mul(a.basis(i), a.basis(j)), p);
      Vec rhs = tensor_algebra_mul(a, hh, ca.coaction.col(i), ca.coaction.col(j));
      if (lhs != rhs) not_comodule("rho is not multiplicative on basis pair " + std::to_string(i) + "," + std::to_string(j));
    }
  const Matrix ida = Matrix::identity(da);
  const Matrix idh = Matrix::identity(dh);
  if (fp::mul(fp::kron(ca.coaction, idh, p), ca.coaction, p) != fp::mul(fp::kron(ida, ca.hopf.comul, p), ca.coaction, p))
    not_comodule("coaction is not coassociative");
  if (fp::mul(fp::kron(ida, ca.hopf.counit, p), ca.coaction, p) != ida) not_comodule("coaction is not counital");
}

ComoduleAlgebra regular_comodule_algebra(const HopfData& h) {
  ComoduleAlgebra ca{h.algebra, h, h.comul};
  validate_comodule_algebra(ca);
  return ca;
}

ComoduleCoring comodule_algebra_coring(const ComoduleAlgebra& ca) {
  validate_comodule_algebra(ca);
  const FiniteAlgebra& a = *ca.algebra;
  const FiniteAlgebra& hh = *ca.hopf.algebra;
  const Scalar p = a.p();
  const std::size_t da = a.dim();
  const std::size_t dh = hh.dim();
  const std::size_t dim = da * dh;

  std::vector<Matrix> lact, ract;
  for (std::size_t i = 0; i < da; ++i) {
    lact.push_back(fp::kron(a.left_mul(a.basis(i)), Matrix::identity(dh), p));
    Matrix r(dim, dim);
    Vec rho = ca.coaction.col(i);
    for (std::size_t s = 0; s < da; ++s)
      for (std::size_t t = 0; t < dh; ++t) {
        Vec col(dim, 0);
        for (std::size_t q = 0; q < dim; ++q) {
          if (rho[q] == 0) continue;
          Vec left = a.mul(a.basis(s), a.basis(q / dh));
          Vec right = hh.mul(hh.basis(t), hh.basis(q % dh));
          fp::axpy(col, rho[q], fp::outer(left, right, p), p);
        }
        r.set_col(s * dh + t, col);
      }
    ract.push_back(std::move(r));
  }
  Bimodule carrier = Bimodule::build(ca.algebra, dim, std::move(lact), std::move(ract));
  TensorModule cc = tensor_over(carrier, whole_algebra(a), carrier);

  Matrix comul(cc.dim(), dim);
  Matrix counit(da, dim);
  for (std::size_t s = 0; s < da; ++s)
    for (std::size_t t = 0; t < dh; ++t) {
      Vec dt = ca.hopf.comul.col(t);
      Vec col(cc.dim(), 0);
      for (std::size_t q = 0; q < dh * dh; ++q) {
        if (dt[q] == 0) continue;
        Vec left = fp::outer(a.basis(s), hh.basis(q / dh), p);
        Vec right = fp::outer(a.unit(), hh.basis(q % dh), p);
        fp::axpy(col, dt[q], cc.pure(left, right), p);
      }
      comul.set_col(s * dh + t, col);
      counit.set_col(s * dh + t, fp::scale(a.basis(s), ca.hopf.counit(0, t), p));
    }
  Vec one = fp::outer(a.unit(), hh.unit(), p);
  Coring coring = Coring::build(std::move(carrier), std::move(comul), std::move(counit));
  if (!coring.is_grouplike(one)) throw Error(ErrorCode::NotAGrouplike, "1 (x) 1 is not grouplike");
  return ComoduleCoring{std::move(coring), std::move(one)};
}

Subring coaction_coinvariants(const ComoduleAlgebra& ca) {
  const FiniteAlgebra& a = *ca.algebra;
  const Scalar p = a.p();
  Matrix sys(ca.coaction.rows(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    sys.set_col(i, fp::sub(ca.coaction.col(i), fp::outer(a.basis(i), ca.hopf.algebra->unit(), p), p));
  Matrix k = fp::kernel(sys, p);
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < k.rows(); ++r) basis.push_back(k.row_vec(r));
  return Subring::from_span(a, basis);
}

Vec coaction_grouplike(const ComoduleAlgebra& ca, const Vec& alpha) {
  const FiniteAlgebra& a = *ca.algebra;
  const Scalar p = a.p();
  const std::size_t dh = ca.hopf.algebra->dim();
  Vec alpha_inv = a.inverse(alpha);
  Vec rho = fp::apply(ca.coaction, alpha, p);
  Vec out(rho.size(), 0);
  for (std::size_t q = 0; q < rho.size(); ++q) {
    if (rho[q] == 0) continue;
    Vec left = a.mul(alpha_inv, a.basis(q / dh));
    fp::axpy(out, rho[q], fp::outer(left, ca.hopf.algebra->basis(q % dh), p), p);
  }
  return out;
}

GlEmbeddingReport gl_embedding_check(const HopfData& h, const Budget& budget) {
  const FiniteAlgebra& hh = *h.algebra;
  const Scalar p = hh.p();
  GlEmbeddingReport rep;
  rep.hopf_grouplikes = grouplikes(hopf_coalgebra(h), budget);

  ComoduleAlgebra ca = regular_comodule_algebra(h);
  ComoduleCoring c = comodule_algebra_coring(ca);
  for (const auto& x : rep.hopf_grouplikes) rep.images.push_back(fp::outer(hh.unit(), x, p));

  rep.images_grouplike = std::all_of(rep.images.begin(), rep.images.end(),
                                     [&](const Vec& v) { return c.coring.is_grouplike(v); });
  std::set<Vec> distinct(rep.images.begin(), rep.images.end());
  rep.injective = distinct.size() == rep.images.size();

  // 1 (x) x is the grouplike alpha^{-1} alpha_(0) (x) alpha_(1) at alpha = x, and
  // the product of two such grouplikes is the one at alpha beta.
  bool mult = true;
  for (std::size_t i = 0; i < rep.hopf_grouplikes.size() && mult; ++i) {
    const Vec& x = rep.hopf_grouplikes[i];
    if (coaction_grouplike(ca, x) != rep.images[i]) mult = false;
    for (std::size_t j = 0; j < rep.hopf_grouplikes.size() && mult; ++j) {
      Vec xy = hh.mul(x, rep.hopf_grouplikes[j]);
      if (!std::binary_search(rep.hopf_grouplikes.begin(), rep.hopf_grouplikes.end(), xy)) mult = false;
      else if (coaction_grouplike(ca, xy) != fp::outer(hh.unit(), xy, p)) mult = false;
    }
  }
  rep.multiplicative = mult;
  return rep;
}

}  // namespace coringlab
