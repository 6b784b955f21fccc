#include "coringlab/bimodule.hpp"
#include "coringlab/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace coringlab;

TEST_CASE("tensor products over subrings") {
  auto f4 = fixtures::field(2, 2);
  Bimodule reg = Bimodule::regular(f4);
  TensorModule over_f2 = tensor_over(reg, prime_subring(*f4), reg);
  TensorModule over_f4 = tensor_over(reg, whole_algebra(*f4), reg);
  CHECK(over_f2.dim() == 4);
  CHECK(over_f2.relations().rows() == 0);
  CHECK(over_f4.dim() == 2);
  CHECK(over_f4.raw_dim() == 4);
  // balanced: a b (x) c = a (x) b c for b in the middle
  for (std::uint64_t ca = 0; ca < 4; ++ca)
    for (std::uint64_t cb = 0; cb < 4; ++cb)
      for (std::uint64_t cc = 0; cc < 4; ++cc) {
        Vec a = decode(ca, 2, 2), b = decode(cb, 2, 2), c = decode(cc, 2, 2);
        CHECK(over_f4.pure(f4->mul(a, b), c) == over_f4.pure(a, f4->mul(b, c)));
      }
  // section then project is the identity
  CHECK(fp::mul(over_f4.project(), over_f4.section(), 2) == Matrix::identity(2));
}

TEST_CASE("matrix rings: M2 (x)_{M2} M2 has dimension 4") {
  auto m = make_algebra(matrix_algebra(3, 2));
  Bimodule reg = Bimodule::regular(m);
  CHECK(tensor_over(reg, whole_algebra(*m), reg).dim() == 4);
  CHECK(tensor_over(reg, prime_subring(*m), reg).dim() == 16);
  Subring f9 = subring_closure(*m, {{0, 2, 1, 0}});
  CHECK(tensor_over(reg, f9, reg).dim() == 8);
}

TEST_CASE("induced module structure") {
  auto f4 = fixtures::field(2, 2);
  Bimodule reg = Bimodule::regular(f4);
  TensorModule t = tensor_over(reg, prime_subring(*f4), reg);
  const Bimodule& m = t.module();
  Vec x{0, 1}, one{1, 0};
  CHECK(m.act_left(x, t.pure(one, one)) == t.pure(x, one));
  CHECK(m.act_right(t.pure(one, one), x) == t.pure(one, x));
}

TEST_CASE("bimodule validation") {
  auto f4 = fixtures::field(2, 2);
  // left action by the non-multiplicative map x -> 0
  Matrix zero(2, 2);
  std::vector<Matrix> l{Matrix::identity(2), zero}, r{Matrix::identity(2), f4->right_mul({0, 1})};
  CHECK_THROWS_AS(Bimodule::build(f4, 2, l, r), Error);
  CHECK_THROWS_AS(Bimodule::build(f4, 2, {Matrix::identity(2)}, r), Error);
}

TEST_CASE("bimodule maps") {
  auto f4 = fixtures::field(2, 2);
  Bimodule reg = Bimodule::regular(f4);
  BimoduleMap id = BimoduleMap::build(reg, reg, Matrix::identity(2));
  CHECK(id.is_bijective());
  CHECK(id.rank() == 2);
  BimoduleMap times_x = BimoduleMap::build(reg, reg, f4->left_mul({0, 1}));
  CHECK(compose(times_x, times_x).matrix() == f4->left_mul({1, 1}));
  CHECK(times_x.inverse_matrix() == f4->left_mul(f4->inverse({0, 1})));
  BimoduleMap zero = BimoduleMap::build(reg, reg, Matrix(2, 2));
  CHECK(zero.kernel().rows() == 2);

  // the Frobenius map is additive but not F4-linear
  Matrix frob = Matrix::from_rows(2, {{1, 1}, {0, 1}});
  CHECK_THROWS_AS(BimoduleMap::build(reg, reg, frob), Error);
}

TEST_CASE("associator of triple tensors") {
  auto f4 = fixtures::field(2, 2);
  Bimodule reg = Bimodule::regular(f4);
  Subring b = prime_subring(*f4);
  TensorModule mn = tensor_over(reg, b, reg);
  TensorModule nq = tensor_over(reg, b, reg);
  TensorModule left = tensor_over(mn.module(), b, reg);
  TensorModule right = tensor_over(reg, b, nq.module());
  Matrix iso = assoc_iso(mn, left, nq, right);
  CHECK(fp::rank(iso, 2) == left.dim());
  Vec a{0, 1}, c{1, 1}, d{1, 0};
  CHECK(fp::apply(iso, left.pure(mn.pure(a, c), d), 2) == right.pure(a, nq.pure(c, d)));
}
