#include <random>

#include "coringlab/error.hpp"
#include "coringlab/linalg.hpp"
#include "doctest.h"

using namespace coringlab;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Scalar p) {
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Brute-force kernel size by enumerating F_p^n.
std::size_t kernel_count(const Matrix& m, Scalar p) {
  std::size_t count = 0;
  std::uint64_t total = *checked_power(p, m.cols(), 1u << 20);
  for (std::uint64_t code = 0; code < total; ++code)
    if (fp::is_zero(fp::apply(m, decode(code, m.cols(), p), p))) ++count;
  return count;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  CHECK(fp::inv(3, 7) == 5);
  CHECK(fp::pow(2, 10, 1000003) == 1024);
  CHECK(fp::from_int(-1, 5) == 4);
  CHECK(fp::is_prime(65521));
  CHECK_FALSE(fp::is_prime(1));
  CHECK_FALSE(fp::is_prime(91));
}

TEST_CASE("kernel and rank agree with enumeration") {
  std::mt19937 rng(7);
  for (Scalar p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_matrix(rng, 3, 5, p);
      Matrix k = fp::kernel(m, p);
      std::size_t r = fp::rank(m, p);
      CHECK(k.rows() + r == 5);
      CHECK(fp::is_zero(fp::mul(m, fp::transpose(k), p).data()));
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < k.rows(); ++i) expected *= p;
      CHECK(kernel_count(m, p) == expected);
    }
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937 rng(11);
  const Scalar p = 5;
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 4, 4, p);
    auto inv = fp::inverse(m, p);
    if (fp::rank(m, p) == 4) {
      REQUIRE(inv);
      CHECK(fp::mul(m, *inv, p) == Matrix::identity(4));
    } else {
      CHECK_FALSE(inv);
    }
    Vec x = random_matrix(rng, 1, 4, p).data();
    Vec b = fp::apply(m, x, p);
    auto y = fp::solve(m, b, p);
    REQUIRE(y);
    CHECK(fp::apply(m, *y, p) == b);
  }
  Matrix z(2, 2);
  CHECK_FALSE(fp::solve(z, {1, 0}, p));
}

TEST_CASE("echelon form is canonical for the row space") {
  const Scalar p = 3;
  Matrix a = Matrix::from_rows(3, {{1, 2, 0}, {0, 1, 1}});
  Matrix b = Matrix::from_rows(3, {{1, 0, 1}, {2, 2, 1}, {1, 0, 1}});
  CHECK(fp::row_echelon(a, p).basis == fp::row_echelon(b, p).basis);
  auto e = fp::row_echelon(a, p);
  CHECK(fp::in_span(e, {2, 0, 2}, p));
  CHECK_FALSE(fp::in_span(e, {0, 0, 1}, p));
}

TEST_CASE("kron and outer use lexicographic pairs") {
  const Scalar p = 7;
  Matrix a = Matrix::from_rows(2, {{1, 2}, {3, 4}});
  Matrix b = Matrix::from_rows(2, {{0, 1}, {1, 0}});
  Matrix k = fp::kron(a, b, p);
  Vec u{1, 2}, v{3, 1};
  CHECK(fp::apply(k, fp::outer(u, v, p), p) == fp::outer(fp::apply(a, u, p), fp::apply(b, v, p), p));
}

TEST_CASE("base-p encoding is little-endian") {
  CHECK(encode({1, 0, 2}, 3) == 1 + 2 * 9);
  CHECK(decode(19, 3, 3) == Vec{1, 0, 2});
  CHECK(checked_power(2, 16, 1 << 16) == 65536u);
  CHECK_FALSE(checked_power(2, 17, 1 << 16));
  CHECK(format_vec({1, 0, 2}) == "1,0,2");
}
