#pragma once

// Dense linear algebra over a prime field F_p. Everything here is exact;
// the modulus travels with each call rather than with the data.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coringlab {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);
  void append_row(std::span<const Scalar> r);

  bool is_zero() const;
  const std::vector<Scalar>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;
  auto operator<=>(const Matrix& other) const { return data_ <=> other.data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

namespace fp {

inline Scalar reduce(std::uint64_t v, Scalar p) { return static_cast<Scalar>(v % p); }
inline Scalar add(Scalar a, Scalar b, Scalar p) { return reduce(std::uint64_t{a} + b, p); }
inline Scalar sub(Scalar a, Scalar b, Scalar p) { return reduce(std::uint64_t{a} + p - b, p); }
inline Scalar neg(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }
inline Scalar mul(Scalar a, Scalar b, Scalar p) { return reduce(std::uint64_t{a} * b, p); }
Scalar pow(Scalar a, std::uint64_t e, Scalar p);
Scalar inv(Scalar a, Scalar p);  // a != 0
Scalar from_int(long long v, Scalar p);

bool is_prime(std::uint64_t n);

Vec add(const Vec& a, const Vec& b, Scalar p);
Vec sub(const Vec& a, const Vec& b, Scalar p);
Vec scale(const Vec& a, Scalar c, Scalar p);
// a += c * b
void axpy(std::span<Scalar> a, Scalar c, std::span<const Scalar> b, Scalar p);
bool is_zero(const Vec& v);
Vec unit_vector(std::size_t n, std::size_t i);

Matrix add(const Matrix& a, const Matrix& b, Scalar p);
Matrix sub(const Matrix& a, const Matrix& b, Scalar p);
Matrix scale(const Matrix& a, Scalar c, Scalar p);
Matrix mul(const Matrix& a, const Matrix& b, Scalar p);
Vec apply(const Matrix& m, const Vec& v, Scalar p);
Matrix transpose(const Matrix& m);
// (a ⊗ b)[(i,k),(j,l)] = a[i][j] b[k][l], row/column pairs ordered lexicographically.
Matrix kron(const Matrix& a, const Matrix& b, Scalar p);
// Raw outer product u ⊗ v, index (i,j) -> i * v.size() + j.
Vec outer(const Vec& u, const Vec& v, Scalar p);

// Reduced row echelon form of a row space. Zero rows are dropped, so
// `basis.rows()` is the rank and the result is canonical for the subspace.
struct Echelon {
  Matrix basis;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

Echelon row_echelon(Matrix rows, Scalar p);
std::size_t rank(const Matrix& m, Scalar p);
// Rows form the canonical (RREF) basis of {x : m x = 0}.
Matrix kernel(const Matrix& m, Scalar p);
// Some x with m x = b (free variables set to zero), or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b, Scalar p);
std::optional<Matrix> inverse(const Matrix& m, Scalar p);
// Remainder of v after eliminating against the pivots of `e`; zero iff v lies in the span.
Vec reduce_against(const Echelon& e, Vec v, Scalar p);
bool in_span(const Echelon& e, const Vec& v, Scalar p);

}  // namespace fp

// Canonical printout: comma-separated residues in basis order.
std::string format_vec(const Vec& v);

// Little-endian base-p encoding of a coordinate vector; used for hashing and
// exhaustive enumeration. `count` returns p^n or nullopt if it exceeds `cap`.
std::uint64_t encode(const Vec& v, Scalar p);
Vec decode(std::uint64_t code, std::size_t n, Scalar p);
std::optional<std::uint64_t> checked_power(Scalar p, std::size_t n, std::uint64_t cap);

}  // namespace coringlab
