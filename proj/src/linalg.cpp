#include "coringlab/linalg.hpp"

#include <cassert>
#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotASubring: return "NotASubring";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::NotARepresentation: return "NotARepresentation";
    case ErrorCode::ActionsDoNotCommute: return "ActionsDoNotCommute";
    case ErrorCode::NotBilinear: return "NotBilinear";
    case ErrorCode::NotCoassociative: return "NotCoassociative";
    case ErrorCode::CounitFails: return "CounitFails";
    case ErrorCode::NotAGrouplike: return "NotAGrouplike";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotGalois: return "NotGalois";
    case ErrorCode::NotHopf: return "NotHopf";
    case ErrorCode::NotComoduleAlgebra: return "NotComoduleAlgebra";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownTask: return "UnknownTask";
  }
  return "Unknown";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::BadShape, "row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Vec Matrix::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorCode::BadShape, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::append_row(std::span<const Scalar> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorCode::BadShape, "row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  for (Scalar s : data_)
    if (s != 0) return false;
  return true;
}

namespace fp {

Scalar pow(Scalar a, std::uint64_t e, Scalar p) {
  std::uint64_t result = 1 % p;
  std::uint64_t base = a % p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

Scalar inv(Scalar a, Scalar p) {
  assert(a % p != 0);
  return pow(a, p - 2, p);
}

Scalar from_int(long long v, Scalar p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Scalar>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b, Scalar p) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i], p);
  return r;
}

Vec sub(const Vec& a, const Vec& b, Scalar p) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i], p);
  return r;
}

Vec scale(const Vec& a, Scalar c, Scalar p) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c, p);
  return r;
}

void axpy(std::span<Scalar> a, Scalar c, std::span<const Scalar> b, Scalar p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) a[i] = reduce(std::uint64_t{a[i]} + std::uint64_t{c} * b[i], p);
  }
}

bool is_zero(const Vec& v) {
  for (Scalar s : v)
    if (s != 0) return false;
  return true;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Matrix add(const Matrix& a, const Matrix& b, Scalar p) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = add(a(i, j), b(i, j), p);
  return r;
}

Matrix sub(const Matrix& a, const Matrix& b, Scalar p) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = sub(a(i, j), b(i, j), p);
  return r;
}

Matrix scale(const Matrix& a, Scalar c, Scalar p) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = mul(a(i, j), c, p);
  return r;
}

Matrix mul(const Matrix& a, const Matrix& b, Scalar p) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::BadShape, "matrix product shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = r.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) axpy(out, a(i, k), b.row(k), p);
  }
  return r;
}

Vec apply(const Matrix& m, const Vec& v, Scalar p) {
  if (m.cols() != v.size()) throw Error(ErrorCode::BadShape, "matrix-vector shape mismatch");
  Vec r(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t acc = 0;
    auto row = m.row(i);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (row[k] != 0 && v[k] != 0) acc = (acc + std::uint64_t{row[k]} * v[k]) % p;
    }
    r[i] = static_cast<Scalar>(acc);
  }
  return r;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Matrix kron(const Matrix& a, const Matrix& b, Scalar p) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = mul(x, b(k, l), p);
    }
  return r;
}

Vec outer(const Vec& u, const Vec& v, Scalar p) {
  Vec r(u.size() * v.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) r[i * v.size() + j] = mul(u[i], v[j], p);
  }
  return r;
}

Echelon row_echelon(Matrix m, Scalar p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      auto a = m.row(sel);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    Scalar piv_inv = inv(m(r, c), p);
    auto prow = m.row(r);
    for (std::size_t k = c; k < cols; ++k) prow[k] = mul(prow[k], piv_inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      axpy(m.row(i), neg(m(i, c), p), prow, p);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix basis(r, cols);
  for (std::size_t i = 0; i < r; ++i) std::copy(m.row(i).begin(), m.row(i).end(), basis.row(i).begin());
  return {std::move(basis), std::move(pivots)};
}

std::size_t rank(const Matrix& m, Scalar p) { return row_echelon(m, p).rank(); }

Matrix kernel(const Matrix& m, Scalar p) {
  Echelon e = row_echelon(m, p);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  Matrix k(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = neg(e.basis(r, f), p);
    k.append_row(v);
  }
  if (k.rows() == 0) return Matrix(0, n);
  return row_echelon(std::move(k), p).basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b, Scalar p) {
  if (b.size() != m.rows()) throw Error(ErrorCode::BadShape, "solve: rhs length mismatch");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = row_echelon(std::move(aug), p);
  Vec x(n, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == n) return std::nullopt;
    x[e.pivots[r]] = e.basis(r, n);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m, Scalar p) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_echelon(std::move(aug), p);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = e.basis(i, n + j);
  return r;
}

Vec reduce_against(const Echelon& e, Vec v, Scalar p) {
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Scalar c = v[e.pivots[r]];
    if (c != 0) axpy(v, neg(c, p), e.basis.row(r), p);
  }
  return v;
}

bool in_span(const Echelon& e, const Vec& v, Scalar p) { return is_zero(reduce_against(e, v, p)); }

}  // namespace fp

std::string format_vec(const Vec& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

std::uint64_t encode(const Vec& v, Scalar p) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

Vec decode(std::uint64_t code, std::size_t n, Scalar p) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Scalar>(code % p);
    code /= p;
  }
  return v;
}

std::optional<std::uint64_t> checked_power(Scalar p, std::size_t n, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > cap / p) return std::nullopt;
    r *= p;
  }
  if (r > cap) return std::nullopt;
  return r;
}

}  // namespace coringlab
