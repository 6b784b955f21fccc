#include "coringlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

FiniteGroup FiniteGroup::build(std::vector<std::vector<std::size_t>> mul) {
  const std::size_t n = mul.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty multiplication table");
  for (const auto& row : mul) {
    if (row.size() != n) throw Error(ErrorCode::NotAGroup, "multiplication table is not square");
    for (std::size_t v : row)
      if (v >= n) throw Error(ErrorCode::NotAGroup, "table entry out of range");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (mul[mul[x][y]][z] != mul[x][mul[y][z]]) {
          std::ostringstream msg;
          msg << "not associative at (" << x << "," << y << "," << z << ")";
          throw Error(ErrorCode::NotAGroup, msg.str());
        }
  std::optional<std::size_t> id;
  for (std::size_t e = 0; e < n && !id; ++e) {
    bool neutral = true;
    for (std::size_t x = 0; x < n && neutral; ++x) neutral = mul[e][x] == x && mul[x][e] == x;
    if (neutral) id = e;
  }
  if (!id) throw Error(ErrorCode::NotAGroup, "no identity element");
  std::vector<std::size_t> inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto it = std::find(mul[x].begin(), mul[x].end(), *id);
    if (it == mul[x].end()) throw Error(ErrorCode::NotAGroup, "element " + std::to_string(x) + " has no inverse");
    std::size_t y = static_cast<std::size_t>(it - mul[x].begin());
    if (mul[y][x] != *id) throw Error(ErrorCode::NotAGroup, "inverse of " + std::to_string(x) + " is one-sided");
    inv[x] = y;
  }
  FiniteGroup g;
  g.mul_ = std::move(mul);
  g.inv_ = std::move(inv);
  g.id_ = *id;
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return build(std::move(mul));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> mul(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      mul[a][b] = index(c);
    }
  return build(std::move(mul));
}

std::vector<std::size_t> FiniteGroup::generators() const {
  std::vector<std::size_t> gens;
  std::vector<bool> reached(order(), false);
  reached[id_] = true;
  std::vector<std::size_t> members{id_};
  for (std::size_t cand = 0; cand < order(); ++cand) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    std::vector<std::size_t> frontier = members;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t x : frontier)
        for (std::size_t s : gens) {
          std::size_t y = mul_[x][s];
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

GroupAction GroupAction::build(FiniteGroup group, AlgebraPtr algebra, std::vector<Matrix> maps) {
  const FiniteAlgebra& a = *algebra;
  const Scalar p = a.p();
  const std::size_t n = a.dim();
  if (maps.size() != group.order()) throw Error(ErrorCode::BadShape, "one matrix per group element is required");
  for (std::size_t x = 0; x < maps.size(); ++x) {
    const Matrix& m = maps[x];
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::BadShape, "action matrices must be dim x dim");
    if (fp::apply(m, a.unit(), p) != a.unit())
      throw Error(ErrorCode::NotAnAutomorphism, "element " + std::to_string(x) + " does not fix 1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec lhs = fp::apply(m, a.mul(a.basis(i), a.basis(j)), p);
        Vec rhs = a.mul(m.col(i), m.col(j));
        if (lhs != rhs) {
          std::ostringstream msg;
          msg << "element " << x << " is not multiplicative on basis pair (" << i << "," << j << ")";
          throw Error(ErrorCode::NotAnAutomorphism, msg.str());
        }
      }
    if (!fp::inverse(m, p)) throw Error(ErrorCode::NotAnAutomorphism, "element " + std::to_string(x) + " is singular");
  }
  if (maps[group.identity()] != Matrix::identity(n))
    throw Error(ErrorCode::NotAnAction, "identity element does not act trivially");
  for (std::size_t x = 0; x < group.order(); ++x)
    for (std::size_t y = 0; y < group.order(); ++y)
      if (maps[group.mul(x, y)] != fp::mul(maps[y], maps[x], p)) {
        std::ostringstream msg;
        msg << "a^(x y) != (a^x)^y for x=" << x << ", y=" << y;
        throw Error(ErrorCode::NotAnAction, msg.str());
      }
  GroupAction act;
  act.group_ = std::move(group);
  act.algebra_ = std::move(algebra);
  act.maps_ = std::move(maps);
  return act;
}

GroupAction GroupAction::trivial(FiniteGroup group, AlgebraPtr algebra) {
  std::vector<Matrix> maps(group.order(), Matrix::identity(algebra->dim()));
  return build(std::move(group), std::move(algebra), std::move(maps));
}

GroupAction GroupAction::frobenius(AlgebraPtr field, std::size_t n) {
  const FiniteAlgebra& f = *field;
  const Scalar p = f.p();
  Matrix frob(f.dim(), f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) {
    Vec v = f.unit();
    for (Scalar k = 0; k < p; ++k) v = f.mul(v, f.basis(j));
    frob.set_col(j, v);
  }
  std::vector<Matrix> maps;
  Matrix power = Matrix::identity(f.dim());
  for (std::size_t k = 0; k < n; ++k) {
    maps.push_back(power);
    power = fp::mul(frob, power, p);
  }
  return build(FiniteGroup::cyclic(n), std::move(field), std::move(maps));
}

}  // namespace coringlab
