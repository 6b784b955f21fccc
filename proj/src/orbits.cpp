#include "coringlab/orbits.hpp"

#include <algorithm>
#include <map>

#include "coringlab/error.hpp"

namespace coringlab {

std::optional<std::size_t> PointedOrbitSet::orbit_of(const Vec& v) const {
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (std::binary_search(orbits[k].begin(), orbits[k].end(), v)) return k;
  return std::nullopt;
}

namespace {

PointedOrbitSet finish(std::vector<std::vector<Vec>> orbits, const Vec& base) {
  for (auto& o : orbits) std::sort(o.begin(), o.end());
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  PointedOrbitSet out{std::move(orbits), 0};
  auto k = out.orbit_of(base);
  if (!k) throw Error(ErrorCode::ValidationError, "base point is not among the acted-on points");
  out.distinguished = *k;
  return out;
}

std::map<Vec, std::size_t> index_points(const std::vector<Vec>& points) {
  std::map<Vec, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
  return index;
}

std::size_t lookup(const std::map<Vec, std::size_t>& index, const Vec& v) {
  auto it = index.find(v);
  if (it == index.end()) throw Error(ErrorCode::ValidationError, "action maps a point outside the set");
  return it->second;
}

}  // namespace

PointedOrbitSet orbits_by_closure(const std::vector<Vec>& points, std::size_t generator_count,
                                  const PointAction& act, const Vec& base) {
  auto index = index_points(points);
  std::vector<bool> seen(points.size(), false);
  std::vector<std::vector<Vec>> orbits;
  for (std::size_t start = 0; start < points.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Vec> orbit{points[start]};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::size_t g = 0; g < generator_count; ++g) {
        std::size_t j = lookup(index, act(g, orbit[head]));
        if (!seen[j]) {
          seen[j] = true;
          orbit.push_back(points[j]);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return finish(std::move(orbits), base);
}

PointedOrbitSet orbits_by_full_product(const std::vector<Vec>& points, std::size_t group_order,
                                       const PointAction& act, const Vec& base) {
  auto index = index_points(points);
  std::vector<bool> seen(points.size(), false);
  std::vector<std::vector<Vec>> orbits;
  for (std::size_t start = 0; start < points.size(); ++start) {
    if (seen[start]) continue;
    std::vector<bool> in_orbit(points.size(), false);
    for (std::size_t g = 0; g < group_order; ++g) in_orbit[lookup(index, act(g, points[start]))] = true;
    std::vector<Vec> orbit;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (in_orbit[j]) {
        seen[j] = true;
        orbit.push_back(points[j]);
      }
    orbits.push_back(std::move(orbit));
  }
  return finish(std::move(orbits), base);
}

}  // namespace coringlab
