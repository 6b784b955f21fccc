#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "coringlab/linalg.hpp"

namespace coringlab {

// Orbits of a group action on a finite set of coordinate vectors, with a
// distinguished orbit. Orbits are sorted internally and ordered by their
// smallest element, which is also the representative.
struct PointedOrbitSet {
  std::vector<std::vector<Vec>> orbits;
  std::size_t distinguished = 0;

  std::size_t size() const { return orbits.size(); }
  const Vec& representative(std::size_t k) const { return orbits[k][0]; }
  std::optional<std::size_t> orbit_of(const Vec& v) const;
  bool is_singleton() const { return orbits.size() == 1; }
  bool operator==(const PointedOrbitSet&) const = default;
};

using PointAction = std::function<Vec(std::size_t, const Vec&)>;

// Breadth-first closure of each point under `generator_count` generators.
// Throws ValidationError if the action leaves `points` or `base` is not a point.
PointedOrbitSet orbits_by_closure(const std::vector<Vec>& points, std::size_t generator_count,
                                  const PointAction& act, const Vec& base);
// Oracle: apply every one of `group_order` elements to every point.
PointedOrbitSet orbits_by_full_product(const std::vector<Vec>& points, std::size_t group_order,
                                       const PointAction& act, const Vec& base);

}  // namespace coringlab
