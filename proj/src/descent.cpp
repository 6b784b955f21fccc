#include "coringlab/descent.hpp"

#include <map>
#include <set>

#include "coringlab/error.hpp"

namespace coringlab {

namespace {

// Per-grouplike caches shared by the property checks.
class Cache {
 public:
  explicit Cache(const DescentData& d) : d_(d) {}

  const Subring& coinv(const Vec& g) {
    auto it = coinv_.find(g);
    if (it == coinv_.end()) it = coinv_.emplace(g, coinvariants(d_.coring, g)).first;
    return it->second;
  }
  const CanonicalMap& can(const Vec& g) {
    auto it = can_.find(g);
    if (it == can_.end()) it = can_.emplace(g, canonical_map(d_.coring, g)).first;
    return it->second;
  }
  const UnitSubgroup& stabilizer(const Vec& g) {
    auto it = stab_.find(g);
    if (it == stab_.end()) it = stab_.emplace(g, unit_stabilizer(d_, g)).first;
    return it->second;
  }

 private:
  const DescentData& d_;
  std::map<Vec, Subring> coinv_;
  std::map<Vec, CanonicalMap> can_;
  std::map<Vec, UnitSubgroup> stab_;
};

Vec conjugate(const DescentData& d, const Vec& alpha, const Vec& alpha_inv, const Vec& g) {
  return d.coring.sandwich(alpha, g, alpha_inv);
}

Vec base_point(const DescentData& d, const std::optional<Vec>& g) {
  if (!g) return d.grouplikes.front();
  if (!std::binary_search(d.grouplikes.begin(), d.grouplikes.end(), *g))
    throw Error(ErrorCode::NotAGrouplike, "(" + format_vec(*g) + ") is not a grouplike of this coring");
  return *g;
}

CanonicalMap galois_map(const DescentData& d, const Vec& g) {
  CanonicalMap can = canonical_map(d.coring, g);
  if (!can.map.is_bijective())
    throw Error(ErrorCode::NotGalois, "(" + format_vec(g) + ") is not Galois: can_g has rank " +
                                          std::to_string(can.map.rank()) + " on a carrier of dimension " +
                                          std::to_string(d.coring.dim()));
  return can;
}

std::string vec_str(const Vec& v) { return "(" + format_vec(v) + ")"; }

}  // namespace

DescentData descent_data(const Coring& c, const Budget& budget) {
  DescentData d{c, units(c.algebra(), budget), grouplikes(c, budget), {}, budget};
  d.galois = galois_grouplikes(c, d.grouplikes);
  return d;
}

bool is_closed(const UnitSubgroup& h) {
  try {
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j) h.mul_index(i, j);
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool is_normal_subgroup(const UnitSubgroup& n, const UnitSubgroup& g) {
  const FiniteAlgebra& a = *g.algebra();
  for (const auto& x : n.elements())
    if (!g.index_of(x)) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& x : n.elements())
      if (!n.index_of(a.mul(a.mul(g[i], x), g.inverse(i)))) return false;
  return true;
}

UnitSubgroup d0(const DescentData& d, const Vec& g) {
  Subring ag = coinvariants(d.coring, g);
  std::vector<Vec> out;
  for (const auto& u : d.units.elements())
    if (ag.contains(u, d.coring.p())) out.push_back(u);
  return UnitSubgroup(d.coring.algebra(), std::move(out));
}

UnitSubgroup unit_stabilizer(const DescentData& d, const Vec& g) {
  const FiniteAlgebra& a = d.coring.alg();
  Subring ag = coinvariants(d.coring, g);
  std::vector<Vec> out;
  for (const auto& u : d.units.elements())
    if (conjugate_subring(a, u, ag) == ag) out.push_back(u);
  return UnitSubgroup(d.coring.algebra(), std::move(out));
}

PointedOrbitSet conjugation_orbits(const DescentData& d, const UnitSubgroup& acting, const Vec& g,
                                   bool full_product) {
  if (full_product) {
    PointAction act = [&](std::size_t k, const Vec& h) { return conjugate(d, acting[k], acting.inverse(k), h); };
    return orbits_by_full_product(d.grouplikes, acting.size(), act, g);
  }
  std::vector<std::size_t> gens = acting.generators();
  PointAction act = [&](std::size_t k, const Vec& h) {
    return conjugate(d, acting[gens[k]], acting.inverse(gens[k]), h);
  };
  return orbits_by_closure(d.grouplikes, gens.size(), act, g);
}

OrbitResult d1(const DescentData& d, const std::optional<Vec>& g) {
  if (d.grouplikes.empty()) return EmptyGrouplikeSet{};
  return conjugation_orbits(d, d.units, base_point(d, g));
}

std::variant<N1Set, EmptyGrouplikeSet> n1(const DescentData& d, const std::optional<Vec>& g) {
  if (d.grouplikes.empty()) return EmptyGrouplikeSet{};
  Vec base = base_point(d, g);
  PointedOrbitSet coarse = conjugation_orbits(d, d.units, base);
  N1Set out;
  out.orbits = conjugation_orbits(d, unit_stabilizer(d, base), base);
  out.well_defined = true;
  std::vector<bool> hit(coarse.size(), false);
  for (const auto& orbit : out.orbits.orbits) {
    std::size_t k = *coarse.orbit_of(orbit.front());
    for (const auto& h : orbit)
      if (*coarse.orbit_of(h) != k) out.well_defined = false;
    out.to_d1.push_back(k);
    hit[k] = true;
  }
  out.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  out.pointed = out.to_d1[out.orbits.distinguished] == coarse.distinguished;
  return out;
}

PhiG phi_g(const DescentData& d, const AutomorphismGroup& aut, const Vec& g) {
  const Scalar p = d.coring.p();
  CanonicalMap can = galois_map(d, g);
  Matrix can_inv = *can.map.inverse_matrix();

  PhiG out;
  out.domain = unit_stabilizer(d, g);
  const std::size_t n = out.domain.size();
  const Matrix id = Matrix::identity(d.coring.dim());
  for (std::size_t i = 0; i < n; ++i) {
    // psi_{alpha^{-1}} goes to A (x)_{alpha A^g alpha^{-1}} A, which is the same tensor for alpha in U(A)_g.
    PsiIso psi = psi_iso(d.coring.algebra(), can.coinvariants, out.domain.inverse(i));
    if (psi.target.relations() != can.source.relations())
      throw Error(ErrorCode::ValidationError, "alpha A^g alpha^{-1} differs from A^g inside U(A)_g");
    Matrix image = fp::mul(can.map.matrix(), fp::mul(psi.matrix, can_inv, p), p);
    auto k = aut.index_of(image);
    out.aut_index.push_back(k ? *k : aut.size());
    if (image == id) out.kernel.push_back(out.domain[i]);
    out.images.push_back(std::move(image));
  }
  out.homomorphism = true;
  out.anti_homomorphism = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& ab = out.images[out.domain.mul_index(i, j)];
      if (ab != fp::mul(out.images[i], out.images[j], p)) out.homomorphism = false;
      if (ab != fp::mul(out.images[j], out.images[i], p)) out.anti_homomorphism = false;
    }
  return out;
}

bool units_transitive_on_galois(const DescentData& d) {
  if (d.galois.empty()) return false;
  PointedOrbitSet orbits = conjugation_orbits(d, d.units, d.galois.front());
  const auto& orbit = orbits.orbits[orbits.distinguished];
  return std::all_of(d.galois.begin(), d.galois.end(),
                     [&](const Vec& h) { return std::binary_search(orbit.begin(), orbit.end(), h); });
}

bool ExactSequenceReport::pass() const {
  bool base = normal && kernel_matches && images_automorphisms && homomorphism;
  if (!transitive) return base;
  return base && surjective.value_or(false) && coset_bijection.value_or(false);
}

ExactSequenceReport exact_sequence_report(const DescentData& d, const AutomorphismGroup& aut, const Vec& g) {
  PhiG phi = phi_g(d, aut, g);
  UnitSubgroup inner = d0(d, g);
  const FiniteAlgebra& a = d.coring.alg();

  ExactSequenceReport r;
  r.stabilizer_order = phi.domain.size();
  r.coinvariant_units = inner.size();
  r.aut_order = aut.size();
  r.normal = is_normal_subgroup(inner, phi.domain);
  std::vector<Vec> kernel = phi.kernel;
  std::sort(kernel.begin(), kernel.end());
  r.kernel_matches = kernel == inner.elements();
  r.images_automorphisms =
      std::all_of(phi.aut_index.begin(), phi.aut_index.end(), [&](std::size_t k) { return k < aut.size(); });
  r.homomorphism = phi.homomorphism;
  r.anti_homomorphism = phi.anti_homomorphism;
  r.transitive = units_transitive_on_galois(d);
  if (!r.transitive) return r;

  std::set<std::size_t> image(phi.aut_index.begin(), phi.aut_index.end());
  r.surjective = r.images_automorphisms && image.size() == aut.size();

  bool bijection = r.images_automorphisms;
  std::vector<bool> assigned(phi.domain.size(), false);
  std::set<std::size_t> coset_images;
  for (std::size_t i = 0; i < phi.domain.size(); ++i) {
    if (assigned[i]) continue;
    CosetRow row{phi.domain[i], 0, phi.aut_index[i]};
    for (const auto& b : inner.elements()) {
      std::size_t j = *phi.domain.index_of(a.mul(phi.domain[i], b));
      if (!assigned[j]) {
        assigned[j] = true;
        ++row.size;
      }
      if (phi.aut_index[j] != row.automorphism) bijection = false;
    }
    if (!coset_images.insert(row.automorphism).second) bijection = false;
    r.cosets.push_back(std::move(row));
  }
  r.coset_bijection = bijection && coset_images.size() == aut.size();
  return r;
}

bool MejorReport::pass() const {
  if (!applicable || !equivalent) return false;
  if (!conditions_hold()) return true;
  return coinvariants_agree && generates && xi_bijective && is_group && sequence_surjective && sequence_kernel &&
         sequence_homomorphism;
}

MejorReport mejor_check(const DescentData& d, const AutomorphismGroup& aut, const Vec& g) {
  MejorReport r;
  if (d.galois.empty()) {
    r.reason = "Gal(C) is empty";
    return r;
  }
  if (!d.is_galois(g)) {
    r.reason = "grouplike " + vec_str(g) + " is not Galois";
    return r;
  }
  if (!units_transitive_on_galois(d)) {
    r.reason = "U(A) does not act transitively on Gal(C)";
    return r;
  }
  r.applicable = true;
  const Coring& c = d.coring;
  const FiniteAlgebra& a = c.alg();
  const Scalar p = c.p();
  Cache cache(d);

  r.cond_i = cache.stabilizer(g).size() == d.units.size();
  r.cond_ii = std::all_of(d.galois.begin(), d.galois.end(),
                          [&](const Vec& h) { return cache.stabilizer(h).size() == d.units.size(); });
  std::set<Vec> reached;
  for (std::size_t k = 0; k < aut.size(); ++k) reached.insert(aut.apply(k, g));
  r.cond_iii = std::all_of(d.galois.begin(), d.galois.end(), [&](const Vec& h) { return reached.count(h) > 0; });
  r.equivalent = r.cond_i == r.cond_ii && r.cond_ii == r.cond_iii;
  if (!r.conditions_hold()) return r;

  r.coinvariants_agree = std::all_of(d.galois.begin(), d.galois.end(),
                                     [&](const Vec& h) { return cache.coinv(h) == cache.coinv(g); });

  Matrix span(0, c.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) span.append_row(c.sandwich(a.basis(i), g, a.basis(j)));
  r.generates = fp::rank(span, p) == c.dim();

  r.group = d.galois;
  const std::size_t n = r.group.size();
  auto index_in_group = [&](const Vec& h) -> std::optional<std::size_t> {
    auto it = std::lower_bound(r.group.begin(), r.group.end(), h);
    if (it == r.group.end() || *it != h) return std::nullopt;
    return static_cast<std::size_t>(it - r.group.begin());
  };
  std::vector<std::size_t> xi_inv(n, aut.size());
  bool bijective = aut.size() == n;
  for (std::size_t k = 0; k < aut.size() && bijective; ++k) {
    auto h = index_in_group(aut.apply(k, g));
    if (!h || xi_inv[*h] != aut.size()) bijective = false;
    else xi_inv[*h] = k;
  }
  r.xi_bijective = bijective;
  if (!bijective) return r;

  r.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r.table[x][y] = *index_in_group(aut.apply(aut.compose(xi_inv[x], xi_inv[y]), g));
  r.identity = *index_in_group(g);
  try {
    FiniteGroup::build(r.table);
    r.is_group = true;
  } catch (const Error&) {
    r.is_group = false;
  }

  // alpha -> alpha^{-1} g alpha = xi_g(phi_g(alpha))
  std::vector<std::optional<std::size_t>> image(d.units.size());
  std::set<std::size_t> hit;
  std::vector<Vec> kernel;
  for (std::size_t u = 0; u < d.units.size(); ++u) {
    image[u] = index_in_group(conjugate(d, d.units.inverse(u), d.units[u], g));
    if (image[u]) hit.insert(*image[u]);
    if (image[u] && *image[u] == r.identity) kernel.push_back(d.units[u]);
  }
  r.sequence_surjective = hit.size() == n && std::all_of(image.begin(), image.end(), [](auto& x) { return x.has_value(); });
  r.sequence_kernel = kernel == d0(d, g).elements();
  r.sequence_homomorphism = r.sequence_surjective;
  for (std::size_t u = 0; u < d.units.size() && r.sequence_homomorphism; ++u)
    for (std::size_t v = 0; v < d.units.size() && r.sequence_homomorphism; ++v)
      if (*image[d.units.mul_index(u, v)] != r.table[*image[u]][*image[v]]) r.sequence_homomorphism = false;
  return r;
}

std::variant<AutOrbits, EmptyGrouplikeSet> aut_orbits(const DescentData& d, const AutomorphismGroup& aut,
                                                      const std::optional<Vec>& g) {
  if (d.grouplikes.empty()) return EmptyGrouplikeSet{};
  PointAction act = [&](std::size_t k, const Vec& h) { return aut.apply(k, h); };
  AutOrbits out{orbits_by_closure(d.grouplikes, aut.size(), act, base_point(d, g)), true};
  for (const auto& orbit : out.orbits.orbits) {
    bool first = d.is_galois(orbit.front());
    for (const auto& h : orbit)
      if (d.is_galois(h) != first) out.galois_is_union = false;
  }
  return out;
}

// ---- Property checks ------------------------------------------------------

namespace {

void fail(Check& c, std::string witness) {
  if (!c.pass) return;
  c.pass = false;
  c.witness = std::move(witness);
}

}  // namespace

Check check_conjugate_coinvariants(const DescentData& d) {
  Check c{"conjugate coinvariants", true, {}, false};
  Cache cache(d);
  const FiniteAlgebra& a = d.coring.alg();
  for (std::size_t u = 0; u < d.units.size() && c.pass; ++u)
    for (const auto& g : d.grouplikes) {
      Vec h = conjugate(d, d.units[u], d.units.inverse(u), g);
      if (cache.coinv(h) != conjugate_subring(a, d.units.inverse(u), cache.coinv(g))) {
        fail(c, "alpha = " + vec_str(d.units[u]) + ", g = " + vec_str(g));
        break;
      }
    }
  return c;
}

Check check_canonical_triangle(const DescentData& d) {
  Check c{"canonical triangle", true, {}, false};
  Cache cache(d);
  const Scalar p = d.coring.p();
  for (std::size_t u = 0; u < d.units.size() && c.pass; ++u)
    for (const auto& g : d.grouplikes) {
      const Vec& alpha = d.units[u];
      const Vec& alpha_inv = d.units.inverse(u);
      Vec h = conjugate(d, alpha, alpha_inv, g);
      const CanonicalMap& can_g = cache.can(g);
      const CanonicalMap& can_h = cache.can(h);
      PsiIso psi = psi_iso(d.coring.algebra(), can_g.coinvariants, alpha_inv);
      std::string where = "alpha = " + vec_str(alpha) + ", g = " + vec_str(g);
      if (psi.target.relations() != can_h.source.relations()) {
        fail(c, where + ": tensor targets differ");
        break;
      }
      if (fp::mul(can_h.map.matrix(), psi.matrix, p) != can_g.map.matrix()) {
        fail(c, where);
        break;
      }
      if (can_g.map.is_bijective() != can_h.map.is_bijective()) {
        fail(c, where + ": Galois property not preserved");
        break;
      }
    }
  return c;
}

Check check_automorphism_coinvariants(const DescentData& d, const AutomorphismGroup& aut) {
  Check c{"automorphism coinvariants", true, {}, false};
  Cache cache(d);
  const Scalar p = d.coring.p();
  for (std::size_t k = 0; k < aut.size() && c.pass; ++k)
    for (const auto& g : d.grouplikes) {
      Vec h = aut.apply(k, g);
      std::string where = "phi #" + std::to_string(k) + ", g = " + vec_str(g);
      if (!d.coring.is_grouplike(h)) {
        fail(c, where + ": phi(g) not grouplike");
        break;
      }
      if (cache.coinv(h) != cache.coinv(g)) {
        fail(c, where);
        break;
      }
      if (cache.can(h).map.matrix() != fp::mul(aut[k], cache.can(g).map.matrix(), p)) {
        fail(c, where + ": can_{phi(g)} != phi o can_g");
        break;
      }
      if (d.is_galois(g) != d.is_galois(h)) {
        fail(c, where + ": Galois property not preserved");
        break;
      }
    }
  return c;
}

Check check_automorphism_transport(const DescentData& d, const AutomorphismGroup& aut) {
  Check c{"automorphism transport", true, {}, d.galois.empty()};
  Cache cache(d);
  for (const auto& g : d.galois)
    for (const auto& h : d.galois) {
      bool same = cache.coinv(g) == cache.coinv(h);
      bool moved = false;
      for (std::size_t k = 0; k < aut.size() && !moved; ++k) moved = aut.apply(k, h) == g;
      if (same != moved) {
        fail(c, "g = " + vec_str(g) + ", h = " + vec_str(h));
        return c;
      }
    }
  return c;
}

Check check_normality(const DescentData& d) {
  Check c{"normality", true, {}, false};
  for (const auto& g : d.grouplikes)
    if (!is_normal_subgroup(d0(d, g), unit_stabilizer(d, g))) {
      fail(c, "g = " + vec_str(g));
      break;
    }
  return c;
}

Check check_stabilizer_conjugation(const DescentData& d) {
  Check c{"stabilizer conjugation", true, {}, false};
  Cache cache(d);
  const FiniteAlgebra& a = d.coring.alg();
  for (std::size_t b = 0; b < d.units.size() && c.pass; ++b)
    for (const auto& g : d.grouplikes) {
      const Vec& beta = d.units[b];
      const Vec& beta_inv = d.units.inverse(b);
      std::vector<Vec> conj;
      for (const auto& alpha : cache.stabilizer(g).elements()) conj.push_back(a.mul(a.mul(beta, alpha), beta_inv));
      std::sort(conj.begin(), conj.end());
      if (conj != cache.stabilizer(conjugate(d, beta, beta_inv, g)).elements()) {
        fail(c, "beta = " + vec_str(beta) + ", g = " + vec_str(g));
        break;
      }
    }
  return c;
}

Check check_phi_kernel(const DescentData& d, const AutomorphismGroup& aut) {
  Check c{"phi_g kernel", true, {}, d.galois.empty()};
  for (const auto& g : d.galois) {
    PhiG phi = phi_g(d, aut, g);
    std::vector<Vec> kernel = phi.kernel;
    std::sort(kernel.begin(), kernel.end());
    if (kernel != d0(d, g).elements()) {
      fail(c, "g = " + vec_str(g));
      break;
    }
    if (!phi.homomorphism) {
      fail(c, "g = " + vec_str(g) + ": phi_g not multiplicative");
      break;
    }
  }
  return c;
}

Check check_action_commutation(const DescentData& d, const AutomorphismGroup& aut) {
  Check c{"action commutation", true, {}, false};
  for (std::size_t k = 0; k < aut.size() && c.pass; ++k)
    for (std::size_t u = 0; u < d.units.size() && c.pass; ++u)
      for (const auto& g : d.grouplikes) {
        const Vec& alpha = d.units[u];
        const Vec& alpha_inv = d.units.inverse(u);
        if (aut.apply(k, conjugate(d, alpha, alpha_inv, g)) != conjugate(d, alpha, alpha_inv, aut.apply(k, g))) {
          fail(c, "phi #" + std::to_string(k) + ", alpha = " + vec_str(alpha) + ", g = " + vec_str(g));
          break;
        }
      }
  return c;
}

Check check_psi_anti_homomorphism(const DescentData& d) {
  Check c{"psi anti-homomorphism", true, {}, false};
  const FiniteAlgebra& a = d.coring.alg();
  const Scalar p = a.p();
  std::vector<Subring> seen;
  for (const auto& g : d.grouplikes) {
    Subring b = coinvariants(d.coring, g);
    if (std::find(seen.begin(), seen.end(), b) != seen.end()) continue;
    seen.push_back(b);
    for (std::size_t i = 0; i < d.units.size(); ++i) {
      PsiIso psi_a = psi_iso(d.coring.algebra(), b, d.units[i]);
      Subring shifted = conjugate_subring(a, d.units[i], b);
      for (std::size_t j = 0; j < d.units.size(); ++j) {
        PsiIso psi_b = psi_iso(d.coring.algebra(), shifted, d.units[j]);
        PsiIso psi_ab = psi_iso(d.coring.algebra(), b, a.mul(d.units[i], d.units[j]));
        if (psi_ab.target.relations() != psi_b.target.relations() ||
            psi_ab.matrix != fp::mul(psi_b.matrix, psi_a.matrix, p)) {
          fail(c, "alpha = " + vec_str(d.units[i]) + ", beta = " + vec_str(d.units[j]));
          return c;
        }
      }
    }
  }
  return c;
}

Check check_n1_surjection(const DescentData& d) {
  Check c{"N1 to D1 surjection", true, {}, d.grouplikes.empty()};
  for (const auto& g : d.grouplikes) {
    N1Set s = std::get<N1Set>(n1(d, g));
    if (!s.well_defined || !s.surjective || !s.pointed) {
      fail(c, "g = " + vec_str(g));
      break;
    }
  }
  return c;
}

Check check_division_ring_conclusion(const DescentData& d) {
  Check c{"division ring conclusion", true, {}, true};
  const FiniteAlgebra& a = d.coring.alg();
  bool a_division = is_division_ring(a, whole_algebra(a), d.budget);
  for (const auto& g : d.galois) {
    if (!a_division && !is_division_ring(a, coinvariants(d.coring, g), d.budget)) continue;
    c.vacuous = false;
    PointedOrbitSet orbits = conjugation_orbits(d, d.units, g);
    const auto& orbit = orbits.orbits[orbits.distinguished];
    if (d.galois != d.grouplikes || orbit != d.grouplikes) {
      fail(c, "g = " + vec_str(g));
      break;
    }
  }
  return c;
}

std::vector<Check> property_suite(const DescentData& d, const AutomorphismGroup& aut) {
  return {check_conjugate_coinvariants(d),
          check_canonical_triangle(d),
          check_automorphism_coinvariants(d, aut),
          check_automorphism_transport(d, aut),
          check_normality(d),
          check_stabilizer_conjugation(d),
          check_phi_kernel(d, aut),
          check_action_commutation(d, aut),
          check_psi_anti_homomorphism(d),
          check_n1_surjection(d),
          check_division_ring_conclusion(d)};
}

// ---- Cocycles -------------------------------------------------------------

PointedOrbitSet h1(const GroupAction& action, const UnitGroup& units, const std::vector<Cocycle>& z,
                   bool full_product) {
  const FiniteAlgebra& a = *action.algebra();
  const std::size_t n = action.group().order();
  const std::size_t dim = a.dim();
  std::vector<Vec> points;
  for (const auto& f : z) points.push_back(f.flatten());
  std::sort(points.begin(), points.end());

  // (alpha . h)(x) = alpha^{-1} h(x) alpha^x
  auto twist = [&](std::size_t u, const Vec& flat) {
    Vec out;
    for (std::size_t x = 0; x < n; ++x) {
      Vec hx(flat.begin() + static_cast<std::ptrdiff_t>(x * dim), flat.begin() + static_cast<std::ptrdiff_t>((x + 1) * dim));
      Vec v = a.mul(a.mul(units.inverse(u), hx), action.act(units[u], x));
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  };
  Cocycle trivial{std::vector<Vec>(n, a.unit())};
  if (full_product) return orbits_by_full_product(points, units.size(), twist, trivial.flatten());
  std::vector<std::size_t> gens = units.generators();
  PointAction act = [&](std::size_t k, const Vec& flat) { return twist(gens[k], flat); };
  return orbits_by_closure(points, gens.size(), act, trivial.flatten());
}

bool ClasicoReport::pass() const {
  return z1_matches_oracle.value_or(true) && theta_bijective && theta_trace_trivial && round_trip &&
         cohomologous_iff_conjugate && d1_h1_bijection && d0_equals_h0 && trace_galois && coinvariants_are_invariants;
}

ClasicoReport clasico_check(const DualCoring& dual, const Budget& budget) {
  const GroupAction& action = dual.action;
  const FiniteAlgebra& a = *action.algebra();
  const Scalar p = a.p();
  DescentData d = descent_data(dual.coring, budget);
  const UnitGroup& u = d.units;

  ClasicoReport r;
  std::vector<Cocycle> z = z1(action, u, budget);
  r.grouplikes = d.grouplikes.size();
  r.cocycles = z.size();
  try {
    r.z1_matches_oracle = z == z1_bruteforce(action, u, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }

  std::vector<Cocycle> images;
  for (const auto& h : d.grouplikes) images.push_back(theta(dual, h));
  std::vector<Cocycle> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  r.theta_bijective = sorted == z && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  Cocycle trivial{std::vector<Vec>(action.group().order(), a.unit())};
  r.theta_trace_trivial = theta(dual, dual.trace) == trivial;

  r.round_trip = true;
  for (std::size_t i = 0; i < d.grouplikes.size(); ++i)
    if (theta_inverse(dual, images[i]) != d.grouplikes[i]) r.round_trip = false;
  for (const auto& f : z)
    if (theta(dual, theta_inverse(dual, f)) != f) r.round_trip = false;

  PointedOrbitSet d1_set = std::get<PointedOrbitSet>(d1(d, dual.trace));
  PointedOrbitSet h1_set = h1(action, u, z);
  r.d1_size = d1_set.size();
  r.h1_size = h1_set.size();

  r.cohomologous_iff_conjugate = true;
  for (std::size_t i = 0; i < d.grouplikes.size(); ++i)
    for (std::size_t j = 0; j < d.grouplikes.size(); ++j) {
      bool conj = d1_set.orbit_of(d.grouplikes[i]) == d1_set.orbit_of(d.grouplikes[j]);
      if (are_cohomologous(action, u, images[i], images[j]) != conj) r.cohomologous_iff_conjugate = false;
    }

  // D^1 -> H^1 through Theta on every orbit member.
  bool bijection = d1_set.size() == h1_set.size();
  std::set<std::size_t> targets;
  std::vector<std::size_t> map;
  for (const auto& orbit : d1_set.orbits) {
    auto k = h1_set.orbit_of(theta(dual, orbit.front()).flatten());
    if (!k) {
      bijection = false;
      break;
    }
    for (const auto& h : orbit)
      if (h1_set.orbit_of(theta(dual, h).flatten()) != k) bijection = false;
    targets.insert(*k);
    map.push_back(*k);
  }
  r.d1_h1_bijection = bijection && targets.size() == h1_set.size() && map.size() == d1_set.size() &&
                      map[d1_set.distinguished] == h1_set.distinguished;

  std::vector<Vec> invariant = h0(action, u);
  r.d0_equals_h0 = d0(d, dual.trace).elements() == invariant;
  r.trace_galois = d.is_galois(dual.trace);

  Matrix fixed_eqs(0, a.dim());
  for (std::size_t x = 0; x < action.group().order(); ++x) {
    Matrix diff = fp::sub(action.map(x), Matrix::identity(a.dim()), p);
    for (std::size_t row = 0; row < diff.rows(); ++row) fixed_eqs.append_row(diff.row(row));
  }
  Matrix k = fp::kernel(fixed_eqs, p);
  std::vector<Vec> basis;
  for (std::size_t row = 0; row < k.rows(); ++row) basis.push_back(k.row_vec(row));
  r.coinvariants_are_invariants = coinvariants(dual.coring, dual.trace) == Subring::from_span(a, basis);
  return r;
}

}  // namespace coringlab
