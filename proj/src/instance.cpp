#include "coringlab/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

using json = nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& ptr, const std::string& msg) {
  throw Error(ErrorCode::ValidationError, (ptr.empty() ? std::string("/") : ptr) + ": " + msg);
}

std::string child(const std::string& ptr, const std::string& key) {
  std::string esc;
  for (char c : key) {
    if (c == '~') esc += "~0";
    else if (c == '/') esc += "~1";
    else esc += c;
  }
  return ptr + "/" + esc;
}

std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& field(const json& obj, const char* key, const std::string& ptr) {
  if (!obj.is_object()) invalid(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) invalid(ptr, std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t as_uint(const json& v, const std::string& ptr) {
  if (!v.is_number_unsigned()) invalid(ptr, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::uint64_t get_uint(const json& obj, const char* key, const std::string& ptr) {
  return as_uint(field(obj, key, ptr), child(ptr, key));
}

std::string get_string(const json& obj, const char* key, const std::string& ptr) {
  const json& v = field(obj, key, ptr);
  if (!v.is_string()) invalid(child(ptr, key), "expected a string");
  return v.get<std::string>();
}

Scalar as_scalar(const json& v, Scalar p, const std::string& ptr) {
  if (!v.is_number_integer()) invalid(ptr, "expected an integer");
  return fp::from_int(v.get<long long>(), p);
}

Vec as_vec(const json& v, std::size_t len, Scalar p, const std::string& ptr) {
  if (!v.is_array() || v.size() != len) invalid(ptr, "expected an array of " + std::to_string(len) + " integers");
  Vec out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(as_scalar(v[i], p, child(ptr, i)));
  return out;
}

// A list of rows.
Matrix as_matrix(const json& v, std::size_t rows, std::size_t cols, Scalar p, const std::string& ptr) {
  if (!v.is_array() || v.size() != rows) invalid(ptr, "expected " + std::to_string(rows) + " rows");
  std::vector<Vec> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(as_vec(v[i], cols, p, child(ptr, i)));
  return Matrix::from_rows(cols, r);
}

std::vector<Matrix> as_matrices(const json& v, std::size_t count, std::size_t n, Scalar p, const std::string& ptr) {
  if (!v.is_array() || v.size() != count) invalid(ptr, "expected " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(as_matrix(v[i], n, n, p, child(ptr, i)));
  return out;
}

template <typename T>
const T& lookup(const std::map<std::string, T>& table, const json& obj, const char* key, const char* what,
                const std::string& ptr) {
  std::string id = get_string(obj, key, ptr);
  auto it = table.find(id);
  if (it == table.end()) invalid(child(ptr, key), std::string("unknown ") + what + " '" + id + "'");
  return it->second;
}

// Library errors raised while building a named object become validation
// errors at that object, keeping the original code in the message.
template <typename F>
auto at(const std::string& ptr, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError) throw;
    invalid(ptr, e.what());
  }
}

const json& section(const json& doc, const char* key) {
  static const json empty = json::object();
  auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_object()) invalid(std::string("/") + key, "expected an object keyed by id");
  return *it;
}

FiniteGroup parse_group(const json& g, const std::string& ptr) {
  if (g.contains("preset")) {
    std::string preset = get_string(g, "preset", ptr);
    if (preset == "cyclic") return at(ptr, [&] { return FiniteGroup::cyclic(get_uint(g, "n", ptr)); });
    if (preset == "symmetric") return at(ptr, [&] { return FiniteGroup::symmetric(get_uint(g, "n", ptr)); });
    if (preset == "trivial") return FiniteGroup::trivial();
    invalid(child(ptr, "preset"), "unknown group preset '" + preset + "'");
  }
  const json& mul = field(g, "mul", ptr);
  if (!mul.is_array() || mul.empty()) invalid(child(ptr, "mul"), "expected a square table");
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t x = 0; x < mul.size(); ++x) {
    const json& row = mul[x];
    if (!row.is_array() || row.size() != mul.size()) invalid(child(child(ptr, "mul"), x), "expected a square table");
    std::vector<std::size_t> r;
    for (std::size_t y = 0; y < row.size(); ++y) {
      std::uint64_t v = as_uint(row[y], child(child(child(ptr, "mul"), x), y));
      if (v >= mul.size()) invalid(child(child(child(ptr, "mul"), x), y), "entry out of range");
      r.push_back(v);
    }
    table.push_back(std::move(r));
  }
  return at(ptr, [&] { return FiniteGroup::build(std::move(table)); });
}

Scalar get_prime(const json& obj, const std::string& ptr) {
  std::uint64_t p = get_uint(obj, "p", ptr);
  if (!fp::is_prime(p) || p > 65521) invalid(child(ptr, "p"), std::to_string(p) + " is not a supported prime");
  return static_cast<Scalar>(p);
}

AlgebraPtr parse_algebra(const json& a, const std::string& ptr, const Instance& inst) {
  if (a.contains("preset")) {
    std::string preset = get_string(a, "preset", ptr);
    if (preset == "Fq") {
      Scalar p = get_prime(a, ptr);
      std::uint64_t n = get_uint(a, "n", ptr);
      return at(ptr, [&] { return make_algebra(finite_field(p, n)); });
    }
    if (preset == "matrix") {
      Scalar p = get_prime(a, ptr);
      std::uint64_t n = get_uint(a, "n", ptr);
      return at(ptr, [&] { return make_algebra(matrix_algebra(p, n)); });
    }
    if (preset == "group_algebra") {
      Scalar p = get_prime(a, ptr);
      const FiniteGroup& g = lookup(inst.groups, a, "group", "group", ptr);
      return at(ptr, [&] { return make_algebra(group_algebra_ring(p, g)); });
    }
    if (preset == "crossed_product") {
      const GroupAction& act = lookup(inst.actions, a, "action", "action", ptr);
      return at(ptr, [&] { return make_algebra(crossed_product(act)); });
    }
    invalid(child(ptr, "preset"), "unknown algebra preset '" + preset + "'");
  }
  Scalar p = get_prime(a, ptr);
  std::uint64_t dim = get_uint(a, "dim", ptr);
  if (dim == 0 || dim > 64) invalid(child(ptr, "dim"), "dimension must be between 1 and 64");
  // sc[i][j] is the coordinate vector of e_i e_j
  const json& sc = field(a, "sc", ptr);
  const std::string scp = child(ptr, "sc");
  if (!sc.is_array() || sc.size() != dim) invalid(scp, "expected dim x dim x dim structure constants");
  std::vector<Scalar> flat(dim * dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!sc[i].is_array() || sc[i].size() != dim) invalid(child(scp, i), "expected dim products");
    for (std::size_t j = 0; j < dim; ++j) {
      Vec v = as_vec(sc[i][j], dim, p, child(child(scp, i), j));
      std::copy(v.begin(), v.end(), flat.begin() + static_cast<std::ptrdiff_t>((i * dim + j) * dim));
    }
  }
  Vec unit = as_vec(field(a, "unit", ptr), dim, p, child(ptr, "unit"));
  return at(ptr, [&] { return make_algebra(FiniteAlgebra::build(p, dim, std::move(flat), std::move(unit))); });
}

GroupAction parse_action(const json& a, const std::string& ptr, const Instance& inst) {
  if (a.contains("preset")) {
    std::string preset = get_string(a, "preset", ptr);
    if (preset == "frobenius") {
      const AlgebraPtr& f = lookup(inst.algebras, a, "field", "algebra", ptr);
      std::uint64_t order = a.contains("order") ? get_uint(a, "order", ptr) : f->dim();
      return at(ptr, [&] { return GroupAction::frobenius(f, order); });
    }
    if (preset == "trivial") {
      const FiniteGroup& g = lookup(inst.groups, a, "group", "group", ptr);
      const AlgebraPtr& alg = lookup(inst.algebras, a, "algebra", "algebra", ptr);
      return at(ptr, [&] { return GroupAction::trivial(g, alg); });
    }
    invalid(child(ptr, "preset"), "unknown action preset '" + preset + "'");
  }
  const FiniteGroup& g = lookup(inst.groups, a, "group", "group", ptr);
  const AlgebraPtr& alg = lookup(inst.algebras, a, "algebra", "algebra", ptr);
  std::vector<Matrix> maps = as_matrices(field(a, "maps", ptr), g.order(), alg->dim(), alg->p(), child(ptr, "maps"));
  return at(ptr, [&] { return GroupAction::build(g, alg, std::move(maps)); });
}

Subring parse_subring(const json& s, const std::string& ptr, const Instance& inst) {
  const AlgebraPtr& alg = lookup(inst.algebras, s, "algebra", "algebra", ptr);
  if (s.contains("preset")) {
    std::string preset = get_string(s, "preset", ptr);
    if (preset == "prime") return prime_subring(*alg);
    if (preset == "whole") return whole_algebra(*alg);
    invalid(child(ptr, "preset"), "unknown subring preset '" + preset + "'");
  }
  const json& gens = field(s, "generators", ptr);
  if (!gens.is_array()) invalid(child(ptr, "generators"), "expected an array of elements");
  std::vector<Vec> g;
  for (std::size_t i = 0; i < gens.size(); ++i)
    g.push_back(as_vec(gens[i], alg->dim(), alg->p(), child(child(ptr, "generators"), i)));
  return at(ptr, [&] { return subring_closure(*alg, g); });
}

// Raw coring data: carrier actions, and Delta / eps on carrier basis elements
// with comul[k][i][j] the coefficient of c_i (x) c_j in Delta(c_k).
Coring build_raw(const json& c, const std::string& ptr, const AlgebraPtr& alg) {
  const Scalar p = alg->p();
  std::uint64_t dim = get_uint(c, "dim", ptr);
  if (dim == 0 || dim > 64) invalid(child(ptr, "dim"), "dimension must be between 1 and 64");
  std::vector<Matrix> lact = as_matrices(field(c, "lact", ptr), alg->dim(), dim, p, child(ptr, "lact"));
  std::vector<Matrix> ract = as_matrices(field(c, "ract", ptr), alg->dim(), dim, p, child(ptr, "ract"));
  const json& comul = field(c, "comul", ptr);
  if (!comul.is_array() || comul.size() != dim) invalid(child(ptr, "comul"), "expected one dim x dim table per basis element");
  std::vector<Vec> raw;
  for (std::size_t k = 0; k < dim; ++k) {
    Matrix m = as_matrix(comul[k], dim, dim, p, child(child(ptr, "comul"), k));
    raw.push_back(m.data());
  }
  const json& counit = field(c, "counit", ptr);
  if (!counit.is_array() || counit.size() != dim) invalid(child(ptr, "counit"), "expected one element of A per basis element");
  std::vector<Vec> eps;
  for (std::size_t k = 0; k < dim; ++k) eps.push_back(as_vec(counit[k], alg->dim(), p, child(child(ptr, "counit"), k)));

  Bimodule carrier = at(ptr, [&] { return Bimodule::build(alg, dim, std::move(lact), std::move(ract)); });
  TensorModule cc = tensor_over(carrier, whole_algebra(*alg), carrier);
  Matrix comul_m(cc.dim(), dim);
  for (std::size_t k = 0; k < dim; ++k) comul_m.set_col(k, cc.project_raw(raw[k]));
  return Coring::build(std::move(carrier), std::move(comul_m), Matrix::from_columns(alg->dim(), eps));
}

Construction parse_construction(const std::string& name, const json& c, const std::string& ptr, const Instance& inst) {
  Construction out;
  out.name = name;
  std::string kind = get_string(c, "construction", ptr);
  // Reference errors are validation errors; axiom failures are kept on the construction.
  auto keep = [&](auto&& build) {
    try {
      build();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ValidationError) throw;
      out.coring.reset();
      out.error_code = e.code();
      out.error = e.what();
    }
  };
  if (kind == "sweedler") {
    out.kind = ConstructionKind::Sweedler;
    const AlgebraPtr& alg = lookup(inst.algebras, c, "algebra", "algebra", ptr);
    std::string sid = get_string(c, "subring", ptr);
    auto it = inst.subrings.find(sid);
    if (it == inst.subrings.end()) invalid(child(ptr, "subring"), "unknown subring '" + sid + "'");
    const Subring& b = it->second;
    if (b.basis().cols() != alg->dim()) invalid(child(ptr, "subring"), "subring belongs to a different algebra");
    out.subring = b;
    keep([&] {
      SweedlerCoring s = sweedler(alg, b);
      out.coring = s.coring;
      out.distinguished = s.one;
    });
  } else if (kind == "dual_crossed") {
    out.kind = ConstructionKind::DualCrossed;
    const GroupAction& act = lookup(inst.actions, c, "action", "action", ptr);
    keep([&] {
      DualCoring d = dual_coring(act);
      out.coring = d.coring;
      out.distinguished = d.trace;
      out.dual = std::move(d);
    });
  } else if (kind == "comodule_algebra") {
    out.kind = ConstructionKind::ComoduleAlgebra;
    const FiniteGroup& g = lookup(inst.groups, c, "group", "group", ptr);
    Scalar p = get_prime(c, ptr);
    keep([&] {
      HopfData h = group_algebra(p, g);
      ComoduleAlgebra ca = regular_comodule_algebra(h);
      if (c.contains("algebra")) {
        const AlgebraPtr& alg = lookup(inst.algebras, c, "algebra", "algebra", ptr);
        const std::size_t da = alg->dim(), dh = h.algebra->dim();
        const json& co = field(c, "coaction", ptr);
        if (!co.is_array() || co.size() != da) invalid(child(ptr, "coaction"), "expected one dim A x dim H table per basis element");
        Matrix rho(da * dh, da);
        for (std::size_t k = 0; k < da; ++k)
          rho.set_col(k, as_matrix(co[k], da, dh, p, child(child(ptr, "coaction"), k)).data());
        ca = ComoduleAlgebra{alg, h, std::move(rho)};
        validate_comodule_algebra(ca);
      }
      ComoduleCoring cc = comodule_algebra_coring(ca);
      out.coring = cc.coring;
      out.distinguished = cc.one;
      out.comodule = std::move(ca);
    });
  } else if (kind == "trivial") {
    out.kind = ConstructionKind::Trivial;
    const AlgebraPtr& alg = lookup(inst.algebras, c, "algebra", "algebra", ptr);
    keep([&] {
      out.coring = trivial_coring(alg);
      out.distinguished = alg->unit();
    });
  } else if (kind == "raw") {
    out.kind = ConstructionKind::Raw;
    const AlgebraPtr& alg = lookup(inst.algebras, c, "algebra", "algebra", ptr);
    keep([&] { out.coring = build_raw(c, ptr, alg); });
  } else {
    invalid(child(ptr, "construction"), "unknown construction '" + kind + "'");
  }
  return out;
}

// Which construction kinds a task accepts; empty means any.
std::vector<ConstructionKind> required_kinds(const std::string& task) {
  if (task == "z1" || task == "h1" || task == "theta" || task == "clasico") return {ConstructionKind::DualCrossed};
  if (task == "gl-embedding") return {ConstructionKind::ComoduleAlgebra};
  return {};
}

}  // namespace

std::string_view construction_kind_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Sweedler: return "sweedler";
    case ConstructionKind::DualCrossed: return "dual_crossed";
    case ConstructionKind::ComoduleAlgebra: return "comodule_algebra";
    case ConstructionKind::Trivial: return "trivial";
    case ConstructionKind::Raw: return "raw";
  }
  return "?";
}

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names{"validate", "grouplikes", "coinvariants", "galois", "d0",
                                              "d1",       "n1",         "aut",          "exactseq", "mejor",
                                              "z1",       "h1",         "theta",        "clasico",  "gl-embedding"};
  return names;
}

bool is_task_name(std::string_view name) {
  const auto& names = task_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

Instance load_instance(const json& doc, std::optional<std::uint64_t> budget_override) {
  if (!doc.is_object()) invalid("", "instance must be a JSON object");
  Instance inst;
  inst.name = doc.contains("name") ? get_string(doc, "name", "") : std::string("instance");

  if (doc.contains("budget")) {
    const json& b = doc["budget"];
    if (b.contains("enumeration")) inst.budget.enumeration = get_uint(b, "enumeration", "/budget");
    if (b.contains("automorphisms")) inst.budget.automorphisms = get_uint(b, "automorphisms", "/budget");
  }
  if (budget_override) inst.budget = Budget{*budget_override, *budget_override};

  for (const auto& [id, g] : section(doc, "groups").items())
    inst.groups.emplace(id, parse_group(g, child("/groups", id)));

  // Crossed products need actions, which need the other algebras first.
  const json& algebras = section(doc, "algebras");
  auto is_crossed = [](const json& a) { return a.is_object() && a.value("preset", "") == "crossed_product"; };
  for (const auto& [id, a] : algebras.items())
    if (!is_crossed(a)) inst.algebras.emplace(id, parse_algebra(a, child("/algebras", id), inst));
  for (const auto& [id, a] : section(doc, "actions").items())
    inst.actions.emplace(id, parse_action(a, child("/actions", id), inst));
  for (const auto& [id, a] : algebras.items())
    if (is_crossed(a)) inst.algebras.emplace(id, parse_algebra(a, child("/algebras", id), inst));

  for (const auto& [id, s] : section(doc, "subrings").items())
    inst.subrings.emplace(id, parse_subring(s, child("/subrings", id), inst));
  for (const auto& [id, c] : section(doc, "constructions").items())
    inst.constructions.emplace(id, parse_construction(id, c, child("/constructions", id), inst));

  if (doc.contains("tasks")) {
    const json& tasks = doc["tasks"];
    if (!tasks.is_array()) invalid("/tasks", "expected an array");
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const std::string ptr = child("/tasks", i);
      const json& t = tasks[i];
      TaskSpec spec;
      spec.pointer = ptr;
      spec.task = get_string(t, "task", ptr);
      if (!is_task_name(spec.task)) throw Error(ErrorCode::UnknownTask, ptr + ": unknown task '" + spec.task + "'");
      spec.construction = get_string(t, "construction", ptr);
      auto it = inst.constructions.find(spec.construction);
      if (it == inst.constructions.end())
        invalid(child(ptr, "construction"), "unknown construction '" + spec.construction + "'");
      auto kinds = required_kinds(spec.task);
      if (!kinds.empty() && std::find(kinds.begin(), kinds.end(), it->second.kind) == kinds.end())
        invalid(child(ptr, "construction"), "task '" + spec.task + "' needs a " +
                                                std::string(construction_kind_name(kinds.front())) + " construction");
      if (t.contains("grouplike")) {
        if (!it->second.coring) invalid(child(ptr, "grouplike"), "construction failed to build");
        spec.grouplike = as_vec(t["grouplike"], it->second.coring->dim(), it->second.coring->p(), child(ptr, "grouplike"));
      }
      if (t.contains("expect")) {
        if (!t["expect"].is_object()) invalid(child(ptr, "expect"), "expected an object");
        spec.expect = t["expect"];
      }
      inst.tasks.push_back(std::move(spec));
    }
  }
  return inst;
}

}  // namespace coringlab
