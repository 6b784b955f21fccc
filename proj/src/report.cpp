#include "coringlab/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "coringlab/error.hpp"

namespace coringlab {

using ojson = nlohmann::ordered_json;

namespace {

ojson vec_json(const Vec& v) {
  ojson a = ojson::array();
  for (Scalar s : v) a.push_back(s);
  return a;
}

ojson vecs_json(const std::vector<Vec>& vs) {
  ojson a = ojson::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

ojson matrix_json(const Matrix& m) {
  ojson a = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row_vec(r)));
  return a;
}

ojson orbits_json(const PointedOrbitSet& o) {
  ojson orbits = ojson::array();
  for (const auto& orbit : o.orbits) orbits.push_back(vecs_json(orbit));
  return ojson{{"size", o.size()}, {"distinguished", o.distinguished}, {"orbits", std::move(orbits)}};
}

ojson check_json(const Check& c) {
  ojson j{{"name", c.name}, {"pass", c.pass}, {"vacuous", c.vacuous}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

ojson opt_json(const std::optional<bool>& b) { return b ? ojson(*b) : ojson(nullptr); }

std::string str(const Vec& v) { return "(" + format_vec(v) + ")"; }

// Thrown inside a task to report not-applicable with a reason.
struct NotApplicable {
  std::string reason;
};

// Lazily computed objects per construction, shared by all tasks on it.
class Context {
 public:
  Context(const Instance& inst, const Construction& c) : inst_(inst), c_(c) {}

  const Construction& construction() const { return c_; }
  const Coring& coring() const { return *c_.coring; }
  const Budget& budget() const { return inst_.budget; }

  const DescentData& data() {
    if (!data_) data_ = std::make_unique<DescentData>(descent_data(coring(), budget()));
    return *data_;
  }
  const AutomorphismGroup& aut() {
    if (!aut_) aut_ = std::make_unique<AutomorphismGroup>(coring_automorphisms(coring(), budget()));
    return *aut_;
  }

  // The task's grouplike, else the construction's distinguished element when
  // it is grouplike, else the smallest grouplike.
  Vec base(const TaskSpec& t) {
    const DescentData& d = data();
    if (t.grouplike) {
      if (!std::binary_search(d.grouplikes.begin(), d.grouplikes.end(), *t.grouplike))
        throw Error(ErrorCode::NotAGrouplike, str(*t.grouplike) + " is not a grouplike of this coring");
      return *t.grouplike;
    }
    if (d.grouplikes.empty()) throw NotApplicable{"Gl(C) is empty"};
    if (c_.distinguished && std::binary_search(d.grouplikes.begin(), d.grouplikes.end(), *c_.distinguished))
      return *c_.distinguished;
    return d.grouplikes.front();
  }

 private:
  const Instance& inst_;
  const Construction& c_;
  std::unique_ptr<DescentData> data_;
  std::unique_ptr<AutomorphismGroup> aut_;
};

struct Outcome {
  bool pass = true;
  std::string summary;
};

bool all_checks(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

ojson checks_json(const std::vector<Check>& checks) {
  ojson a = ojson::array();
  for (const auto& c : checks) a.push_back(check_json(c));
  return a;
}

Outcome task_validate(Context& ctx, const TaskSpec&, ojson& r) {
  const Coring& c = ctx.coring();
  r["p"] = c.p();
  r["algebra_dim"] = c.alg().dim();
  r["carrier_dim"] = c.dim();
  r["tensor_dim"] = c.cc().dim();
  std::vector<Check> suite = property_suite(ctx.data(), ctx.aut());
  r["properties"] = checks_json(suite);
  std::size_t passed = std::count_if(suite.begin(), suite.end(), [](const Check& k) { return k.pass; });
  return {all_checks(suite), "coring axioms hold, " + std::to_string(passed) + "/" + std::to_string(suite.size()) +
                                 " identities hold"};
}

Outcome task_grouplikes(Context& ctx, const TaskSpec&, ojson& r) {
  const DescentData& d = ctx.data();
  const Coring& c = ctx.coring();
  r["count"] = d.grouplikes.size();
  r["elements"] = vecs_json(d.grouplikes);
  Outcome out{true, "|Gl(C)| = " + std::to_string(d.grouplikes.size())};
  if (checked_power(c.p(), c.dim(), std::uint64_t{1} << 16)) {
    bool match = grouplikes_bruteforce(c, ctx.budget()) == d.grouplikes;
    r["oracle_match"] = match;
    out.pass = match;
  } else {
    r["oracle_match"] = nullptr;
  }
  const Construction& con = ctx.construction();
  if (con.kind == ConstructionKind::Sweedler) {
    // alpha (x) alpha^{-1} for every unit alpha
    const AlgebraPtr& a = c.algebra();
    TensorModule t = tensor_over(Bimodule::regular(a), *con.subring, Bimodule::regular(a), false);
    std::set<Vec> family;
    for (std::size_t i = 0; i < d.units.size(); ++i) family.insert(t.pure(d.units[i], d.units.inverse(i)));
    r["unit_family_match"] = std::vector<Vec>(family.begin(), family.end()) == d.grouplikes;
  }
  return out;
}

Outcome task_coinvariants(Context& ctx, const TaskSpec& t, ojson& r) {
  const Coring& c = ctx.coring();
  Vec g = ctx.base(t);
  Subring s = coinvariants(c, g);
  r["grouplike"] = vec_json(g);
  r["dim"] = s.dim();
  r["basis"] = vecs_json(s.basis_vectors());
  const Construction& con = ctx.construction();
  if (con.kind == ConstructionKind::Sweedler && con.distinguished && g == *con.distinguished)
    r["equals_subring"] = s == *con.subring;
  if (con.comodule && con.distinguished && g == *con.distinguished)
    r["equals_coaction_coinvariants"] = s == coaction_coinvariants(*con.comodule);
  Check k = check_conjugate_coinvariants(ctx.data());
  r["checks"] = checks_json({k});
  return {k.pass, "dim A^g = " + std::to_string(s.dim()) + " at " + str(g)};
}

Outcome task_galois(Context& ctx, const TaskSpec&, ojson& r) {
  const DescentData& d = ctx.data();
  ojson rows = ojson::array();
  for (const auto& g : d.grouplikes) {
    CanonicalMap can = canonical_map(d.coring, g);
    rows.push_back(ojson{{"grouplike", vec_json(g)},
                         {"coinvariant_dim", can.coinvariants.dim()},
                         {"source_dim", can.source.dim()},
                         {"rank", can.map.rank()},
                         {"galois", d.is_galois(g)}});
  }
  r["carrier_dim"] = d.coring.dim();
  r["count"] = d.galois.size();
  r["galois"] = vecs_json(d.galois);
  r["canonical_maps"] = std::move(rows);
  Check k = check_canonical_triangle(d);
  r["checks"] = checks_json({k});
  return {k.pass, "|Gal(C)| = " + std::to_string(d.galois.size()) + " of " + std::to_string(d.grouplikes.size())};
}

Outcome task_d0(Context& ctx, const TaskSpec& t, ojson& r) {
  Vec g = ctx.base(t);
  UnitSubgroup u = d0(ctx.data(), g);
  r["grouplike"] = vec_json(g);
  r["order"] = u.size();
  r["elements"] = vecs_json(u.elements());
  bool closed = is_closed(u);
  r["closed"] = closed;
  return {closed, "|D0| = " + std::to_string(u.size())};
}

Outcome task_d1(Context& ctx, const TaskSpec& t, ojson& r) {
  const DescentData& d = ctx.data();
  Vec g = ctx.base(t);
  PointedOrbitSet o = std::get<PointedOrbitSet>(d1(d, g));
  r["grouplike"] = vec_json(g);
  r["d1"] = orbits_json(o);
  r["size"] = o.size();
  r["trivial"] = o.is_singleton();
  bool match = conjugation_orbits(d, d.units, g, true) == o;
  r["oracle_match"] = match;
  return {match, "|D1| = " + std::to_string(o.size())};
}

Outcome task_n1(Context& ctx, const TaskSpec& t, ojson& r) {
  Vec g = ctx.base(t);
  N1Set n = std::get<N1Set>(n1(ctx.data(), g));
  r["grouplike"] = vec_json(g);
  r["n1"] = orbits_json(n.orbits);
  r["size"] = n.orbits.size();
  r["to_d1"] = n.to_d1;
  r["well_defined"] = n.well_defined;
  r["surjective"] = n.surjective;
  r["pointed"] = n.pointed;
  return {n.well_defined && n.surjective && n.pointed,
          "|N1| = " + std::to_string(n.orbits.size()) + (n.surjective ? ", onto D1" : ", not onto D1")};
}

Outcome task_aut(Context& ctx, const TaskSpec& t, ojson& r) {
  const DescentData& d = ctx.data();
  const AutomorphismGroup& aut = ctx.aut();
  r["order"] = aut.size();
  if (aut.size() <= 32) {
    ojson els = ojson::array();
    for (const auto& m : aut.elements()) els.push_back(matrix_json(m));
    r["elements"] = std::move(els);
  }
  bool union_ok = true;
  if (!d.grouplikes.empty()) {
    AutOrbits o = std::get<AutOrbits>(aut_orbits(d, aut, ctx.base(t)));
    r["orbits"] = orbits_json(o.orbits);
    r["galois_is_union"] = o.galois_is_union;
    union_ok = o.galois_is_union;
  }
  std::vector<Check> checks{check_automorphism_coinvariants(d, aut), check_automorphism_transport(d, aut),
                            check_action_commutation(d, aut)};
  r["checks"] = checks_json(checks);
  return {union_ok && all_checks(checks), "|Aut(C)| = " + std::to_string(aut.size())};
}

Outcome task_exactseq(Context& ctx, const TaskSpec& t, ojson& r) {
  const DescentData& d = ctx.data();
  Vec g = ctx.base(t);
  if (!d.is_galois(g)) throw NotApplicable{"grouplike " + str(g) + " is not Galois"};
  ExactSequenceReport e = exact_sequence_report(d, ctx.aut(), g);
  r["grouplike"] = vec_json(g);
  r["stabilizer_order"] = e.stabilizer_order;
  r["coinvariant_units"] = e.coinvariant_units;
  r["aut_order"] = e.aut_order;
  r["normal"] = e.normal;
  r["kernel_matches"] = e.kernel_matches;
  r["images_automorphisms"] = e.images_automorphisms;
  r["homomorphism"] = e.homomorphism;
  r["anti_homomorphism"] = e.anti_homomorphism;
  r["transitive"] = e.transitive;
  r["surjective"] = opt_json(e.surjective);
  r["coset_bijection"] = opt_json(e.coset_bijection);
  ojson cosets = ojson::array();
  for (const auto& row : e.cosets)
    cosets.push_back(ojson{{"representative", vec_json(row.representative)},
                           {"size", row.size},
                           {"automorphism", row.automorphism}});
  r["cosets"] = std::move(cosets);
  std::vector<Check> checks{check_normality(d), check_stabilizer_conjugation(d), check_phi_kernel(d, ctx.aut()),
                            check_psi_anti_homomorphism(d)};
  r["checks"] = checks_json(checks);
  return {e.pass() && all_checks(checks), std::to_string(e.stabilizer_order) + "/" +
                                              std::to_string(e.coinvariant_units) + " -> Aut(C) of order " +
                                              std::to_string(e.aut_order)};
}

Outcome task_mejor(Context& ctx, const TaskSpec& t, ojson& r) {
  const DescentData& d = ctx.data();
  if (d.grouplikes.empty()) throw NotApplicable{"Gl(C) is empty"};
  Vec g = ctx.base(t);
  MejorReport m = mejor_check(d, ctx.aut(), g);
  if (!m.applicable) throw NotApplicable{m.reason};
  r["grouplike"] = vec_json(g);
  r["cond_i"] = m.cond_i;
  r["cond_ii"] = m.cond_ii;
  r["cond_iii"] = m.cond_iii;
  r["equivalent"] = m.equivalent;
  r["conditions_hold"] = m.conditions_hold();
  if (m.conditions_hold()) {
    r["coinvariants_agree"] = m.coinvariants_agree;
    r["generates"] = m.generates;
    r["xi_bijective"] = m.xi_bijective;
    r["group_order"] = m.group.size();
    r["group"] = vecs_json(m.group);
    r["table"] = m.table;
    r["identity"] = m.identity;
    r["is_group"] = m.is_group;
    r["sequence_surjective"] = m.sequence_surjective;
    r["sequence_kernel"] = m.sequence_kernel;
    r["sequence_homomorphism"] = m.sequence_homomorphism;
  }
  std::string s = m.conditions_hold() ? "Gal(C) is a group of order " + std::to_string(m.group.size())
                                      : std::string("conditions fail together");
  return {m.pass(), s};
}

const DualCoring& dual_of(Context& ctx) { return *ctx.construction().dual; }

Outcome task_z1(Context& ctx, const TaskSpec&, ojson& r) {
  const DualCoring& dual = dual_of(ctx);
  const UnitGroup& u = ctx.data().units;
  std::vector<Cocycle> z = z1(dual.action, u, ctx.budget());
  r["count"] = z.size();
  ojson cs = ojson::array();
  for (const auto& f : z) cs.push_back(vecs_json(f.values));
  r["cocycles"] = std::move(cs);
  std::optional<bool> match;
  try {
    match = z == z1_bruteforce(dual.action, u, ctx.budget());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }
  r["oracle_match"] = opt_json(match);
  return {match.value_or(true), "|Z1| = " + std::to_string(z.size())};
}

Outcome task_h1(Context& ctx, const TaskSpec&, ojson& r) {
  const DualCoring& dual = dual_of(ctx);
  const UnitGroup& u = ctx.data().units;
  std::vector<Cocycle> z = z1(dual.action, u, ctx.budget());
  PointedOrbitSet h = h1(dual.action, u, z);
  r["h1"] = orbits_json(h);
  r["size"] = h.size();
  r["trivial"] = h.is_singleton();
  std::vector<Vec> inv = h0(dual.action, u);
  r["h0_order"] = inv.size();
  r["h0"] = vecs_json(inv);
  bool match = h1(dual.action, u, z, true) == h;
  r["oracle_match"] = match;
  return {match, "|H1| = " + std::to_string(h.size()) + ", |H0| = " + std::to_string(inv.size())};
}

Outcome task_theta(Context& ctx, const TaskSpec&, ojson& r) {
  const DualCoring& dual = dual_of(ctx);
  const DescentData& d = ctx.data();
  std::vector<Cocycle> z = z1(dual.action, d.units, ctx.budget());
  ojson rows = ojson::array();
  std::vector<Cocycle> images;
  bool round_trip = true;
  for (const auto& h : d.grouplikes) {
    Cocycle f = theta(dual, h);
    if (theta_inverse(dual, f) != h) round_trip = false;
    rows.push_back(ojson{{"grouplike", vec_json(h)}, {"cocycle", vecs_json(f.values)}});
    images.push_back(std::move(f));
  }
  std::sort(images.begin(), images.end());
  bool bijective = images == z && std::adjacent_find(images.begin(), images.end()) == images.end();
  Cocycle trivial{std::vector<Vec>(dual.group_order(), dual.action.algebra()->unit())};
  bool trace_trivial = theta(dual, dual.trace) == trivial;
  r["grouplikes"] = d.grouplikes.size();
  r["cocycles"] = z.size();
  r["table"] = std::move(rows);
  r["bijective"] = bijective;
  r["round_trip"] = round_trip;
  r["trace_trivial"] = trace_trivial;
  return {bijective && round_trip && trace_trivial,
          std::to_string(d.grouplikes.size()) + " grouplikes <-> " + std::to_string(z.size()) + " cocycles"};
}

Outcome task_clasico(Context& ctx, const TaskSpec&, ojson& r) {
  ClasicoReport c = clasico_check(dual_of(ctx), ctx.budget());
  r["grouplikes"] = c.grouplikes;
  r["cocycles"] = c.cocycles;
  r["z1_matches_oracle"] = opt_json(c.z1_matches_oracle);
  r["theta_bijective"] = c.theta_bijective;
  r["theta_trace_trivial"] = c.theta_trace_trivial;
  r["round_trip"] = c.round_trip;
  r["cohomologous_iff_conjugate"] = c.cohomologous_iff_conjugate;
  r["d1_h1_bijection"] = c.d1_h1_bijection;
  r["d0_equals_h0"] = c.d0_equals_h0;
  r["trace_galois"] = c.trace_galois;
  r["coinvariants_are_invariants"] = c.coinvariants_are_invariants;
  r["d1_size"] = c.d1_size;
  r["h1_size"] = c.h1_size;
  return {c.pass(), "|D1| = " + std::to_string(c.d1_size) + ", |H1| = " + std::to_string(c.h1_size)};
}

Outcome task_gl_embedding(Context& ctx, const TaskSpec&, ojson& r) {
  const ComoduleAlgebra& ca = *ctx.construction().comodule;
  GlEmbeddingReport g = gl_embedding_check(ca.hopf, ctx.budget());
  r["hopf_grouplikes"] = vecs_json(g.hopf_grouplikes);
  r["images"] = vecs_json(g.images);
  r["images_grouplike"] = g.images_grouplike;
  r["injective"] = g.injective;
  r["multiplicative"] = g.multiplicative;

  // alpha -> alpha^{-1} alpha_(0) (x) alpha_(1) on U(A)
  const DescentData& d = ctx.data();
  std::set<Vec> reached;
  for (const auto& a : d.units.elements()) reached.insert(coaction_grouplike(ca, a));
  std::vector<Vec> sorted(reached.begin(), reached.end());
  r["unit_grouplikes"] = vecs_json(sorted);
  r["units_reach_all_grouplikes"] = sorted == d.grouplikes;
  return {g.pass(), std::to_string(g.images.size()) + " grouplikes of H embed"};
}

using TaskFn = std::function<Outcome(Context&, const TaskSpec&, ojson&)>;

const std::map<std::string, TaskFn>& task_table() {
  static const std::map<std::string, TaskFn> table{
      {"validate", task_validate}, {"grouplikes", task_grouplikes}, {"coinvariants", task_coinvariants},
      {"galois", task_galois},     {"d0", task_d0},                 {"d1", task_d1},
      {"n1", task_n1},             {"aut", task_aut},               {"exactseq", task_exactseq},
      {"mejor", task_mejor},       {"z1", task_z1},                 {"h1", task_h1},
      {"theta", task_theta},       {"clasico", task_clasico},       {"gl-embedding", task_gl_embedding},
  };
  return table;
}

// Every key of `expect` must equal the same key of the result.
void apply_expectations(const TaskSpec& t, TaskResult& out) {
  if (t.expect.empty()) return;
  ojson mismatches = ojson::array();
  for (const auto& [key, want] : t.expect.items()) {
    if (key == "verdict") {
      if (want != verdict_name(out.verdict)) mismatches.push_back(key);
      continue;
    }
    if (key == "error") {
      if (out.result.value("error_code", std::string()) != want) mismatches.push_back(key);
      continue;
    }
    auto it = out.result.find(key);
    if (it == out.result.end() || ojson::parse(want.dump()) != *it) mismatches.push_back(key);
  }
  // An expected failure (verdict or error code) is a pass when it matches.
  bool expected_failure = t.expect.contains("verdict") || t.expect.contains("error");
  if (mismatches.empty()) {
    if (expected_failure) out.verdict = out.verdict == Verdict::Fail ? Verdict::Pass : out.verdict;
    return;
  }
  out.result["expect_mismatch"] = std::move(mismatches);
  out.verdict = Verdict::Fail;
}

TaskResult run_task(const TaskSpec& t, Context& ctx) {
  TaskResult out;
  out.task = t.task;
  out.construction = t.construction;
  const Construction& con = ctx.construction();
  if (!con.coring) {
    out.verdict = Verdict::Fail;
    out.error = con.error;
    out.result["error_code"] = std::string(error_code_name(*con.error_code));
    out.summary = con.error;
    apply_expectations(t, out);
    return out;
  }
  try {
    Outcome o = task_table().at(t.task)(ctx, t, out.result);
    out.verdict = o.pass ? Verdict::Pass : Verdict::Fail;
    out.summary = o.summary;
  } catch (const NotApplicable& na) {
    out.verdict = Verdict::NotApplicable;
    out.result = ojson::object();
    out.result["reason"] = na.reason;
    out.summary = na.reason;
  } catch (const Error& e) {
    out.verdict = Verdict::Fail;
    out.error = e.what();
    out.result = ojson::object();
    out.result["error_code"] = std::string(error_code_name(e.code()));
    out.summary = e.what();
  }
  apply_expectations(t, out);
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

bool Report::all_pass() const {
  return std::all_of(tasks.begin(), tasks.end(), [](const TaskResult& t) { return t.verdict != Verdict::Fail; });
}

ojson Report::to_json() const {
  ojson tasks_json = ojson::array();
  for (const auto& t : tasks) {
    ojson j{{"task", t.task}, {"construction", t.construction}, {"verdict", verdict_name(t.verdict)}};
    if (!t.error.empty()) j["error"] = t.error;
    j["result"] = t.result;
    tasks_json.push_back(std::move(j));
  }
  return ojson{{"instance", instance},
               {"budget", {{"enumeration", budget.enumeration}, {"automorphisms", budget.automorphisms}}},
               {"all_pass", all_pass()},
               {"tasks", std::move(tasks_json)}};
}

std::string Report::summary() const {
  std::ostringstream os;
  os << instance << ": " << tasks.size() << " task(s)\n";
  std::size_t failed = 0;
  for (const auto& t : tasks) {
    os << "  [" << verdict_name(t.verdict) << "] " << t.task << " on " << t.construction;
    if (!t.summary.empty()) os << ": " << t.summary;
    os << "\n";
    if (t.verdict == Verdict::Fail) ++failed;
  }
  os << (failed == 0 ? "all tasks pass" : std::to_string(failed) + " task(s) failed") << "\n";
  return os.str();
}

Report run_instance(const Instance& instance, const std::vector<std::string>& filter) {
  for (const auto& f : filter)
    if (!is_task_name(f)) throw Error(ErrorCode::UnknownTask, "unknown task '" + f + "'");
  Report report;
  report.instance = instance.name;
  report.budget = instance.budget;
  std::map<std::string, std::unique_ptr<Context>> contexts;
  for (const auto& t : instance.tasks) {
    if (!filter.empty() && std::find(filter.begin(), filter.end(), t.task) == filter.end()) continue;
    auto& ctx = contexts[t.construction];
    if (!ctx) ctx = std::make_unique<Context>(instance, instance.constructions.at(t.construction));
    report.tasks.push_back(run_task(t, *ctx));
  }
  return report;
}

Report run_file(const std::string& path, const RunOptions& options) {
  Instance inst = load_instance(read_json_file(path), options.budget);
  return run_instance(inst, options.tasks);
}

std::string explain(std::string_view task) {
  static const std::map<std::string, std::string, std::less<>> texts{
      {"validate",
       "Builds the coring and checks its axioms: the carrier is an A-bimodule, Delta and eps are bimodule maps, "
       "Delta is coassociative and eps is a two-sided counit. Then runs the identities relating grouplikes, "
       "coinvariants, canonical maps and automorphisms on every unit and grouplike of the instance."},
      {"grouplikes",
       "Gl(C) = {g in C : Delta(g) = g (x) g, eps(g) = 1}. Solved as the affine space eps(g) = 1 filtered by the "
       "quadratic condition, and compared with a scan of every carrier element when p^dim <= 65536."},
      {"coinvariants",
       "The coinvariant subring A^g = {a in A : a g = g a}, the endomorphism ring of the comodule A with coaction "
       "a -> g a. Also checks A^{alpha g alpha^-1} = alpha A^g alpha^-1 for every unit alpha and grouplike g."},
      {"galois",
       "g is Galois when the canonical map A (x)_{A^g} A -> C, a (x) a' -> a g a', is bijective. Lists the rank "
       "of each canonical map and checks can_{alpha g alpha^-1} o psi_{alpha^-1} = can_g."},
      {"d0", "D0(C, g) = U(A^g), the units of the coinvariant subring of g."},
      {"d1",
       "D1(C, g) is Gl(C) modulo conjugation g -> alpha g alpha^-1 by units of A, pointed at the class of g. "
       "It classifies the comodule structures on A up to isomorphism; trivial means every grouplike is "
       "conjugate to g. Orbits are computed by closure under generators and compared with the full action."},
      {"n1",
       "N1(C, g) is Gl(C) modulo conjugation by the subgroup U(A)_g = {alpha : alpha A^g = A^g alpha}, pointed "
       "at g. Checks that the induced map N1 -> D1 is well defined, pointed and surjective."},
      {"aut",
       "Aut(C): invertible bimodule maps C -> C commuting with Delta and eps. Reports its order, its orbits on "
       "Gl(C), whether Gal(C) is a union of orbits, and the identities A^{phi(g)} = A^g, can_{phi(g)} = phi o can_g "
       "and phi(alpha g alpha^-1) = alpha phi(g) alpha^-1."},
      {"exactseq",
       "For Galois g, phi_g(alpha) = can_g o psi_{alpha^-1} o can_g^-1 maps U(A)_g to Aut(C) with kernel U(A^g). "
       "Checks normality, the kernel, that phi_g is a group homomorphism and, when U(A) is transitive on "
       "Gal(C), that U(A)_g / U(A^g) -> Aut(C) is a bijection on cosets."},
      {"mejor",
       "When U(A) acts transitively on Gal(C) and g is Galois, the conditions U(A)_g = U(A), U(A)_h = U(A) for "
       "all Galois h, and Aut(C) transitive on Gal(C) are equivalent. When they hold, Gal(C) is a group through "
       "Aut(C), A^h = A^g for all Galois h, and 1 -> U(A^g) -> U(A) -> Gal(C) -> 1 is exact."},
      {"z1",
       "Nonabelian 1-cocycles f : G -> U(A) with f(e) = 1 and f(xy) = f(y) f(x)^y, enumerated from values on "
       "generators and compared with the scan of all functions G -> U(A)."},
      {"h1",
       "H1 = Z1 modulo f ~ h when f(x) = alpha^-1 h(x) alpha^x for one unit alpha, pointed at the trivial "
       "cocycle; H0 = U(A)^G. Trivial H1 is Hilbert's Theorem 90 for the action."},
      {"theta",
       "For the dual R* of the crossed product R = G*A, restriction to G sends grouplikes of R* to 1-cocycles. "
       "Checks that this is a bijection Gl(R*) -> Z1 with the trace t sent to the trivial cocycle."},
      {"clasico",
       "Descent for the dual of a crossed product: the bijection Gl(R*) -> Z1 identifies conjugation of "
       "grouplikes with cohomology of cocycles, so D1(R*, t) = H1 and D0(R*, t) = H0, the coinvariants of t are "
       "the invariants A^G, and t is Galois."},
      {"gl-embedding",
       "For a Hopf algebra H, x -> 1 (x) x embeds the grouplikes of H into Gl(A (x) H) and turns the product of "
       "H into the product of the embedded grouplikes. Also lists alpha^-1 alpha_(0) (x) alpha_(1) over the "
       "units alpha of A."},
  };
  auto it = texts.find(task);
  if (it == texts.end()) throw Error(ErrorCode::UnknownTask, "unknown task '" + std::string(task) + "'");
  return it->second;
}

}  // namespace coringlab
