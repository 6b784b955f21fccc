#include "coringlab/coringlab.h"

#include <map>
#include <mutex>
#include <new>
#include <string>
#include <vector>

#include "coringlab/constructions.hpp"
#include "coringlab/error.hpp"
#include "coringlab/report.hpp"

struct clab_algebra {
  coringlab::AlgebraPtr algebra;
};

struct clab_coring {
  coringlab::Coring coring;
  std::vector<coringlab::Vec> grouplikes;
  bool computed = false;
};

struct clab_report {
  std::string json;
  std::string summary;
  bool all_pass = false;
};

namespace {

thread_local std::string last_error;

clab_status to_status(coringlab::ErrorCode code) {
  return static_cast<clab_status>(static_cast<int>(code) + 1);
}

clab_status fail(clab_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <typename F>
clab_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return CLAB_OK;
  } catch (const coringlab::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CLAB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CLAB_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* clab_status_name(clab_status status) {
  switch (status) {
    case CLAB_OK: return "Ok";
    case CLAB_INVALID_ARGUMENT: return "InvalidArgument";
    case CLAB_INTERNAL: return "Internal";
    default: break;
  }
  if (status > CLAB_OK && status < CLAB_INVALID_ARGUMENT)
    return coringlab::error_code_name(static_cast<coringlab::ErrorCode>(status - 1)).data();
  return "Unknown";
}

const char* clab_last_error(void) { return last_error.c_str(); }

clab_status clab_algebra_create(uint32_t p, size_t dim, const uint32_t* sc, const uint32_t* unit,
                                clab_algebra** out) {
  if (!sc || !unit || !out || dim == 0) return fail(CLAB_INVALID_ARGUMENT, "null argument or zero dimension");
  return guard([&] {
    std::vector<coringlab::Scalar> s(sc, sc + dim * dim * dim);
    coringlab::Vec u(unit, unit + dim);
    auto a = coringlab::make_algebra(coringlab::FiniteAlgebra::build(p, dim, std::move(s), std::move(u)));
    *out = new clab_algebra{std::move(a)};
  });
}

clab_status clab_algebra_finite_field(uint32_t p, size_t n, clab_algebra** out) {
  if (!out) return fail(CLAB_INVALID_ARGUMENT, "null output");
  return guard([&] { *out = new clab_algebra{coringlab::make_algebra(coringlab::finite_field(p, n))}; });
}

size_t clab_algebra_dim(const clab_algebra* a) { return a ? a->algebra->dim() : 0; }

void clab_algebra_destroy(clab_algebra* a) { delete a; }

clab_status clab_coring_sweedler(const clab_algebra* a, const uint32_t* generators, size_t count, clab_coring** out) {
  if (!a || !out || (count > 0 && !generators)) return fail(CLAB_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const std::size_t n = a->algebra->dim();
    std::vector<coringlab::Vec> gens;
    for (std::size_t i = 0; i < count; ++i) gens.emplace_back(generators + i * n, generators + (i + 1) * n);
    coringlab::Subring b = coringlab::subring_closure(*a->algebra, gens);
    *out = new clab_coring{coringlab::sweedler(a->algebra, b).coring, {}, false};
  });
}

size_t clab_coring_dim(const clab_coring* c) { return c ? c->coring.dim() : 0; }

clab_status clab_coring_grouplikes(clab_coring* c, uint64_t budget, size_t* count) {
  if (!c || !count) return fail(CLAB_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    coringlab::Budget b;
    if (budget != 0) b.enumeration = budget;
    c->grouplikes = coringlab::grouplikes(c->coring, b);
    c->computed = true;
    *count = c->grouplikes.size();
  });
}

clab_status clab_coring_grouplike_get(const clab_coring* c, size_t index, uint32_t* out) {
  if (!c || !out) return fail(CLAB_INVALID_ARGUMENT, "null argument");
  if (!c->computed) return fail(CLAB_INVALID_ARGUMENT, "grouplikes not computed");
  if (index >= c->grouplikes.size()) return fail(CLAB_INVALID_ARGUMENT, "index out of range");
  std::copy(c->grouplikes[index].begin(), c->grouplikes[index].end(), out);
  return CLAB_OK;
}

clab_status clab_coring_is_galois(const clab_coring* c, const uint32_t* g, int* galois) {
  if (!c || !g || !galois) return fail(CLAB_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    coringlab::Vec v(g, g + c->coring.dim());
    for (auto& x : v) x %= c->coring.p();
    if (!c->coring.is_grouplike(v))
      throw coringlab::Error(coringlab::ErrorCode::NotAGrouplike, "(" + coringlab::format_vec(v) + ")");
    *galois = coringlab::is_galois(c->coring, v) ? 1 : 0;
  });
}

void clab_coring_destroy(clab_coring* c) { delete c; }

clab_status clab_run_file(const char* path, const char* const* tasks, size_t ntasks, uint64_t budget,
                          clab_report** out) {
  if (!path || !out || (ntasks > 0 && !tasks)) return fail(CLAB_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    coringlab::RunOptions opts;
    for (std::size_t i = 0; i < ntasks; ++i) opts.tasks.emplace_back(tasks[i]);
    if (budget != 0) opts.budget = budget;
    coringlab::Report r = coringlab::run_file(path, opts);
    *out = new clab_report{r.to_json().dump(2) + "\n", r.summary(), r.all_pass()};
  });
}

const char* clab_report_json(const clab_report* r) { return r ? r->json.c_str() : ""; }
const char* clab_report_summary(const clab_report* r) { return r ? r->summary.c_str() : ""; }
int clab_report_all_pass(const clab_report* r) { return r && r->all_pass ? 1 : 0; }
void clab_report_destroy(clab_report* r) { delete r; }

clab_status clab_explain(const char* task, const char** text) {
  if (!task || !text) return fail(CLAB_INVALID_ARGUMENT, "null argument");
  static std::mutex mu;
  static std::map<std::string, std::string> cache;
  return guard([&] {
    std::string t = coringlab::explain(task);
    std::lock_guard<std::mutex> lock(mu);
    *text = cache.emplace(task, std::move(t)).first->second.c_str();
  });
}

}  // extern "C"
