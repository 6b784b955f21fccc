#pragma once

// Instance files: JSON documents naming algebras, groups, actions, subrings
// and coring constructions by string id, plus a list of tasks to run on them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/descent.hpp"
#include "coringlab/error.hpp"
#include "json.hpp"

namespace coringlab {

enum class ConstructionKind { Sweedler, DualCrossed, ComoduleAlgebra, Trivial, Raw };

std::string_view construction_kind_name(ConstructionKind kind);

// A built coring, or the error that stopped the build (kept so that tasks on
// it can report the failure instead of aborting the whole file).
struct Construction {
  std::string name;
  ConstructionKind kind = ConstructionKind::Raw;
  std::optional<Coring> coring;
  std::optional<ErrorCode> error_code;
  std::string error;

  std::optional<Vec> distinguished;  // 1 (x) 1, the trace, or 1
  std::optional<Subring> subring;    // B for a Sweedler coring
  std::optional<DualCoring> dual;
  std::optional<ComoduleAlgebra> comodule;
};

struct TaskSpec {
  std::string task;
  std::string construction;
  std::optional<Vec> grouplike;
  nlohmann::json expect = nlohmann::json::object();
  std::string pointer;  // JSON pointer of the task entry
};

struct Instance {
  std::string name;
  Budget budget;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, GroupAction> actions;
  std::map<std::string, Subring> subrings;
  std::map<std::string, Construction> constructions;
  std::vector<TaskSpec> tasks;
};

// The fixed task vocabulary, in canonical order.
const std::vector<std::string>& task_names();
bool is_task_name(std::string_view name);

// Throws ValidationError with the JSON pointer of the offending entry, or
// UnknownTask. Construction failures are stored, not thrown.
Instance load_instance(const nlohmann::json& doc, std::optional<std::uint64_t> budget_override = std::nullopt);
// Throws ParseError on malformed JSON or an unreadable file.
nlohmann::json read_json_file(const std::string& path);

}  // namespace coringlab
