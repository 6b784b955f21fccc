#pragma once

// Running the tasks of an instance file and assembling the report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/instance.hpp"

namespace coringlab {

enum class Verdict { Pass, Fail, NotApplicable };

std::string_view verdict_name(Verdict v);

struct RunOptions {
  std::vector<std::string> tasks;        // empty: run everything in the file
  std::optional<std::uint64_t> budget;  // overrides both file budgets
};

struct TaskResult {
  std::string task;
  std::string construction;
  Verdict verdict = Verdict::Fail;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::string error;    // set when the task threw
  std::string summary;  // one line for the text report
};

struct Report {
  std::string instance;
  Budget budget;
  std::vector<TaskResult> tasks;

  // Every verdict is pass or not-applicable.
  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
  std::string summary() const;
};

// Throws UnknownTask for a filter entry outside the vocabulary.
Report run_instance(const Instance& instance, const std::vector<std::string>& filter = {});
// Throws ParseError or ValidationError before any task runs.
Report run_file(const std::string& path, const RunOptions& options = {});

// What a task computes and what its verdict asserts. Throws UnknownTask.
std::string explain(std::string_view task);

}  // namespace coringlab
