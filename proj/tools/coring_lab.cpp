// coring-lab: run instance files and explain tasks.
//
// Exit status: 0 when every task passes or is not applicable, 1 when some
// task fails, 2 when the file cannot be loaded or the arguments are bad.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coringlab/coringlab.h"

namespace {

int run(const std::string& file, const std::vector<std::string>& tasks, std::uint64_t budget,
        const std::string& json_out, bool quiet) {
  std::vector<const char*> names;
  for (const auto& t : tasks) names.push_back(t.c_str());
  clab_report* report = nullptr;
  clab_status s = clab_run_file(file.c_str(), names.data(), names.size(), budget, &report);
  if (s != CLAB_OK) {
    std::cerr << "coring-lab: " << clab_last_error() << "\n";
    return 2;
  }
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) {
      std::cerr << "coring-lab: cannot write '" << json_out << "'\n";
      clab_report_destroy(report);
      return 2;
    }
    out << clab_report_json(report);
  }
  if (!quiet) std::cout << clab_report_summary(report);
  int code = clab_report_all_pass(report) ? 0 : 1;
  clab_report_destroy(report);
  return code;
}

int explain(const std::string& task) {
  const char* text = nullptr;
  if (clab_explain(task.c_str(), &text) != CLAB_OK) {
    std::cerr << "coring-lab: " << clab_last_error() << "\n";
    return 2;
  }
  std::cout << task << ": " << text << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grouplikes, descent data and Galois conditions of corings over finite algebras"};
  app.require_subcommand(1);

  std::string file, json_out, task;
  std::vector<std::string> tasks;
  std::uint64_t budget = 0;
  bool quiet = false;

  CLI::App* run_cmd = app.add_subcommand("run", "Run the tasks of an instance file");
  run_cmd->add_option("file", file, "Instance file (JSON)")->required();
  run_cmd->add_option("--task", tasks, "Only run tasks with this name (repeatable)");
  run_cmd->add_option("--budget", budget, "Enumeration budget overriding the file");
  run_cmd->add_option("--json", json_out, "Write the JSON report here");
  run_cmd->add_flag("--quiet", quiet, "Suppress the text summary");

  CLI::App* explain_cmd = app.add_subcommand("explain", "Describe what a task checks");
  explain_cmd->add_option("task", task, "Task name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (run_cmd->parsed()) return run(file, tasks, budget, json_out, quiet);
  return explain(task);
}
