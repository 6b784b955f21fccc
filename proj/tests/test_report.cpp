#include <filesystem>
#include <fstream>

#include "coringlab/error.hpp"
#include "coringlab/report.hpp"
#include "doctest.h"

using namespace coringlab;
using nlohmann::json;

namespace {

std::string instance_path(const std::string& name) { return std::string(CORINGLAB_INSTANCE_DIR) + "/" + name; }

Error load_error(const json& doc) {
  try {
    load_instance(doc);
  } catch (const Error& e) {
    return e;
  }
  FAIL("instance accepted");
  return Error(ErrorCode::BadShape, "");
}

const json f4_doc = json::parse(R"({
  "algebras": {"F4": {"preset": "Fq", "p": 2, "n": 2}},
  "subrings": {"F2": {"algebra": "F4", "preset": "prime"}},
  "constructions": {"C": {"construction": "sweedler", "algebra": "F4", "subring": "F2"}},
  "tasks": [{"task": "grouplikes", "construction": "C"}]
})");

}  // namespace

TEST_CASE("validation errors carry a JSON pointer") {
  json doc = f4_doc;
  doc["tasks"][0]["construction"] = "D";
  Error e = load_error(doc);
  CHECK(e.code() == ErrorCode::ValidationError);
  CHECK(std::string(e.what()).find("/tasks/0/construction") != std::string::npos);

  doc = f4_doc;
  doc["algebras"]["F4"]["p"] = 4;
  e = load_error(doc);
  CHECK(std::string(e.what()).find("/algebras/F4/p") != std::string::npos);

  doc = f4_doc;
  doc["subrings"]["F2"]["algebra"] = "F5";
  CHECK(std::string(load_error(doc).what()).find("/subrings/F2/algebra") != std::string::npos);

  doc = f4_doc;
  doc["tasks"][0]["task"] = "nonsense";
  CHECK(load_error(doc).code() == ErrorCode::UnknownTask);

  doc = f4_doc;
  doc["tasks"][0]["task"] = "z1";
  CHECK(std::string(load_error(doc).what()).find("dual_crossed") != std::string::npos);

  doc = f4_doc;
  doc["algebras"]["X"] = json::parse(R"({"p": 2, "dim": 2, "sc": [[[1,0],[0,1]],[[0,1],[0,1]]], "unit": [0,1]})");
  e = load_error(doc);
  CHECK(std::string(e.what()).find("/algebras/X") != std::string::npos);
  CHECK(std::string(e.what()).find("NoUnit") != std::string::npos);

  doc = f4_doc;
  doc["tasks"][0]["grouplike"] = json::array({1, 0});
  CHECK(std::string(load_error(doc).what()).find("/tasks/0/grouplike") != std::string::npos);
}

TEST_CASE("explicit structure constants") {
  json doc = json::parse(R"({
    "algebras": {"A": {"p": 3, "dim": 2, "sc": [[[1,0],[0,1]],[[0,1],[1,0]]], "unit": [1,0]}},
    "groups": {"C2": {"mul": [[0,1],[1,0]]}},
    "actions": {"t": {"preset": "trivial", "group": "C2", "algebra": "A"}},
    "constructions": {"R": {"construction": "dual_crossed", "action": "t"}},
    "tasks": [{"task": "z1", "construction": "R"}, {"task": "h1", "construction": "R"}]
  })");
  Instance inst = load_instance(doc);
  CHECK(inst.algebras.at("A")->dim() == 2);
  Report r = run_instance(inst);
  REQUIRE(r.tasks.size() == 2);
  // homomorphisms C2 -> U(F3[C2]) = C2 x C2 with the trivial action: four of them
  CHECK(r.tasks[0].result["count"] == 4);
  CHECK(r.tasks[1].result["size"] == 4);
  CHECK(r.all_pass());
}

TEST_CASE("expectations decide the verdict") {
  json doc = f4_doc;
  doc["tasks"][0]["expect"] = {{"count", 3}};
  CHECK(run_instance(load_instance(doc)).tasks[0].verdict == Verdict::Pass);
  doc["tasks"][0]["expect"] = {{"count", 4}};
  Report r = run_instance(load_instance(doc));
  CHECK(r.tasks[0].verdict == Verdict::Fail);
  CHECK(r.tasks[0].result.contains("expect_mismatch"));
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("budget override turns into a reported refusal") {
  Report r = run_instance(load_instance(f4_doc, 4));
  CHECK(r.tasks[0].verdict == Verdict::Fail);
  CHECK(r.tasks[0].result["error_code"] == "TooLarge");
}

TEST_CASE("empty task list") {
  json doc = f4_doc;
  doc["tasks"] = json::array();
  Report r = run_instance(load_instance(doc));
  CHECK(r.tasks.empty());
  CHECK(r.all_pass());
  CHECK(run_instance(load_instance(json::object())).all_pass());
}

TEST_CASE("bundled instances") {
  Report s = run_file(instance_path("sweedler_f4_f2.json"));
  CHECK(s.all_pass());
  auto find = [](const Report& r, const std::string& task) {
    for (const auto& t : r.tasks)
      if (t.task == task) return t;
    FAIL("missing task");
    return TaskResult{};
  };
  CHECK(find(s, "grouplikes").result["count"] == 3);
  CHECK(find(s, "d1").result["size"] == 1);
  CHECK(find(s, "aut").result["order"] == 3);
  CHECK(find(s, "mejor").verdict == Verdict::Pass);

  Report h = run_file(instance_path("hilbert90_c2_f4.json"));
  CHECK(find(h, "z1").result["count"] == 3);
  CHECK(find(h, "h1").result["size"] == 1);
  CHECK(find(h, "theta").verdict == Verdict::Pass);
  CHECK(find(h, "clasico").verdict == Verdict::Pass);

  Report filtered = run_file(instance_path("hilbert90_c2_f4.json"), RunOptions{{"h1", "d0"}, std::nullopt});
  REQUIRE(filtered.tasks.size() == 2);
  CHECK(filtered.tasks[0].task == "d0");
  CHECK_THROWS_AS(run_file(instance_path("hilbert90_c2_f4.json"), RunOptions{{"bogus"}, std::nullopt}), Error);
}

TEST_CASE("reports are deterministic and round-trip") {
  std::string a = run_file(instance_path("m2_f2.json")).to_json().dump(2);
  std::string b = run_file(instance_path("m2_f2.json")).to_json().dump(2);
  CHECK(a == b);
  CHECK(nlohmann::ordered_json::parse(a).dump(2) == a);
}

TEST_CASE("missing and malformed files") {
  try {
    run_file("/nonexistent/file.json");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  auto tmp = std::filesystem::temp_directory_path() / "coringlab_bad.json";
  std::ofstream(tmp) << "{\"tasks\": [";
  try {
    run_file(tmp.string());
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  std::filesystem::remove(tmp);
}

TEST_CASE("explain") {
  for (const auto& t : task_names()) CHECK_FALSE(explain(t).empty());
  CHECK(explain("d1").find("conjugation") != std::string::npos);
  CHECK_THROWS_AS(explain("nope"), Error);
}
