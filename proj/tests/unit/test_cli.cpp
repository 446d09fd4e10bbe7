#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/app.hpp"
#include "cli/manifest.hpp"

using schurpol::cli::execute;
using schurpol::cli::run;
using nlohmann::json;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("schurpol_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("documented invocations") {
  auto slice = execute({"partitions", "slice", "--lambda", "8,8,7,4", "--n", "4", "--k", "3"});
  CHECK(slice.exit_code == 0);
  CHECK(slice.document["command"] == "partitions slice");
  CHECK(slice.document["result"]["pieces"] == json::parse("[[3,3,3,3],[3,3,3,1],[2,2,1]]"));

  auto counter = execute({"polarize", "check", "--lambda", "2", "--a", "1", "--b", "2", "--field", "fp:2"});
  CHECK(counter.exit_code == 1);
  CHECK(counter.document["result"]["equal"] == false);
  CHECK(counter.document["result"]["closure_dim"] == 2);
  CHECK(counter.document["result"]["target_dim"] == 3);

  auto cauchy = execute({"tableaux", "cauchy", "--n", "2", "--m", "2", "--d", "2"});
  CHECK(cauchy.exit_code == 0);
  CHECK(cauchy.document["result"]["lhs"] == 10);
  CHECK(cauchy.document["result"]["rhs"] == 10);
}

TEST_CASE("global flags may precede or follow the verb") {
  auto before = execute({"--field", "fp:3", "polarize", "check", "--lambda", "2", "--a", "1", "--b", "2"});
  auto after = execute({"polarize", "check", "--lambda", "2", "--a", "1", "--b", "2", "--field", "fp:3"});
  CHECK(before.exit_code == 0);
  CHECK(before.document == after.document);
  CHECK(before.document["params"]["field"] == "fp:3");
}

TEST_CASE("usage errors exit with 2") {
  auto unknown = call({"partitions", "conjugate", "--lambda", "2,1", "--nope"});
  CHECK(unknown.code == 2);
  CHECK(unknown.out.empty());
  CHECK(unknown.err.find("Usage") != std::string::npos);

  CHECK(call({"nosuch"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"partitions", "conjugate", "--lambda", "1,2"}).code == 2);
  CHECK(call({"polarize", "check", "--lambda", "2", "--a", "1", "--b", "2", "--field", "fp:4"}).code == 2);
  CHECK(call({"invariants", "hilbert", "--action", "conj:2", "--dmax", "2", "--p", "3"}).code == 2);
  CHECK(call({"invariants", "threshold", "--n", "2", "--q", "1/3", "--p", "7"}).code == 2);
}

TEST_CASE("help goes to standard output") {
  auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("partitions") != std::string::npos);
}

TEST_CASE("identity verdicts set the exit code") {
  CHECK(execute({"invariants", "weyl-check", "--action", "sl2vec", "--a", "2", "--b", "3", "--dmax", "3"}).exit_code == 0);
  auto weyl = execute({"invariants", "weyl-check", "--action", "cyclic:2", "--field", "fp:2", "--a", "2", "--b", "3",
                       "--dmax", "4"});
  CHECK(weyl.exit_code == 1);
  CHECK(weyl.document["result"]["first_failure"] == 3);
  auto threshold = execute({"invariants", "threshold", "--n", "2", "--q", "1/2", "--p", "5"});
  CHECK(threshold.exit_code == 0);
  CHECK(threshold.document["result"]["p_exceeds_bound"] == false);
  CHECK(threshold.document["result"]["bound"] == "5");
}

TEST_CASE("output is deterministic and timing is opt-in") {
  std::vector<std::string> args = {"polarize", "closure", "--lambda", "2,1", "--a", "2", "--b", "3", "--seed", "17"};
  auto a = call(args);
  auto b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_ms") == std::string::npos);
  args.push_back("--timing");
  CHECK(execute(args).document.contains("elapsed_ms"));
}

TEST_CASE("pretty output") {
  auto pretty = call({"tableaux", "cauchy", "--n", "2", "--m", "2", "--d", "2", "--pretty"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("lhs: 10") != std::string::npos);
  CHECK(pretty.out.find('{') == std::string::npos);
}

TEST_CASE("manifest runs") {
  SUBCASE("empty manifest passes with zero jobs") {
    auto path = write_temp("empty.json", R"({"jobs": []})");
    auto r = execute({"manifest", path});
    CHECK(r.exit_code == 0);
    CHECK(r.document["result"]["total"] == 0);
    CHECK(r.document["result"]["all_passed"] == true);
  }
  SUBCASE("counterexample with a characteristic zero control") {
    auto r = execute({"manifest", std::string(SCHURPOL_MANIFEST_DIR) + "/counterexample.json"});
    CHECK(r.exit_code == 0);
    CHECK(r.document["result"]["passed"] == 2);
  }
  SUBCASE("wrong expectation exits with 1") {
    auto path = write_temp("wrong.json", R"({"jobs": [{"name": "sym2", "subcommand": "schur", "verb": "dim",
      "params": {"lambda": "2", "m": 2}, "expected": {"realized_dim": 4}}]})");
    auto r = execute({"manifest", path});
    CHECK(r.exit_code == 1);
    CHECK(r.document["result"]["jobs"][0]["pass"] == false);
    CHECK(r.document["result"]["jobs"][0]["mismatch"].get<std::string>().find("realized_dim") != std::string::npos);
  }
  SUBCASE("parse errors exit with 2") {
    auto bad = write_temp("bad.json", "{\"jobs\": [");
    CHECK(execute({"manifest", bad}).exit_code == 2);
    auto schema = write_temp("schema.json", R"({"tasks": []})");
    CHECK(execute({"manifest", schema}).exit_code == 2);
    CHECK(execute({"manifest", "/nonexistent/manifest.json"}).exit_code == 2);
  }
  SUBCASE("job usage errors fail the job") {
    auto path = write_temp("usage.json", R"({"jobs": [{"subcommand": "partitions", "verb": "slice",
      "params": {"lambda": "3", "bogus": 1}}]})");
    auto r = execute({"manifest", path});
    CHECK(r.exit_code == 1);
    CHECK(r.document["result"]["jobs"][0]["exit_code"] == 2);
  }
}

TEST_CASE("manifest helpers") {
  schurpol::cli::ManifestJob job{"j", "polarize", "check", json{{"lambda", json::array({2, 1})}, {"pretty", false},
                                                              {"a", 2}, {"field", "fp:3"}},
                                 json()};
  auto args = schurpol::cli::job_arguments(job);
  CHECK(args == std::vector<std::string>{"polarize", "check", "--a", "2", "--field", "fp:3", "--lambda", "2,1"});

  std::string why;
  CHECK(schurpol::cli::matches_expected(json{{"a", 1}}, json{{"a", 1}, {"b", 2}}, why));
  CHECK_FALSE(schurpol::cli::matches_expected(json{{"a", {{"c", 3}}}}, json{{"a", {{"c", 4}}}}, why));
  CHECK(why.find("a: c:") == 0);
}

TEST_CASE("thread budget") {
  CHECK(schurpol::cli::resolve_threads(3) == 3);
  setenv("SCHURPOL_THREADS", "2", 1);
  CHECK(schurpol::cli::resolve_threads(0) == 2);
  unsetenv("SCHURPOL_THREADS");
  CHECK(schurpol::cli::resolve_threads(0) >= 1);
}
