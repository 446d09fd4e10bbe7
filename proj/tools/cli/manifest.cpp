#include "manifest.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "app.hpp"

namespace schurpol::cli {

using nlohmann::json;

ExperimentManifest parse_manifest(const json& doc) {
  if (!doc.is_object() || !doc.contains("jobs") || !doc["jobs"].is_array()) {
    throw std::invalid_argument("manifest must be an object with a \"jobs\" array");
  }
  ExperimentManifest m;
  for (const auto& j : doc["jobs"]) {
    if (!j.is_object()) throw std::invalid_argument("manifest job must be an object");
    ManifestJob job;
    job.name = j.value("name", "job" + std::to_string(m.jobs.size()));
    if (!j.contains("subcommand") || !j["subcommand"].is_string()) {
      throw std::invalid_argument("job '" + job.name + "' lacks a subcommand");
    }
    job.subcommand = j["subcommand"].get<std::string>();
    job.verb = j.value("verb", "");
    job.params = j.value("params", json::object());
    if (!job.params.is_object()) throw std::invalid_argument("job '" + job.name + "' params must be an object");
    job.expected = j.value("expected", json());
    m.jobs.push_back(std::move(job));
  }
  return m;
}

namespace {

std::string flag_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += flag_value(v[i]);
    }
    return s;
  }
  return v.dump();
}

}  // namespace

std::vector<std::string> job_arguments(const ManifestJob& job) {
  std::vector<std::string> args{job.subcommand};
  if (!job.verb.empty()) args.push_back(job.verb);
  for (const auto& [key, value] : job.params.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
      continue;
    }
    args.push_back("--" + key);
    args.push_back(flag_value(value));
  }
  return args;
}

bool matches_expected(const json& expected, const json& actual, std::string& mismatch) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      mismatch = "expected an object";
      return false;
    }
    for (const auto& [key, value] : expected.items()) {
      if (!actual.contains(key)) {
        mismatch = "missing key '" + key + "'";
        return false;
      }
      if (!matches_expected(value, actual[key], mismatch)) {
        mismatch = key + ": " + mismatch;
        return false;
      }
    }
    return true;
  }
  if (expected != actual) {
    mismatch = "expected " + expected.dump() + ", got " + actual.dump();
    return false;
  }
  return true;
}

ManifestSummary run_manifest(const ExperimentManifest& manifest, int threads) {
  std::vector<json> reports(manifest.jobs.size());
  std::vector<bool> passed(manifest.jobs.size(), false);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < manifest.jobs.size(); i = next++) {
      const auto& job = manifest.jobs[i];
      const auto outcome = execute(job_arguments(job));
      json report = {{"name", job.name}, {"subcommand", job.subcommand}, {"verb", job.verb},
                     {"exit_code", outcome.exit_code}};
      bool ok = outcome.exit_code != 2;
      if (outcome.exit_code == 2) report["error"] = outcome.message;
      if (outcome.document.contains("result")) report["result"] = outcome.document["result"];
      if (ok && !job.expected.is_null()) {
        std::string mismatch;
        ok = report.contains("result") && matches_expected(job.expected, report["result"], mismatch);
        if (!ok) report["mismatch"] = mismatch.empty() ? "no result" : mismatch;
      }
      report["pass"] = ok;
      reports[i] = std::move(report);
      passed[i] = ok;
    }
  };

  const int n = std::max(1, std::min<int>(threads, static_cast<int>(manifest.jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ManifestSummary summary;
  long pass_count = 0;
  for (bool p : passed) pass_count += p;
  summary.all_passed = pass_count == static_cast<long>(passed.size());
  summary.result = {{"jobs", reports},
                    {"total", manifest.jobs.size()},
                    {"passed", pass_count},
                    {"failed", static_cast<long>(passed.size()) - pass_count},
                    {"all_passed", summary.all_passed}};
  return summary;
}

}  // namespace schurpol::cli
