#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace schurpol::cli {

/// One job of an experiment manifest.
struct ManifestJob {
  std::string name;
  std::string subcommand;
  std::string verb;
  nlohmann::json params;    // flag name -> value
  nlohmann::json expected;  // optional subset of the result object
};

struct ExperimentManifest {
  std::vector<ManifestJob> jobs;
};

/// Parses {"jobs": [...]}; throws std::invalid_argument on schema errors.
ExperimentManifest parse_manifest(const nlohmann::json& doc);

/// Converts a job into argv form: subcommand verb --flag value ...
std::vector<std::string> job_arguments(const ManifestJob& job);

/// True when every key of `expected` matches `actual` (objects recursively, the rest exactly).
bool matches_expected(const nlohmann::json& expected, const nlohmann::json& actual, std::string& mismatch);

struct ManifestSummary {
  nlohmann::json result;
  bool all_passed = true;
};

/// Runs all jobs with up to `threads` workers; results stay in manifest order.
ManifestSummary run_manifest(const ExperimentManifest& manifest, int threads);

}  // namespace schurpol::cli
