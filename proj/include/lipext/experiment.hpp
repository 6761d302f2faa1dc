#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lipext/instances.hpp"
#include "lipext/io.hpp"

namespace lipext {

// ============================================================
// Experiment specs
// ============================================================

// One instance source: a generator family member or a file reference.
struct InstanceSpec {
  enum class Kind { Path, Cycle, RandomGraph, LpCloud, File };
  Kind kind = Kind::Path;
  int m = 2;                // path/cycle size parameter
  RandomGraphParams graph;  // RandomGraph
  LpCloudParams cloud;      // LpCloud
  std::string file;         // File
  std::string id;           // derived from parameters when empty
};

struct ExperimentSpec {
  std::vector<InstanceSpec> instances;
  json target;  // target JSON (shorthands allowed); may be null for defaults
  std::string quantity = "claim1_scan";  // claim1_scan | modulus | glue_trace
  int n = 1;
  double delta = 0.0;
  OracleKind oracle = OracleKind::BruteForce;
  std::uint64_t seed = 1;
  int repeats = 1;  // glue runs per instance; trials for euclidean moduli
  std::uint64_t cap = kDefaultEnumerationCap;
  std::int64_t budget = 50000;
  double tol = 1e-9;
  double budget_ms = 0.0;  // 0 = unlimited; exceeded -> graceful truncation
  json subset;             // modulus only: "endpoints" | "all" | [indices]
};

ExperimentSpec spec_from_json(const json& j);
json spec_to_json(const ExperimentSpec& spec);

// Resolve one instance spec: generate or load the space (and points, for
// clouds), with a deterministic id.
Instance resolve_instance(const InstanceSpec& spec);

// ============================================================
// Result rows
// ============================================================

// One record of one computed quantity. Values are kept sorted by name so
// the CSV and JSON codecs agree byte-for-byte across runs and thread
// counts. Wall time is reported in a separate timing file: it can never be
// deterministic, and the result files carry the determinism contract.
struct ResultRow {
  std::string instance_id;
  std::string quantity;
  std::vector<std::pair<std::string, double>> values;  // sorted by name
  std::string witness_digest;
  bool exact = true;
  double wall_time_ms = 0.0;  // excluded from results.csv / results.json

  void set(const std::string& name, double value);
  std::optional<double> get(const std::string& name) const;
};

std::string rows_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> rows_from_csv(const std::string& csv);
json rows_to_json(const std::vector<ResultRow>& rows);
std::vector<ResultRow> rows_from_json(const json& j);

struct FailureRecord {
  std::string instance_id;
  std::string kind;
  std::string detail;
};

struct RunOutputs {
  std::vector<ResultRow> rows;
  std::vector<FailureRecord> failures;
  bool truncated = false;  // wall-clock budget exhausted before all instances
};

// Worker count: min(requested or hardware, LIPEXT_THREADS when set), at
// least 1.
int effective_threads(std::optional<int> requested = std::nullopt);

// Runs every instance of the spec, dispatching instances to a worker pool.
// Output row order is by instance position, never completion order.
RunOutputs run_experiment(const ExperimentSpec& spec, int threads = 0);

// results.csv, results.json, failures.json (deterministic) and timings.csv
// (wall clock, excluded from the determinism contract).
void write_run_outputs(const RunOutputs& outputs,
                       const std::filesystem::path& out_dir);

// ============================================================
// Plot data
// ============================================================

struct PlotData {
  // (m, value) for modulus rows of generated families
  std::vector<std::pair<double, double>> modulus_series;
  // (certified, achieved) for glue rows; all points lie on or below y = x
  std::vector<std::pair<double, double>> scatter;
  // (m, slack) for claim1 rows
  std::vector<std::pair<double, double>> slack_series;
};

PlotData plot_data_from_rows(const std::vector<ResultRow>& rows);

// modulus_vs_m.txt, achieved_vs_certified.txt, slack_vs_m.txt and
// scatter.svg under out_dir.
void write_plot_files(const PlotData& data,
                      const std::filesystem::path& out_dir);

}  // namespace lipext
