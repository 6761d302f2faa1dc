#include "lipext/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "lipext/rng.hpp"

namespace lipext {

// ============================================================
// Specs
// ============================================================

namespace {

InstanceSpec instance_spec_from_json(const json& j) {
  InstanceSpec spec;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "path") {
    spec.kind = InstanceSpec::Kind::Path;
    spec.m = j.at("m").get<int>();
  } else if (kind == "cycle") {
    spec.kind = InstanceSpec::Kind::Cycle;
    spec.m = j.at("m").get<int>();
  } else if (kind == "random_graph") {
    spec.kind = InstanceSpec::Kind::RandomGraph;
    spec.graph.n = j.at("n").get<int>();
    spec.graph.edge_prob = j.value("edge_prob", 0.5);
    spec.graph.w_min = j.value("w_min", 1.0);
    spec.graph.w_max = j.value("w_max", 3.0);
    spec.graph.seed = j.value("seed", 0ULL);
  } else if (kind == "lp_cloud") {
    spec.kind = InstanceSpec::Kind::LpCloud;
    spec.cloud.n = j.at("n").get<int>();
    spec.cloud.dim = j.value("dim", 2);
    spec.cloud.p = j.value("p", 2.0);
    spec.cloud.seed = j.value("seed", 0ULL);
  } else if (kind == "file") {
    spec.kind = InstanceSpec::Kind::File;
    spec.file = j.at("path").get<std::string>();
  } else {
    throw Error("unknown instance kind: " + kind);
  }
  spec.id = j.value("id", "");
  return spec;
}

json instance_spec_to_json(const InstanceSpec& spec) {
  json j;
  switch (spec.kind) {
    case InstanceSpec::Kind::Path:
      j = {{"kind", "path"}, {"m", spec.m}};
      break;
    case InstanceSpec::Kind::Cycle:
      j = {{"kind", "cycle"}, {"m", spec.m}};
      break;
    case InstanceSpec::Kind::RandomGraph:
      j = {{"kind", "random_graph"},
           {"n", spec.graph.n},
           {"edge_prob", spec.graph.edge_prob},
           {"w_min", spec.graph.w_min},
           {"w_max", spec.graph.w_max},
           {"seed", spec.graph.seed}};
      break;
    case InstanceSpec::Kind::LpCloud:
      j = {{"kind", "lp_cloud"},
           {"n", spec.cloud.n},
           {"dim", spec.cloud.dim},
           {"p", spec.cloud.p},
           {"seed", spec.cloud.seed}};
      break;
    case InstanceSpec::Kind::File:
      j = {{"kind", "file"}, {"path", spec.file}};
      break;
  }
  if (!spec.id.empty()) j["id"] = spec.id;
  return j;
}

std::string derived_id(const InstanceSpec& spec) {
  if (!spec.id.empty()) return spec.id;
  std::ostringstream os;
  switch (spec.kind) {
    case InstanceSpec::Kind::Path:
      os << "path_m" << spec.m;
      break;
    case InstanceSpec::Kind::Cycle:
      os << "cycle_m" << spec.m;
      break;
    case InstanceSpec::Kind::RandomGraph:
      os << "rg_n" << spec.graph.n << "_p" << format_double(spec.graph.edge_prob)
         << "_s" << spec.graph.seed;
      break;
    case InstanceSpec::Kind::LpCloud:
      os << "lp_n" << spec.cloud.n << "_d" << spec.cloud.dim << "_p"
         << format_double(spec.cloud.p) << "_s" << spec.cloud.seed;
      break;
    case InstanceSpec::Kind::File:
      os << std::filesystem::path(spec.file).stem().string();
      break;
  }
  return os.str();
}

}  // namespace

ExperimentSpec spec_from_json(const json& j) {
  ExperimentSpec spec;
  if (j.contains("instances")) {
    for (const auto& entry : j.at("instances")) {
      spec.instances.push_back(instance_spec_from_json(entry));
    }
  }
  spec.target = j.value("target", json());
  spec.quantity = j.value("quantity", std::string("claim1_scan"));
  spec.n = j.value("n", 1);
  spec.delta = j.value("delta", 0.0);
  spec.oracle = oracle_from_name(j.value("oracle", std::string("brute")));
  spec.seed = j.value("seed", 1ULL);
  spec.repeats = j.value("repeats", 1);
  spec.cap = j.value("cap", kDefaultEnumerationCap);
  spec.budget = j.value("budget", static_cast<std::int64_t>(50000));
  spec.tol = j.value("tol", 1e-9);
  spec.budget_ms = j.value("budget_ms", 0.0);
  spec.subset = j.value("subset", json());
  return spec;
}

json spec_to_json(const ExperimentSpec& spec) {
  json j;
  j["instances"] = json::array();
  for (const auto& inst : spec.instances) {
    j["instances"].push_back(instance_spec_to_json(inst));
  }
  if (!spec.target.is_null()) j["target"] = spec.target;
  j["quantity"] = spec.quantity;
  j["n"] = spec.n;
  j["delta"] = spec.delta;
  j["oracle"] = oracle_name(spec.oracle);
  j["seed"] = spec.seed;
  j["repeats"] = spec.repeats;
  j["cap"] = spec.cap;
  j["budget"] = spec.budget;
  j["tol"] = spec.tol;
  j["budget_ms"] = spec.budget_ms;
  if (!spec.subset.is_null()) j["subset"] = spec.subset;
  return j;
}

Instance resolve_instance(const InstanceSpec& spec) {
  Instance out;
  out.id = derived_id(spec);
  switch (spec.kind) {
    case InstanceSpec::Kind::Path:
      out.space = path_space(spec.m);
      break;
    case InstanceSpec::Kind::Cycle:
      out.space = cycle_space(spec.m);
      break;
    case InstanceSpec::Kind::RandomGraph:
      out.space = random_graph_space(spec.graph).space;
      break;
    case InstanceSpec::Kind::LpCloud: {
      auto cloud = lp_cloud_space(spec.cloud);
      out.space = std::move(cloud.space);
      out.points = std::move(cloud.points);
      break;
    }
    case InstanceSpec::Kind::File: {
      std::ifstream in(spec.file);
      if (!in) throw Error("cannot open instance file: " + spec.file);
      json j = json::parse(in);
      auto inst = instance_from_json(j, out.id);
      inst.id = out.id;
      return inst;
    }
  }
  return out;
}

// ============================================================
// Result rows
// ============================================================

void ResultRow::set(const std::string& name, double value) {
  auto it = std::lower_bound(
      values.begin(), values.end(), name,
      [](const auto& pair, const std::string& key) { return pair.first < key; });
  if (it != values.end() && it->first == name) {
    it->second = value;
  } else {
    values.insert(it, {name, value});
  }
}

std::optional<double> ResultRow::get(const std::string& name) const {
  for (const auto& [key, value] : values) {
    if (key == name) return value;
  }
  return std::nullopt;
}

namespace {

void check_csv_safe(const std::string& s) {
  if (s.find_first_of(",;\n=") != std::string::npos) {
    throw Error("value contains a CSV delimiter: " + s);
  }
}

double parse_double(const std::string& s) {
  double out = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error("bad number in CSV: " + s);
  }
  return out;
}

}  // namespace

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << "instance_id,quantity,exact,witness_digest,values\n";
  for (const auto& row : rows) {
    check_csv_safe(row.instance_id);
    check_csv_safe(row.quantity);
    check_csv_safe(row.witness_digest);
    os << row.instance_id << ',' << row.quantity << ','
       << (row.exact ? 1 : 0) << ',' << row.witness_digest << ',';
    bool first = true;
    for (const auto& [key, value] : row.values) {
      check_csv_safe(key);
      if (!first) os << ';';
      os << key << '=' << format_double(value);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::vector<ResultRow> rows_from_csv(const std::string& csv) {
  std::vector<ResultRow> rows;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
      const auto pos = line.find(',', start);
      if (pos == std::string::npos) throw Error("bad CSV row: " + line);
      fields.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    fields.push_back(line.substr(start));
    ResultRow row;
    row.instance_id = fields[0];
    row.quantity = fields[1];
    row.exact = fields[2] == "1";
    row.witness_digest = fields[3];
    const std::string& packed = fields[4];
    std::size_t p = 0;
    while (p < packed.size()) {
      auto end = packed.find(';', p);
      if (end == std::string::npos) end = packed.size();
      const auto eq = packed.find('=', p);
      if (eq == std::string::npos || eq >= end) {
        throw Error("bad CSV values field: " + packed);
      }
      row.values.emplace_back(packed.substr(p, eq - p),
                              parse_double(packed.substr(eq + 1, end - eq - 1)));
      p = end + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json rows_to_json(const std::vector<ResultRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json values = json::object();
    for (const auto& [key, value] : row.values) values[key] = value;
    out.push_back(json{{"instance_id", row.instance_id},
                       {"quantity", row.quantity},
                       {"exact", row.exact},
                       {"witness_digest", row.witness_digest},
                       {"values", values}});
  }
  return out;
}

std::vector<ResultRow> rows_from_json(const json& j) {
  std::vector<ResultRow> rows;
  for (const auto& entry : j) {
    ResultRow row;
    row.instance_id = entry.at("instance_id").get<std::string>();
    row.quantity = entry.at("quantity").get<std::string>();
    row.exact = entry.at("exact").get<bool>();
    row.witness_digest = entry.at("witness_digest").get<std::string>();
    for (const auto& [key, value] : entry.at("values").items()) {
      row.values.emplace_back(key, value.get<double>());
    }
    std::sort(row.values.begin(), row.values.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

// ============================================================
// Runner
// ============================================================

int effective_threads(std::optional<int> requested) {
  int n = requested.value_or(0);
  if (n <= 0) {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
  }
  if (const char* env = std::getenv("LIPEXT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return std::max(1, n);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct TaskOutput {
  std::vector<ResultRow> rows;
  std::vector<FailureRecord> failures;
};

std::vector<int> resolve_subset(const json& subset_spec, int size) {
  if (subset_spec.is_array()) {
    return subset_spec.get<std::vector<int>>();
  }
  const std::string policy =
      subset_spec.is_string() ? subset_spec.get<std::string>() : "endpoints";
  if (policy == "endpoints") {
    if (size == 1) return {0};
    return {0, size - 1};
  }
  if (policy == "all") {
    std::vector<int> all(size);
    for (int i = 0; i < size; ++i) all[i] = i;
    return all;
  }
  throw Error("unknown subset policy: " + policy);
}

TaskOutput run_claim1_task(const Instance& instance,
                           const ExperimentSpec& spec,
                           const TargetSpace& target) {
  TaskOutput out;
  const auto started = Clock::now();
  try {
    const auto check = check_claim1(instance.space, spec.n, target, spec.cap);
    ResultRow row;
    row.instance_id = instance.id;
    row.quantity = "claim1";
    row.set("m", instance.space.size());
    row.set("n", spec.n);
    row.set("e_n", check.e_n_value);
    row.set("e_up_n", check.e_up_value);
    row.set("slack", check.slack);
    row.exact = true;
    row.witness_digest = witness_digest(claim1_to_json(check));
    row.wall_time_ms = ms_since(started);
    out.rows.push_back(std::move(row));
    if (check.slack < -kTol) {
      out.failures.push_back({instance.id, "claim1_slack",
                              "slack " + format_double(check.slack)});
    }
  } catch (const CertificationFailure& e) {
    out.failures.push_back({instance.id, "claim1_certification", e.what()});
  }
  return out;
}

TaskOutput run_modulus_task(const Instance& instance,
                            const ExperimentSpec& spec) {
  TaskOutput out;
  const auto started = Clock::now();
  const auto subset = resolve_subset(spec.subset, instance.space.size());

  ModulusResult result;
  const json target_json =
      spec.target.is_null() ? json{{"kind", "uniform"}, {"points", 2}}
                            : spec.target;
  const std::string kind = target_json.at("kind").get<std::string>();
  if (kind == "euclidean" || kind == "real_line") {
    EuclideanModulusOptions options;
    options.dim = kind == "euclidean" ? target_json.at("dim").get<int>() : 1;
    options.trials = std::max(1, spec.repeats);
    options.budget = spec.budget;
    options.tol = spec.tol;
    options.seed = mix_seed(spec.seed, fnv1a64(instance.id));
    if (instance.points &&
        static_cast<int>((*instance.points)[0].size()) == options.dim) {
      // Coordinate restriction of the cloud the instance was built from.
      std::vector<std::vector<double>> values;
      for (int s : canonical_index_set(subset, instance.space.size(),
                                       "subset")) {
        values.push_back((*instance.points)[s]);
      }
      options.candidates.emplace_back(instance.space,
                                      TargetSpace::euclidean(options.dim),
                                      canonical_index_set(
                                          subset, instance.space.size(),
                                          "subset"),
                                      std::move(values));
    }
    result = modulus_for_subset_euclidean(instance.space, subset, options);
  } else {
    result = modulus_for_subset(instance.space, subset,
                                target_from_json(target_json), spec.cap);
  }

  ResultRow row;
  row.instance_id = instance.id;
  row.quantity = "modulus";
  row.set("m", instance.space.size());
  row.set("subset_size", static_cast<double>(subset.size()));
  row.set("value", result.value);
  row.exact = result.exact;
  row.witness_digest = witness_digest(modulus_to_json(result));
  row.wall_time_ms = ms_since(started);
  out.rows.push_back(std::move(row));
  return out;
}

TaskOutput run_glue_task(const Instance& instance, const ExperimentSpec& spec,
                         const TargetSpace& target) {
  TaskOutput out;
  const int m = instance.space.size();
  if (m < 2) {
    out.failures.push_back(
        {instance.id, "bad_instance", "glue runs need at least two points"});
    return out;
  }
  const auto source = share(instance.space);
  for (int rep = 0; rep < spec.repeats; ++rep) {
    const auto started = Clock::now();
    Rng rng(mix_seed(mix_seed(spec.seed, fnv1a64(instance.id)),
                     static_cast<std::uint64_t>(rep)));
    // Random split: a nonempty subset plus up to n points outside it.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    for (int i = m - 1; i > 0; --i) {
      std::swap(order[i], order[rng.uniform_int(i + 1)]);
    }
    const int max_subset = std::max(1, m - spec.n);
    const int s_count = 1 + rng.uniform_int(std::min(max_subset, m - 1));
    const int x_count = std::min(spec.n, m - s_count);
    std::vector<int> subset(order.begin(), order.begin() + s_count);
    std::vector<int> xs(order.begin() + s_count,
                        order.begin() + s_count + x_count);
    std::sort(subset.begin(), subset.end());
    std::sort(xs.begin(), xs.end());

    const double spread = std::max(instance.space.diameter(), 1.0);
    PartialMap phi = [&]() {
      if (target.vector_valued()) {
        std::vector<std::vector<double>> values(
            subset.size(), std::vector<double>(target.dim()));
        for (auto& row : values) {
          for (double& c : row) c = spread * rng.gaussian();
        }
        return PartialMap(source, target, subset, std::move(values));
      }
      std::vector<int> values(subset.size());
      for (int& v : values) v = rng.uniform_int(target.finite_space().size());
      return PartialMap(source, target, subset, std::move(values));
    }();

    GluingOptions options;
    options.oracle = spec.oracle;
    options.delta = spec.delta;
    options.budget = spec.budget;
    options.tol = spec.tol;
    options.cap = spec.cap;
    try {
      const GluingTrace trace = run_claim1(phi, xs, options);
      ResultRow row;
      row.instance_id = instance.id;
      row.quantity = "glue";
      row.set("rep", rep);
      row.set("m", m);
      row.set("delta", trace.delta);
      row.set("lip_phi", trace.lip_phi);
      row.set("psi_constant", trace.psi_constant);
      row.set("achieved", trace.achieved);
      row.set("certified", trace.certified_bound);
      row.set("slack", trace.certified_bound - trace.achieved);
      row.exact = true;
      row.witness_digest = witness_digest(trace_to_json(trace));
      row.wall_time_ms = ms_since(started);
      out.rows.push_back(std::move(row));
    } catch (const CertificationFailure& e) {
      out.failures.push_back({instance.id, "glue_certification", e.what()});
    }
  }
  return out;
}

}  // namespace

RunOutputs run_experiment(const ExperimentSpec& spec, int threads) {
  const int workers = effective_threads(
      threads > 0 ? std::optional<int>(threads) : std::nullopt);

  std::vector<Instance> instances;
  instances.reserve(spec.instances.size());
  for (const auto& inst_spec : spec.instances) {
    instances.push_back(resolve_instance(inst_spec));
  }

  std::optional<TargetSpace> target;
  if (spec.quantity == "claim1_scan" || spec.quantity == "glue_trace") {
    target = target_from_json(
        spec.target.is_null() ? json{{"kind", "uniform"}, {"points", 2}}
                              : spec.target);
  }
  if (spec.quantity == "glue_trace") {
    // Oracle and target have to match before any worker starts.
    const auto kind = target->kind();
    const bool ok =
        (spec.oracle == OracleKind::McShane &&
         kind == TargetSpace::Kind::RealLine) ||
        (spec.oracle == OracleKind::Euclidean &&
         (kind == TargetSpace::Kind::Euclidean ||
          kind == TargetSpace::Kind::RealLine)) ||
        (spec.oracle == OracleKind::BruteForce &&
         kind == TargetSpace::Kind::Finite);
    if (!ok) {
      throw Error("oracle " + oracle_name(spec.oracle) +
                  " does not match the target kind");
    }
  } else if (spec.quantity == "claim1_scan") {
    if (target->kind() != TargetSpace::Kind::Finite) {
      throw Error("claim1_scan needs a finite target");
    }
  } else if (spec.quantity != "modulus") {
    throw Error("unknown quantity: " + spec.quantity);
  }

  const auto started = Clock::now();
  std::vector<TaskOutput> outputs(instances.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> truncated{false};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      if (spec.budget_ms > 0.0 && ms_since(started) > spec.budget_ms) {
        truncated = true;
        continue;  // graceful: remaining instances are skipped, not aborted
      }
      try {
        if (spec.quantity == "claim1_scan") {
          outputs[i] = run_claim1_task(instances[i], spec, *target);
        } else if (spec.quantity == "modulus") {
          outputs[i] = run_modulus_task(instances[i], spec);
        } else {
          outputs[i] = run_glue_task(instances[i], spec, *target);
        }
      } catch (const std::exception& e) {
        outputs[i].failures.push_back(
            {instances[i].id, "error", e.what()});
      }
    }
  };

  if (workers <= 1 || instances.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(instances.size()));
    pool.reserve(count);
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  RunOutputs run;
  run.truncated = truncated.load();
  for (auto& task : outputs) {
    for (auto& row : task.rows) run.rows.push_back(std::move(row));
    for (auto& f : task.failures) run.failures.push_back(std::move(f));
  }
  return run;
}

void write_run_outputs(const RunOutputs& outputs,
                       const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream csv(out_dir / "results.csv", std::ios::binary);
    csv << rows_to_csv(outputs.rows);
  }
  {
    std::ofstream js(out_dir / "results.json", std::ios::binary);
    js << rows_to_json(outputs.rows).dump(2) << '\n';
  }
  {
    json failures = json::array();
    for (const auto& f : outputs.failures) {
      failures.push_back(json{{"instance_id", f.instance_id},
                              {"kind", f.kind},
                              {"detail", f.detail}});
    }
    std::ofstream js(out_dir / "failures.json", std::ios::binary);
    js << failures.dump(2) << '\n';
  }
  {
    // Wall-clock sidecar; the only output excluded from byte determinism.
    std::ofstream csv(out_dir / "timings.csv", std::ios::binary);
    csv << "instance_id,quantity,wall_time_ms\n";
    for (const auto& row : outputs.rows) {
      csv << row.instance_id << ',' << row.quantity << ','
          << format_double(row.wall_time_ms) << '\n';
    }
  }
}

// ============================================================
// Plot data
// ============================================================

PlotData plot_data_from_rows(const std::vector<ResultRow>& rows) {
  PlotData data;
  double index = 0.0;
  for (const auto& row : rows) {
    ++index;
    if (row.quantity == "modulus") {
      const double x = row.get("m").value_or(index);
      if (auto y = row.get("value")) data.modulus_series.push_back({x, *y});
    } else if (row.quantity == "glue") {
      const auto x = row.get("certified");
      const auto y = row.get("achieved");
      if (x && y) data.scatter.push_back({*x, *y});
    } else if (row.quantity == "claim1") {
      const double x = row.get("m").value_or(index);
      if (auto y = row.get("slack")) data.slack_series.push_back({x, *y});
    }
  }
  return data;
}

namespace {

void write_series(const std::filesystem::path& path,
                  const std::vector<std::pair<double, double>>& series) {
  std::ofstream out(path, std::ios::binary);
  for (const auto& [x, y] : series) {
    out << format_double(x) << ' ' << format_double(y) << '\n';
  }
}

}  // namespace

void write_plot_files(const PlotData& data,
                      const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_series(out_dir / "modulus_vs_m.txt", data.modulus_series);
  write_series(out_dir / "achieved_vs_certified.txt", data.scatter);
  write_series(out_dir / "slack_vs_m.txt", data.slack_series);

  // Scatter of achieved (y) against certified (x); everything should sit on
  // or below the diagonal.
  const double width = 640.0;
  const double height = 480.0;
  const double margin = 50.0;
  double lo = 0.0;
  double hi = 1.0;
  for (const auto& [x, y] : data.scatter) {
    hi = std::max({hi, x, y});
  }
  hi *= 1.05;
  const auto px = [&](double v) {
    return margin + (v - lo) / (hi - lo) * (width - 2 * margin);
  };
  const auto py = [&](double v) {
    return height - margin - (v - lo) / (hi - lo) * (height - 2 * margin);
  };

  std::ofstream svg(out_dir / "scatter.svg", std::ios::binary);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"480\" viewBox=\"0 0 640 480\">\n";
  svg << "  <rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  svg << "  <line x1=\"" << format_double(px(lo)) << "\" y1=\""
      << format_double(py(lo)) << "\" x2=\"" << format_double(px(hi))
      << "\" y2=\"" << format_double(py(lo))
      << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << format_double(px(lo)) << "\" y1=\""
      << format_double(py(lo)) << "\" x2=\"" << format_double(px(lo))
      << "\" y2=\"" << format_double(py(hi))
      << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << format_double(px(lo)) << "\" y1=\""
      << format_double(py(lo)) << "\" x2=\"" << format_double(px(hi))
      << "\" y2=\"" << format_double(py(hi))
      << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  for (const auto& [x, y] : data.scatter) {
    svg << "  <circle cx=\"" << format_double(px(x)) << "\" cy=\""
        << format_double(py(y)) << "\" r=\"3\" fill=\"steelblue\" "
           "fill-opacity=\"0.6\"/>\n";
  }
  svg << "  <text x=\"" << format_double(width / 2) << "\" y=\""
      << format_double(height - 12)
      << "\" text-anchor=\"middle\" font-size=\"13\">certified bound"
         "</text>\n";
  svg << "  <text x=\"14\" y=\"" << format_double(height / 2)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 "
         "14 "
      << format_double(height / 2) << ")\">achieved constant</text>\n";
  svg << "</svg>\n";
}

}  // namespace lipext
