// lipext: compute Lipschitz extension moduli on finite metric spaces, run
// the glued-extension construction with certified bounds, and drive seeded
// experiment batches.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lipext/experiment.hpp"
#include "lipext/extend.hpp"
#include "lipext/gluing.hpp"
#include "lipext/instances.hpp"
#include "lipext/io.hpp"
#include "lipext/moduli.hpp"

namespace {

using lipext::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lipext::Error("cannot open file: " + path);
  return json::parse(in);
}

void emit(const json& j, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw lipext::Error("cannot write file: " + out_file);
  out << j.dump(2) << '\n';
}

std::vector<int> parse_index_list(const std::string& arg) {
  std::vector<int> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

// Shorthands: uniform:K, euclidean:D, real_line, or @file with target JSON.
json parse_target(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return load_json(arg.substr(1));
  if (arg == "real_line") return json{{"kind", "real_line"}};
  const auto colon = arg.find(':');
  if (colon != std::string::npos) {
    const std::string head = arg.substr(0, colon);
    const int param = std::stoi(arg.substr(colon + 1));
    if (head == "uniform") return json{{"kind", "uniform"}, {"points", param}};
    if (head == "euclidean") return json{{"kind", "euclidean"}, {"dim", param}};
  }
  throw lipext::Error("cannot parse target: " + arg +
                      " (use uniform:K, euclidean:D, real_line, or @file)");
}

struct CommonArgs {
  std::string instance_file;
  std::string out_file;
};

int cmd_validate(const std::string& instance_file) {
  const json j = load_json(instance_file);
  if (j.contains("metric")) {
    const auto violations = lipext::check_metric(
        j.at("metric").at("dist").get<std::vector<std::vector<double>>>());
    json report = json::array();
    for (const auto& v : violations) report.push_back(v.describe());
    std::cout << json{{"valid", violations.empty()}, {"violations", report}}
                     .dump(2)
              << '\n';
    return violations.empty() ? 0 : 1;
  }
  // points / graph forms validate during construction
  try {
    lipext::instance_from_json(j);
  } catch (const lipext::Error& e) {
    std::cout << json{{"valid", false}, {"violations", {e.what()}}}.dump(2)
              << '\n';
    return 1;
  }
  std::cout << json{{"valid", true}, {"violations", json::array()}}.dump(2)
            << '\n';
  return 0;
}

int cmd_gen(const std::string& kind, int m, int n, int dim, double p,
            double edge_prob, double w_min, double w_max, std::uint64_t seed,
            const std::string& out_file) {
  json out;
  if (kind == "path") {
    std::vector<lipext::WeightedEdge> edges;
    for (int i = 0; i < m; ++i) edges.push_back({i, i + 1, 1.0});
    lipext::graph_metric(edges, m + 1);  // sanity
    out = lipext::graph_instance_json(edges, m + 1);
  } else if (kind == "cycle") {
    std::vector<lipext::WeightedEdge> edges;
    for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m, 1.0});
    lipext::graph_metric(edges, m);
    out = lipext::graph_instance_json(edges, m);
  } else if (kind == "random_graph") {
    lipext::RandomGraphParams params{n, edge_prob, w_min, w_max, seed};
    const auto generated = lipext::random_graph_space(params);
    out = lipext::graph_instance_json(generated.edges, n);
    if (generated.retries > 0) {
      std::cerr << "note: " << generated.retries
                << " disconnected draw(s) discarded\n";
    }
  } else if (kind == "lp_cloud") {
    lipext::LpCloudParams params{n, dim, p, seed};
    const auto generated = lipext::lp_cloud_space(params);
    out = lipext::points_instance_json(generated.points, p);
  } else {
    throw lipext::Error("unknown generator kind: " + kind);
  }
  emit(out, out_file);
  return 0;
}

int cmd_extend(const CommonArgs& common, const std::string& map_file,
               const std::string& to_arg, const std::string& oracle_name,
               std::int64_t budget, double tol, std::uint64_t cap) {
  const auto instance = lipext::instance_from_json(load_json(common.instance_file));
  const auto source = lipext::share(instance.space);
  const auto phi = lipext::map_from_json(load_json(map_file), source);

  std::vector<int> to;
  if (to_arg == "all") {
    to.resize(instance.space.size());
    for (int i = 0; i < instance.space.size(); ++i) to[i] = i;
  } else {
    to = parse_index_list(to_arg);
  }

  lipext::ExtensionResult result = [&]() {
    const auto oracle = lipext::oracle_from_name(oracle_name);
    switch (oracle) {
      case lipext::OracleKind::McShane:
        return lipext::mcshane_extend(phi, to);
      case lipext::OracleKind::Euclidean:
        return lipext::euclidean_extend(phi, to, budget, tol);
      default:
        return lipext::brute_force_extend(phi, to, cap);
    }
  }();
  emit(lipext::extension_to_json(result), common.out_file);
  return 0;
}

int cmd_glue(const CommonArgs& common, const std::string& map_file,
             const std::string& xs_arg, const std::string& oracle_name,
             double delta, bool perturb, std::optional<double> paper_k,
             std::int64_t budget, double tol, std::uint64_t cap) {
  const auto instance = lipext::instance_from_json(load_json(common.instance_file));
  const auto source = lipext::share(instance.space);
  const auto phi = lipext::map_from_json(load_json(map_file), source);

  lipext::GluingOptions options;
  options.oracle = lipext::oracle_from_name(oracle_name);
  options.delta = delta;
  options.perturb = perturb;
  options.paper_k = paper_k;
  options.budget = budget;
  options.tol = tol;
  options.cap = cap;
  const auto trace = lipext::run_claim1(phi, parse_index_list(xs_arg), options);
  emit(lipext::trace_to_json(trace), common.out_file);
  return 0;
}

int cmd_modulus(const CommonArgs& common, const std::string& quantity,
                const std::string& subset_arg, int n,
                const std::string& target_arg, std::uint64_t cap, int trials,
                std::int64_t budget, std::uint64_t seed,
                const std::string& out_format) {
  const auto instance = lipext::instance_from_json(load_json(common.instance_file));
  const json target_json = parse_target(target_arg);
  const std::string target_kind = target_json.at("kind").get<std::string>();
  const bool vector_target =
      target_kind == "euclidean" || target_kind == "real_line";

  json result_json;
  std::string csv;
  if (quantity == "e") {
    const auto subset = parse_index_list(subset_arg);
    lipext::ModulusResult result;
    if (vector_target) {
      lipext::EuclideanModulusOptions options;
      options.dim = target_kind == "euclidean"
                        ? target_json.at("dim").get<int>()
                        : 1;
      options.trials = trials;
      options.budget = budget;
      options.seed = seed;
      result = lipext::modulus_for_subset_euclidean(instance.space, subset,
                                                    options);
    } else {
      result = lipext::modulus_for_subset(
          instance.space, subset, lipext::target_from_json(target_json), cap);
    }
    result_json = lipext::modulus_to_json(result);
    csv = "quantity,value,exact\ne," + lipext::format_double(result.value) +
          "," + (result.exact ? std::string("1") : std::string("0")) + "\n";
  } else if (quantity == "e_n" || quantity == "e_up_n") {
    if (vector_target) {
      throw lipext::Error(quantity + " needs a finite target");
    }
    const auto target = lipext::target_from_json(target_json);
    const auto result = quantity == "e_n"
                            ? lipext::e_n(instance.space, n, target, cap)
                            : lipext::e_up_n(instance.space, n, target, cap);
    result_json = lipext::modulus_to_json(result);
    csv = "quantity,value,exact\n" + quantity + "," +
          lipext::format_double(result.value) + "," +
          (result.exact ? std::string("1") : std::string("0")) + "\n";
  } else if (quantity == "claim1") {
    if (vector_target) {
      throw lipext::Error("claim1 needs a finite target");
    }
    const auto check = lipext::check_claim1(
        instance.space, n, lipext::target_from_json(target_json), cap);
    result_json = lipext::claim1_to_json(check);
    csv = "e_up_n,e_n,slack\n" + lipext::format_double(check.e_up_value) +
          "," + lipext::format_double(check.e_n_value) + "," +
          lipext::format_double(check.slack) + "\n";
  } else {
    throw lipext::Error("unknown quantity: " + quantity +
                        " (use e, e_n, e_up_n, claim1)");
  }

  if (out_format == "csv") {
    if (common.out_file.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(common.out_file, std::ios::binary);
      out << csv;
    }
  } else {
    emit(result_json, common.out_file);
  }
  return 0;
}

int cmd_run(const std::string& spec_file, const std::string& out_dir,
            int threads) {
  const auto spec = lipext::spec_from_json(load_json(spec_file));
  const auto outputs = lipext::run_experiment(spec, threads);
  lipext::write_run_outputs(outputs, out_dir);
  std::cout << "rows=" << outputs.rows.size()
            << " failures=" << outputs.failures.size()
            << " truncated=" << (outputs.truncated ? 1 : 0) << '\n';
  return outputs.failures.empty() ? 0 : 1;
}

int cmd_plot(const std::string& results_file, const std::string& out_dir) {
  const auto rows = lipext::rows_from_json(load_json(results_file));
  lipext::write_plot_files(lipext::plot_data_from_rows(rows), out_dir);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz extension moduli on finite metric spaces"};
  app.require_subcommand(1);

  // validate
  std::string validate_instance;
  auto* validate = app.add_subcommand("validate", "check the metric axioms");
  validate->add_option("instance", validate_instance, "instance JSON file")
      ->required();

  // gen
  std::string gen_kind = "path";
  int gen_m = 4, gen_n = 6, gen_dim = 2;
  double gen_p = 2.0, gen_edge_prob = 0.5, gen_wmin = 1.0, gen_wmax = 3.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--kind", gen_kind, "path|cycle|random_graph|lp_cloud")
      ->required();
  gen->add_option("--m", gen_m, "path edge count / cycle size");
  gen->add_option("--n", gen_n, "vertex / point count");
  gen->add_option("--dim", gen_dim, "cloud dimension");
  gen->add_option("--p", gen_p, "l_p exponent");
  gen->add_option("--edge-prob", gen_edge_prob, "edge probability");
  gen->add_option("--w-min", gen_wmin, "minimum edge weight");
  gen->add_option("--w-max", gen_wmax, "maximum edge weight");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // shared flags
  CommonArgs extend_common, glue_common, modulus_common;
  std::string extend_map, extend_to = "all", extend_oracle = "mcshane";
  std::int64_t extend_budget = 50000;
  double extend_tol = 1e-9;
  std::uint64_t extend_cap = lipext::kDefaultEnumerationCap;
  auto* extend = app.add_subcommand("extend", "extend a map to a superset");
  extend->add_option("--instance", extend_common.instance_file)->required();
  extend->add_option("--map", extend_map, "map JSON file")->required();
  extend->add_option("--to", extend_to, "comma-separated indices or 'all'");
  extend->add_option("--oracle", extend_oracle, "mcshane|euclidean|brute");
  extend->add_option("--budget", extend_budget);
  extend->add_option("--tol", extend_tol);
  extend->add_option("--cap", extend_cap);
  extend->add_option("--out", extend_common.out_file);

  std::string glue_map, glue_xs, glue_oracle = "mcshane";
  double glue_delta = 0.0;
  bool glue_perturb = false;
  double glue_paper_k = -1.0;
  std::int64_t glue_budget = 50000;
  double glue_tol = 1e-9;
  std::uint64_t glue_cap = lipext::kDefaultEnumerationCap;
  auto* glue = app.add_subcommand("glue", "run the glued-extension pipeline");
  glue->add_option("--instance", glue_common.instance_file)->required();
  glue->add_option("--map", glue_map, "map JSON for phi on S")->required();
  glue->add_option("--xs", glue_xs, "comma-separated new points")->required();
  glue->add_option("--oracle", glue_oracle, "mcshane|euclidean|brute");
  glue->add_option("--delta", glue_delta, "slack parameter, >= 0");
  glue->add_flag("--perturb", glue_perturb,
                 "pick the largest-index anchor within the slack");
  glue->add_option("--paper-k", glue_paper_k,
                   "worst-case modulus K for the paper-form bound");
  glue->add_option("--budget", glue_budget);
  glue->add_option("--tol", glue_tol);
  glue->add_option("--cap", glue_cap);
  glue->add_option("--out", glue_common.out_file);

  std::string mod_quantity = "e", mod_subset, mod_target = "uniform:2";
  int mod_n = 1, mod_trials = 32;
  std::uint64_t mod_cap = lipext::kDefaultEnumerationCap, mod_seed = 0;
  std::int64_t mod_budget = 50000;
  std::string mod_out_format = "json";
  auto* modulus = app.add_subcommand("modulus", "compute extension moduli");
  modulus->add_option("--instance", modulus_common.instance_file)->required();
  modulus->add_option("--quantity", mod_quantity, "e|e_n|e_up_n|claim1");
  modulus->add_option("--subset", mod_subset, "subset for quantity e");
  modulus->add_option("--n", mod_n, "subset / added point count");
  modulus->add_option("--target", mod_target,
                      "uniform:K|euclidean:D|real_line|@file");
  modulus->add_option("--cap", mod_cap, "enumeration cap");
  modulus->add_option("--trials", mod_trials, "euclidean sampling trials");
  modulus->add_option("--budget", mod_budget, "euclidean solver budget");
  modulus->add_option("--seed", mod_seed, "euclidean sampling seed");
  modulus->add_option("--out", modulus_common.out_file);
  modulus->add_option("--out-format", mod_out_format, "json|csv");

  std::string run_spec, run_out_dir = "results";
  int run_threads = 0;
  auto* run = app.add_subcommand("run", "run an experiment spec");
  run->add_option("--spec", run_spec, "experiment spec JSON")->required();
  run->add_option("--out-dir", run_out_dir, "output directory");
  run->add_option("--threads", run_threads,
                  "worker count (LIPEXT_THREADS caps it)");

  std::string plot_results, plot_out_dir = "plots";
  auto* plot = app.add_subcommand("plot", "emit plot series and an SVG");
  plot->add_option("--results", plot_results, "results.json from 'run'")
      ->required();
  plot->add_option("--out-dir", plot_out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(validate_instance);
    if (*gen) {
      return cmd_gen(gen_kind, gen_m, gen_n, gen_dim, gen_p, gen_edge_prob,
                     gen_wmin, gen_wmax, gen_seed, gen_out);
    }
    if (*extend) {
      return cmd_extend(extend_common, extend_map, extend_to, extend_oracle,
                        extend_budget, extend_tol, extend_cap);
    }
    if (*glue) {
      return cmd_glue(glue_common, glue_map, glue_xs, glue_oracle, glue_delta,
                      glue_perturb,
                      glue_paper_k >= 0.0 ? std::optional<double>(glue_paper_k)
                                          : std::nullopt,
                      glue_budget, glue_tol, glue_cap);
    }
    if (*modulus) {
      return cmd_modulus(modulus_common, mod_quantity, mod_subset, mod_n,
                         mod_target, mod_cap, mod_trials, mod_budget, mod_seed,
                         mod_out_format);
    }
    if (*run) return cmd_run(run_spec, run_out_dir, run_threads);
    if (*plot) return cmd_plot(plot_results, plot_out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
