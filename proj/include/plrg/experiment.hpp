#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "plrg/census.hpp"
#include "plrg/degree_sequence.hpp"
#include "plrg/distinguisher.hpp"
#include "plrg/graph.hpp"
#include "plrg/limit_constants.hpp"
#include "plrg/optimizer.hpp"
#include "plrg/pattern.hpp"
#include "plrg/samplers.hpp"

#ifndef PLRG_BUILD_ID
#define PLRG_BUILD_ID "unknown"
#endif

namespace plrg {

inline const char* build_id() { return PLRG_BUILD_ID; }

struct ExperimentConfig {
  std::vector<Model> models{Model::URG};
  std::vector<std::size_t> n_grid{1000};
  std::string tau = "2.5";
  double c = 1.0;
  std::string pattern_path;
  int trials = 1;
  std::uint64_t seed = 0;
  long long swap_budget = -1;  // -1: 10 m ln m
  long long attempt_cap = -1;  // -1: n
  double window_eps = 0.25;
  int threads = 1;
  std::string out_path = ".";

  Tau tau_value() const { return Tau(tau); }
};

inline Model model_from_name(const std::string& name) {
  if (name == "urg") return Model::URG;
  if (name == "irg_chung_lu") return Model::IRG_CHUNG_LU;
  if (name == "irg_exponential") return Model::IRG_EXPONENTIAL;
  if (name == "irg_max_entropy") return Model::IRG_MAX_ENTROPY;
  throw std::invalid_argument("unknown model: " + name);
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  if (j.contains("models")) {
    cfg.models.clear();
    for (const auto& m : j.at("models")) cfg.models.push_back(model_from_name(m.get<std::string>()));
  } else if (j.contains("model")) {
    cfg.models = {model_from_name(j.at("model").get<std::string>())};
  }
  if (j.contains("n_grid")) {
    cfg.n_grid = j.at("n_grid").get<std::vector<std::size_t>>();
  } else if (j.contains("n")) {
    cfg.n_grid = {j.at("n").get<std::size_t>()};
  }
  if (j.contains("tau")) {
    if (j.at("tau").is_string())
      cfg.tau = j.at("tau").get<std::string>();
    else
      cfg.tau = j.at("tau").dump();
  }
  cfg.c = j.value("c", cfg.c);
  cfg.pattern_path = j.value("pattern", cfg.pattern_path);
  cfg.trials = j.value("trials", cfg.trials);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.swap_budget = j.value("swap_budget", cfg.swap_budget);
  cfg.attempt_cap = j.value("attempt_cap", cfg.attempt_cap);
  cfg.window_eps = j.value("window_eps", cfg.window_eps);
  cfg.threads = j.value("threads", cfg.threads);
  cfg.out_path = j.value("out", cfg.out_path);
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (std::size_t i = 1; i < cfg.n_grid.size(); ++i)
    if (cfg.n_grid[i] <= cfg.n_grid[i - 1])
      throw std::invalid_argument("n grid must be strictly ascending");
  (void)cfg.tau_value();  // validates tau in (2,3)
  return cfg;
}

inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  std::vector<std::string> names;
  for (Model m : cfg.models) names.push_back(model_name(m));
  j["models"] = names;
  j["n_grid"] = cfg.n_grid;
  j["tau"] = cfg.tau;
  j["c"] = cfg.c;
  j["pattern"] = cfg.pattern_path;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["swap_budget"] = cfg.swap_budget;
  j["attempt_cap"] = cfg.attempt_cap;
  j["window_eps"] = cfg.window_eps;
  j["threads"] = cfg.threads;
  j["out"] = cfg.out_path;
  return j;
}

// FNV-1a over the canonical JSON dump; stamped into every CSV row.
inline std::string config_hash(const ExperimentConfig& cfg) {
  const std::string dump = config_to_json(cfg).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// Deterministic per-task substream.
inline std::uint64_t task_seed(std::uint64_t master, std::uint64_t model_idx, std::uint64_t n,
                               std::uint64_t trial) {
  std::uint64_t x = master;
  x = detail::splitmix64(x ^ (model_idx * 0x9e3779b97f4a7c15ull));
  x = detail::splitmix64(x ^ n);
  x = detail::splitmix64(x ^ trial);
  return x;
}

inline Graph generate_graph(Model model, std::size_t n, const Tau& tau, double c,
                            long long swap_budget, std::uint64_t seed) {
  DegreeSequence seq = build_powerlaw_sequence(PowerLawSpec(n, tau, c));
  if (model == Model::URG) {
    if (swap_budget < 0) {
      Graph start = initial_realization(seq);
      swap_budget = default_swap_budget(start.edge_count());
    }
    return switch_chain_sample(seq, swap_budget, seed);
  }
  WeightVector w = WeightVector::from_degrees(seq);
  KernelKind kind = model == Model::IRG_CHUNG_LU     ? KernelKind::CHUNG_LU
                    : model == Model::IRG_EXPONENTIAL ? KernelKind::EXPONENTIAL
                                                      : KernelKind::MAX_ENTROPY;
  return sample_irg(w, kind, seed);
}

// Bounded worker pool over [0, count); results keyed by index so output
// order is deterministic.
inline void parallel_for_index(std::size_t count, int threads,
                               const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

// --- generate -------------------------------------------------------------

inline std::vector<std::string> run_generate(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_path);
  const Tau tau = cfg.tau_value();
  std::vector<std::string> files;
  struct Task {
    Model model;
    std::size_t model_idx, n, trial;
    std::string path;
  };
  std::vector<Task> tasks;
  for (std::size_t mi = 0; mi < cfg.models.size(); ++mi)
    for (std::size_t n : cfg.n_grid)
      for (int t = 0; t < cfg.trials; ++t) {
        std::ostringstream name;
        std::uint64_t s = task_seed(cfg.seed, mi, n, static_cast<std::uint64_t>(t));
        name << model_name(cfg.models[mi]) << "_n" << n << "_trial" << t << "_seed" << s
             << ".edges";
        tasks.push_back({cfg.models[mi], mi, n, static_cast<std::size_t>(t),
                         (fs::path(cfg.out_path) / name.str()).string()});
      }
  parallel_for_index(tasks.size(), cfg.threads, [&](std::size_t i) {
    const Task& t = tasks[i];
    std::uint64_t s = task_seed(cfg.seed, t.model_idx, t.n, t.trial);
    Graph g = generate_graph(t.model, t.n, tau, cfg.c, cfg.swap_budget, s);
    std::ofstream out(t.path);
    out << "# model=" << model_name(t.model) << " tau=" << cfg.tau << " c=" << cfg.c
        << " seed=" << s << " build=" << build_id() << " config=" << config_hash(cfg) << "\n";
    write_edge_list(g, out);
  });
  for (const Task& t : tasks) files.push_back(t.path);
  return files;
}

// --- scaling --------------------------------------------------------------

struct ScalingRow {
  Model model;
  std::size_t n;
  int trial;
  std::uint64_t seed;
  long long labeled = 0;
  long long windowed = 0;
  bool empty_window = false;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  double fitted_slope = 0.0;
  bool slope_defined = false;
  double predicted_exponent = 0.0;
  std::string hash;
};

inline ScalingReport run_scaling(const ExperimentConfig& cfg, const Pattern& pattern) {
  const Tau tau = cfg.tau_value();
  OptimizationResult opt = optimize_partitions(pattern, tau);
  AlphaAssignment alpha = alpha_from_partition(pattern, opt.maximizers.front(), tau);

  ScalingReport report;
  report.predicted_exponent = opt.exponent_value();
  report.hash = config_hash(cfg);
  const Model model = cfg.models.front();

  struct Task {
    std::size_t n;
    int trial;
  };
  std::vector<Task> tasks;
  for (std::size_t n : cfg.n_grid)
    for (int t = 0; t < cfg.trials; ++t) tasks.push_back({n, t});
  report.rows.resize(tasks.size());
  parallel_for_index(tasks.size(), cfg.threads, [&](std::size_t i) {
    const auto [n, trial] = tasks[i];
    std::uint64_t s = task_seed(cfg.seed, 0, n, static_cast<std::uint64_t>(trial));
    Graph g = generate_graph(model, n, tau, cfg.c, cfg.swap_budget, s);
    ScalingRow row;
    row.model = model;
    row.n = n;
    row.trial = trial;
    row.seed = s;
    row.labeled = count_induced_exact(g, pattern).labeled_count;
    DegreeWindow w(alpha, cfg.window_eps,
                   static_cast<double>(2 * g.edge_count()) / static_cast<double>(n));
    CensusResult wc = count_induced_windowed(g, pattern, w);
    row.windowed = wc.labeled_count;
    row.empty_window = wc.empty_window;
    report.rows[i] = row;
  });

  // slope of log mean-count against log n
  std::vector<std::pair<double, double>> points;
  for (std::size_t n : cfg.n_grid) {
    double sum = 0;
    int cnt = 0;
    for (const ScalingRow& r : report.rows)
      if (r.n == n) {
        sum += static_cast<double>(r.labeled);
        ++cnt;
      }
    double mean = sum / std::max(cnt, 1);
    if (mean > 0) points.emplace_back(static_cast<double>(n), mean);
  }
  if (points.size() >= 3) {
    report.fitted_slope = fit_scaling(points);
    report.slope_defined = true;
  }
  return report;
}

// --- distinguisher benchmark ------------------------------------------------

struct DistinguishRow {
  Model model;
  std::size_t n;
  int trial;
  std::uint64_t seed;
  bool found = false;
  long long attempts = 0;
  std::size_t v_size = 0, w_size = 0;
};

struct DistinguishReport {
  std::vector<DistinguishRow> rows;
  std::vector<std::pair<Model, double>> find_rates;
  double analytic_ratio_urg_vs_exp = 0.0;
  std::string hash;
};

inline DistinguishReport run_distinguish_benchmark(const ExperimentConfig& cfg) {
  const Tau tau = cfg.tau_value();
  DistinguishReport report;
  report.hash = config_hash(cfg);
  const std::size_t n = cfg.n_grid.back();

  struct Task {
    std::size_t model_idx;
    int trial;
  };
  std::vector<Task> tasks;
  for (std::size_t mi = 0; mi < cfg.models.size(); ++mi)
    for (int t = 0; t < cfg.trials; ++t) tasks.push_back({mi, t});
  report.rows.resize(tasks.size());
  parallel_for_index(tasks.size(), cfg.threads, [&](std::size_t i) {
    const auto [mi, trial] = tasks[i];
    std::uint64_t s = task_seed(cfg.seed, mi, n, static_cast<std::uint64_t>(trial));
    Graph g = generate_graph(cfg.models[mi], n, tau, cfg.c, cfg.swap_budget, s);
    AlgorithmConfig acfg;
    acfg.tau = tau.as_double();
    acfg.attempt_cap = cfg.attempt_cap;
    acfg.seed = detail::splitmix64(s);
    Verdict v = algorithm1(g, acfg);
    report.rows[i] = {cfg.models[mi], n,      trial,        s,
                      v.found,        v.attempts_used, v.v_prime_size, v.w_prime_size};
  });

  for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
    int found = 0, total = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i)
      if (tasks[i].model_idx == mi) {
        ++total;
        found += report.rows[i].found ? 1 : 0;
      }
    report.find_rates.emplace_back(cfg.models[mi], static_cast<double>(found) /
                                                       static_cast<double>(std::max(total, 1)));
  }

  auto profile = window_center_profile(tau.as_double(), n);
  DegreeSequence seq = build_powerlaw_sequence(PowerLawSpec(n, tau, cfg.c));
  const double mu_n = static_cast<double>(seq.L_n);
  const double p_urg = attempt_success_probability(Model::URG, mu_n, profile);
  const double p_exp = attempt_success_probability(Model::IRG_EXPONENTIAL, mu_n, profile);
  report.analytic_ratio_urg_vs_exp = p_exp > 0 ? p_urg / p_exp
                                               : std::numeric_limits<double>::infinity();
  return report;
}

}  // namespace plrg
