#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plrg/experiment.hpp"

using namespace plrg;

namespace {

Pattern load_pattern(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--pattern", "cannot open " + path);
  return read_pattern(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--graph", "cannot open " + path);
  return read_edge_list(in);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json j;
  in >> j;
  return config_from_json(j);
}

std::ostream& open_out(std::ofstream& file, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") return std::cout;
  file.open(out_path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + out_path);
  return file;
}

std::vector<Rat> parse_alpha_csv(const std::string& csv) {
  std::vector<Rat> alphas;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) alphas.push_back(parse_decimal(item));
  return alphas;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-law random graphs: generation, induced-subgraph census, "
               "degree-placement optimization and model distinguishing"};
  app.set_version_flag("--version", std::string(build_id()));
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int threads = 1;
  std::string out_path;
  app.add_option("--seed", seed, "master RNG seed")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->capture_default_str();
  app.add_option("--out", out_path, "output file or directory ('-' for stdout)");

  // generate
  auto* gen = app.add_subcommand("generate", "sample graphs to edge-list files");
  std::string gen_config, gen_model = "urg", gen_tau = "2.5";
  std::size_t gen_n = 1000;
  int gen_trials = 1;
  double gen_c = 1.0;
  long long gen_swaps = -1;
  gen->add_option("--config", gen_config, "JSON config file (overrides other flags)");
  gen->add_option("--model", gen_model, "urg | irg_chung_lu | irg_exponential | irg_max_entropy");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--tau", gen_tau, "tail exponent in (2,3)");
  gen->add_option("--c", gen_c, "degree scale constant");
  gen->add_option("--trials", gen_trials, "graphs per (model, n)");
  gen->add_option("--swap-budget", gen_swaps, "switch-chain swaps (-1: 10 m ln m)");

  // census
  auto* cen = app.add_subcommand("census", "count induced copies of a pattern");
  std::string cen_graph, cen_pattern, cen_alpha;
  double cen_eps = 0.25, cen_mu = 0.0;
  cen->add_option("--graph", cen_graph, "edge-list file")->required();
  cen->add_option("--pattern", cen_pattern, "pattern file")->required();
  cen->add_option("--alpha", cen_alpha, "comma-separated slot exponents (enables windowing)");
  cen->add_option("--eps", cen_eps, "window half-width parameter in (0,1)");
  cen->add_option("--mu", cen_mu, "window scale mu (default: 2m/n of the graph)");

  // optimize
  auto* opt = app.add_subcommand("optimize", "degree-placement optimum of a pattern");
  std::string opt_pattern, opt_tau = "2.5", opt_format = "json";
  opt->add_option("--pattern", opt_pattern, "pattern file")->required();
  opt->add_option("--tau", opt_tau, "tail exponent in (2,3)");
  opt->add_option("--format", opt_format, "json | csv");

  // scaling
  auto* sca = app.add_subcommand("scaling", "count scaling experiment over an n grid");
  std::string sca_config;
  sca->add_option("--config", sca_config, "JSON config file")->required();

  // distinguish
  auto* dis = app.add_subcommand("distinguish", "search one graph, or benchmark via --config");
  std::string dis_graph, dis_tau = "2.5", dis_config;
  long long dis_cap = -1;
  double dis_eps = 0.0;
  dis->add_option("--graph", dis_graph, "edge-list file (single-graph mode)");
  dis->add_option("--tau", dis_tau, "tail exponent in (2,3)");
  dis->add_option("--cap", dis_cap, "attempt cap (-1: n)");
  dis->add_option("--eps", dis_eps, "window epsilon override (0: 1/ln n)");
  dis->add_option("--config", dis_config, "JSON config file (benchmark mode)");

  // aconst
  auto* aco = app.add_subcommand("aconst", "limiting-constant Monte Carlo estimate");
  std::string aco_pattern, aco_tau = "2.5";
  double aco_c = 1.0, aco_mu = 0.0, aco_trunc = 0.0;
  long long aco_samples = 1000000;
  aco->add_option("--pattern", aco_pattern, "pattern file")->required();
  aco->add_option("--tau", aco_tau, "tail exponent in (2,3)");
  aco->add_option("--c", aco_c, "degree scale constant (tail constant is c^{tau-1})");
  aco->add_option("--mu", aco_mu, "mean degree (default: from the c=1 sequence at n=10^5)");
  aco->add_option("--samples", aco_samples, "Monte Carlo samples");
  aco->add_option("--trunc", aco_trunc, "truncate the domain to [eps, 1/eps]^k (0: full)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream file;
    if (gen->parsed()) {
      ExperimentConfig cfg;
      if (!gen_config.empty()) {
        cfg = load_config(gen_config);
      } else {
        cfg.models = {model_from_name(gen_model)};
        cfg.n_grid = {gen_n};
        cfg.tau = gen_tau;
        cfg.c = gen_c;
        cfg.trials = gen_trials;
        cfg.swap_budget = gen_swaps;
        cfg.seed = seed;
        cfg.threads = threads;
        if (!out_path.empty()) cfg.out_path = out_path;
      }
      for (const std::string& f : run_generate(cfg)) std::cout << f << "\n";
      return 0;
    }

    if (cen->parsed()) {
      Graph g = load_graph(cen_graph);
      Pattern p = load_pattern(cen_pattern);
      CensusResult r;
      if (!cen_alpha.empty()) {
        AlphaAssignment alpha;
        alpha.alpha = parse_alpha_csv(cen_alpha);
        double mu = cen_mu > 0.0 ? cen_mu
                                 : 2.0 * static_cast<double>(g.edge_count()) /
                                       static_cast<double>(g.vertex_count());
        r = count_induced_windowed(g, p, DegreeWindow(alpha, cen_eps, mu));
      } else {
        r = count_induced_exact(g, p);
      }
      std::ostream& out = open_out(file, out_path);
      out << "n,labeled,orbit,tuples_examined,empty_window,build,seed\n";
      out << g.vertex_count() << "," << r.labeled_count << "," << to_double(r.orbit_count)
          << "," << r.tuples_examined << "," << (r.empty_window ? 1 : 0) << "," << build_id()
          << "," << seed << "\n";
      return 0;
    }

    if (opt->parsed()) {
      Pattern p = load_pattern(opt_pattern);
      Tau tau(opt_tau);
      OptimizationResult r = optimize_partitions(p, tau);
      AlphaAssignment alpha = alpha_from_partition(p, r.maximizers.front(), tau);
      std::ostream& out = open_out(file, out_path);
      if (opt_format == "csv") {
        out << "k,tau,B,unique,exponent,alpha,build\n";
        out << p.k() << "," << opt_tau << "," << r.B_value() << "," << (r.unique ? 1 : 0)
            << "," << r.exponent_value() << ",\"";
        const auto a = alpha.as_doubles();
        for (std::size_t i = 0; i < a.size(); ++i) out << (i ? ";" : "") << a[i];
        out << "\"," << build_id() << "\n";
      } else {
        nlohmann::json j;
        j["k"] = p.k();
        j["tau"] = opt_tau;
        j["B"] = r.B_value();
        j["B_exact"] = {r.B.numerator(), r.B.denominator()};
        j["unique"] = r.unique;
        j["exponent"] = r.exponent_value();
        j["alpha"] = alpha.as_doubles();
        std::vector<std::vector<int>> maxers;
        for (const auto& m : r.maximizers) maxers.push_back(m.set_of);
        j["maximizers"] = maxers;
        j["build"] = build_id();
        out << j.dump(2) << "\n";
      }
      return 0;
    }

    if (sca->parsed()) {
      ExperimentConfig cfg = load_config(sca_config);
      if (threads > 1) cfg.threads = threads;
      if (cfg.pattern_path.empty())
        throw CLI::ValidationError("--config", "scaling needs a pattern file in the config");
      Pattern p = load_pattern(cfg.pattern_path);
      ScalingReport rep = run_scaling(cfg, p);
      std::ostream& out = open_out(file, out_path);
      out << "model,n,trial,seed,labeled,windowed,empty_window,config,build\n";
      for (const ScalingRow& r : rep.rows)
        out << model_name(r.model) << "," << r.n << "," << r.trial << "," << r.seed << ","
            << r.labeled << "," << r.windowed << "," << (r.empty_window ? 1 : 0) << ","
            << rep.hash << "," << build_id() << "\n";
      out << "# fitted_slope=" << (rep.slope_defined ? std::to_string(rep.fitted_slope)
                                                     : std::string("undefined"))
          << " predicted_exponent=" << rep.predicted_exponent << "\n";
      return 0;
    }

    if (dis->parsed()) {
      std::ostream& out = open_out(file, out_path);
      if (!dis_config.empty()) {
        ExperimentConfig cfg = load_config(dis_config);
        if (threads > 1) cfg.threads = threads;
        DistinguishReport rep = run_distinguish_benchmark(cfg);
        out << "model,n,trial,seed,found,attempts,v_size,w_size,config,build\n";
        for (const DistinguishRow& r : rep.rows)
          out << model_name(r.model) << "," << r.n << "," << r.trial << "," << r.seed << ","
              << (r.found ? 1 : 0) << "," << r.attempts << "," << r.v_size << "," << r.w_size
              << "," << rep.hash << "," << build_id() << "\n";
        for (auto [m, rate] : rep.find_rates)
          out << "# find_rate_" << model_name(m) << "=" << rate << "\n";
        out << "# analytic_ratio_urg_vs_exp=" << rep.analytic_ratio_urg_vs_exp << "\n";
        return 0;
      }
      if (dis_graph.empty())
        throw CLI::ValidationError("distinguish", "need --graph or --config");
      Graph g = load_graph(dis_graph);
      AlgorithmConfig acfg;
      acfg.tau = Tau(dis_tau).as_double();
      acfg.attempt_cap = dis_cap;
      acfg.seed = seed;
      if (dis_eps > 0.0) acfg.epsilon_override = dis_eps;
      Verdict v = algorithm1(g, acfg);
      nlohmann::json j;
      j["outcome"] = v.found ? "URG-like" : "IRG-like";
      j["found"] = v.found;
      j["attempts"] = v.attempts_used;
      j["v_prime_size"] = v.v_prime_size;
      j["w_prime_size"] = v.w_prime_size;
      j["window_overlap"] = v.window_overlap;
      if (v.found) j["found_vertices"] = std::vector<int>(v.vertices.begin(), v.vertices.end());
      j["seed"] = seed;
      j["build"] = build_id();
      out << j.dump(2) << "\n";
      return 0;
    }

    if (aco->parsed()) {
      Pattern p = load_pattern(aco_pattern);
      Tau tau(aco_tau);
      double mu = aco_mu;
      if (mu <= 0.0)
        mu = build_powerlaw_sequence(PowerLawSpec(100000, tau, aco_c)).mu_hat;
      const double C = std::pow(aco_c, tau.as_double() - 1.0);
      IntegralEstimate est = aco_trunc > 0.0
                                 ? A_truncated(p, tau, C, mu, aco_trunc, aco_samples, seed)
                                 : A_monte_carlo(p, tau, C, mu, aco_samples, seed);
      std::ostream& out = open_out(file, out_path);
      out << "estimate,stderr,samples,tau,c,mu,seed,build\n";
      out << est.mean << "," << est.stderr_ << "," << est.samples << "," << aco_tau << ","
          << aco_c << "," << mu << "," << seed << "," << build_id() << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
