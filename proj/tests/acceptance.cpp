// Acceptance suite: one criterion per invocation (argv[1] in 1..11), one
// pass/fail line each, nonzero exit on failure. All tolerances are fixed here.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "plrg/experiment.hpp"

using namespace plrg;

namespace {

bool report(int id, bool pass, const std::string& details) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " (" << details << ")"
            << std::endl;
  return pass;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unif(rng) < p) edges.emplace_back(u, v);
  return build_graph(static_cast<std::size_t>(n), edges);
}

// criterion 1: K_{2,4} exponent equals (4 - 1/(tau-1))(3 - tau)
bool criterion1() {
  Pattern k24 = Pattern::complete_bipartite(2, 4);
  std::ostringstream os;
  bool pass = true;
  for (const char* ts : {"2.1", "2.5", "2.9"}) {
    Tau tau(ts);
    OptimizationResult r = optimize_partitions(k24, tau);
    Rat target = (Rat(4) - Rat(1) / (tau.value - 1)) * (Rat(3) - tau.value);
    bool ok = r.unique && std::abs(to_double(r.exponent - target)) < 1e-9;
    pass = pass && ok;
    os << "tau=" << ts << " exponent=" << r.exponent_value() << (ok ? " ok" : " MISMATCH")
       << "; ";
  }
  return report(1, pass, os.str());
}

// criterion 2: URG K_{2,4} exponent minus the kernel reference 3(3-tau)
bool criterion2() {
  Pattern k24 = Pattern::complete_bipartite(2, 4);
  bool pass = true;
  double worst = 0.0;
  for (int i = 1; i <= 20; ++i) {
    Tau tau(Rat(2) + Rat(i, 21));
    OptimizationResult r = optimize_partitions(k24, tau);
    Rat gap = r.exponent - Rat(3) * (Rat(3) - tau.value);
    Rat target = (Rat(3) - tau.value) * (tau.value - 2) / (tau.value - 1);
    double err = std::abs(to_double(gap - target));
    worst = std::max(worst, err);
    pass = pass && err < 1e-9 && gap > Rat(0);
  }
  std::ostringstream os;
  os << "20 tau points, max |gap - (3-tau)(tau-2)/(tau-1)| = " << worst;
  return report(2, pass, os.str());
}

// criterion 3: grid/partition duality and alpha=0 on degree-one vertices
bool criterion3() {
  bool pass = true;
  int checked = 0;
  for (int k = 3; k <= 5; ++k) {
    for (const Pattern& p : connected_pattern_catalog(k)) {
      for (const char* ts : {"2.1", "2.5", "2.9"}) {
        Tau tau(ts);
        OptimizationResult part = optimize_partitions(p, tau);
        GridResult grid = optimize_grid(p, tau);
        Rat predicted = (Rat(1) - tau.value) * Rat(p.k(), 2) +
                        (Rat(3) - tau.value) / 2 * part.B + (tau.value - 2) / 2 * Rat(p.k1());
        if (std::abs(to_double(grid.value - predicted)) >= 1e-9) pass = false;
        for (const auto& alphas : grid.maximizers)
          for (int v = 0; v < p.k(); ++v)
            if (p.h_degree(v) == 1 && alphas[static_cast<std::size_t>(v)] != Rat(0)) pass = false;
        ++checked;
      }
    }
  }
  std::ostringstream os;
  os << checked << " (pattern, tau) cases, duality exact and leaf alphas zero";
  return report(3, pass, os.str());
}

// criterion 4: backtracking census equals the brute-force tuple scan
bool criterion4() {
  std::vector<Pattern> patterns;
  for (int k = 3; k <= 5; ++k)
    for (const Pattern& p : connected_pattern_catalog(k)) patterns.push_back(p);
  bool pass = true;
  long long comparisons = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    int n = 5 + static_cast<int>(seed % 5);  // n in [5, 9]
    Graph g = random_graph(n, 0.4, seed);
    for (const Pattern& p : patterns) {
      if (p.k() > n) continue;
      if (count_induced_exact(g, p).labeled_count != brute_force_count(g, p)) pass = false;
      ++comparisons;
    }
  }
  std::ostringstream os;
  os << comparisons << " graph-pattern comparisons, all exact";
  return report(4, pass, os.str());
}

// criterion 5: switch-chain edge frequencies vs d_i d_j/(L_n + d_i d_j)
bool criterion5() {
  DegreeSequence seq = build_powerlaw_sequence(PowerLawSpec(2000, Tau("2.5"), 1.0));
  const long long m = static_cast<long long>(seq.L_n / 2);
  const int samples = 400;
  // the three largest-degree pairs: vertices 0,1,2 of the descending sequence
  const std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<int> hits(pairs.size(), 0);
  for (int s = 0; s < samples; ++s) {
    Graph g = switch_chain_sample(seq, 10 * m, 7000u + static_cast<std::uint64_t>(s));
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (g.has_edge(pairs[i].first, pairs[i].second)) ++hits[i];
  }
  bool pass = true;
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    double target = urg_edge_probability(seq.degrees[static_cast<std::size_t>(pairs[i].first)],
                                         seq.degrees[static_cast<std::size_t>(pairs[i].second)],
                                         seq.L_n);
    double freq = static_cast<double>(hits[i]) / samples;
    bool ok = std::abs(freq - target) < 0.05;
    pass = pass && ok;
    os << "(" << pairs[i].first << "," << pairs[i].second << ") freq=" << freq
       << " target=" << target << (ok ? " ok" : " OFF") << "; ";
  }
  return report(5, pass, os.str());
}

// criterion 6: triangle count slope vs 0.75
bool criterion6() {
  Pattern tri = Pattern::clique(3);
  Tau tau("2.5");
  std::vector<std::pair<double, double>> points;
  for (std::size_t n : {1000u, 2000u, 4000u, 8000u, 16000u}) {
    double sum = 0;
    for (int t = 0; t < 10; ++t) {
      Graph g = generate_graph(Model::URG, n, tau, 1.0, -1,
                               task_seed(600, 0, n, static_cast<std::uint64_t>(t)));
      sum += static_cast<double>(count_induced_exact(g, tri).labeled_count);
    }
    points.emplace_back(static_cast<double>(n), sum / 10.0);
  }
  double slope = fit_scaling(points);
  bool pass = std::abs(slope - 0.75) < 0.2;
  std::ostringstream os;
  os << "fitted slope=" << slope << " target=0.75 +- 0.2";
  return report(6, pass, os.str());
}

// criterion 7: A(K3) estimate quality and the finite-size count check
bool criterion7() {
  Pattern tri = Pattern::clique(3);
  Tau tau("2.5");
  DegreeSequence seq16k = build_powerlaw_sequence(PowerLawSpec(16000, tau, 1.0));
  const double mu = seq16k.mu_hat;
  const long long samples = 10000000;
  IntegralEstimate a = A_monte_carlo(tri, tau, 1.0, mu, samples, 71);
  IntegralEstimate b = A_monte_carlo(tri, tau, 1.0, mu, samples, 72);
  bool rel_ok = a.stderr_ / a.mean < 0.01;
  double joint = std::sqrt(a.stderr_ * a.stderr_ + b.stderr_ * b.stderr_);
  bool agree_ok = std::abs(a.mean - b.mean) < 3.0 * joint;

  double sum = 0;
  const int trials = 5;
  for (int t = 0; t < trials; ++t) {
    Graph g = generate_graph(Model::URG, 16000, tau, 1.0, -1,
                             task_seed(700, 0, 16000, static_cast<std::uint64_t>(t)));
    sum += static_cast<double>(count_induced_exact(g, tri).labeled_count);
  }
  double empirical = (sum / trials) / std::pow(16000.0, 0.75);
  double ratio = empirical / a.mean;
  bool size_ok = ratio > 1.0 / 2.5 && ratio < 2.5;
  std::ostringstream os;
  os << "A=" << a.mean << " rel-stderr=" << a.stderr_ / a.mean
     << " seed-gap/joint=" << std::abs(a.mean - b.mean) / joint
     << " empirical/A=" << ratio;
  return report(7, rel_ok && agree_ok && size_ok, os.str());
}

// criterion 8: distinguisher separation at tau=2.6, n=1e5
bool criterion8() {
  ExperimentConfig cfg;
  cfg.models = {Model::URG, Model::IRG_EXPONENTIAL, Model::IRG_CHUNG_LU};
  cfg.n_grid = {100000};
  cfg.tau = "2.6";
  cfg.trials = 20;
  cfg.seed = 800;
  cfg.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  DistinguishReport rep = run_distinguish_benchmark(cfg);
  double urg = -1, irg_exp = -1, irg_cl = -1;
  for (auto [m, rate] : rep.find_rates) {
    if (m == Model::URG) urg = rate;
    if (m == Model::IRG_EXPONENTIAL) irg_exp = rate;
    if (m == Model::IRG_CHUNG_LU) irg_cl = rate;
  }
  bool rates_ok = urg > irg_exp && urg > irg_cl;
  bool analytic_ok = rep.analytic_ratio_urg_vs_exp >= 5.0;
  std::ostringstream os;
  os << "find rates urg=" << urg << " irg_exp=" << irg_exp << " irg_cl=" << irg_cl
     << " analytic urg/exp=" << rep.analytic_ratio_urg_vs_exp;
  return report(8, rates_ok && analytic_ok, os.str());
}

// criterion 9: search wall time roughly doubles when n doubles
bool criterion9() {
  Tau tau("2.5");
  Graph g1 = generate_graph(Model::IRG_EXPONENTIAL, 100000, tau, 1.0, -1, 900 + 100000);
  Graph g2 = generate_graph(Model::IRG_EXPONENTIAL, 200000, tau, 1.0, -1, 900 + 200000);
  // single invocations are ~1ms, too short to time reliably on shared
  // hardware, so each timed run averages a batch of searches, and the two
  // sizes are measured back to back inside each run so load drift between
  // runs cancels in the ratio
  const int reps = 100;
  auto timed_batch = [&](const Graph& g, int r) {
    AlgorithmConfig acfg;
    acfg.tau = tau.as_double();
    acfg.seed = 0;
    volatile bool warm = algorithm1(g, acfg).found;
    (void)warm;
    auto t0 = std::chrono::steady_clock::now();
    for (int j = 0; j < reps; ++j) {
      acfg.seed = static_cast<std::uint64_t>(r * reps + j);
      volatile bool found = algorithm1(g, acfg).found;
      (void)found;
    }
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
  };
  std::vector<double> times1, times2;
  for (int r = 0; r < 5; ++r) {
    times1.push_back(timed_batch(g1, r));
    times2.push_back(timed_batch(g2, r));
  }
  std::sort(times1.begin(), times1.end());
  std::sort(times2.begin(), times2.end());
  double t1 = times1[2];
  double t2 = times2[2];
  double ratio = t2 / t1;
  std::ostringstream os;
  os << "median t(1e5)=" << t1 << "s t(2e5)=" << t2 << "s ratio=" << ratio << " (<= 2.6)";
  return report(9, ratio <= 2.6, os.str());
}

// criterion 10: windowed/total triangle ratio non-decreasing in n
bool criterion10() {
  Pattern tri = Pattern::clique(3);
  Tau tau("2.5");
  OptimizationResult opt = optimize_partitions(tri, tau);
  AlphaAssignment alpha = alpha_from_partition(tri, opt.maximizers.front(), tau);
  std::vector<double> ratios;
  std::ostringstream os;
  for (std::size_t n : {4000u, 8000u, 16000u}) {
    double win_sum = 0, tot_sum = 0;
    for (int t = 0; t < 10; ++t) {
      Graph g = generate_graph(Model::URG, n, tau, 1.0, -1,
                               task_seed(1000, 0, n, static_cast<std::uint64_t>(t)));
      double mu = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
      tot_sum += static_cast<double>(count_induced_exact(g, tri).labeled_count);
      win_sum += static_cast<double>(
          count_induced_windowed(g, tri, DegreeWindow(alpha, 0.25, mu)).labeled_count);
    }
    ratios.push_back(win_sum / tot_sum);
    os << "n=" << n << " ratio=" << ratios.back() << "; ";
  }
  bool pass = ratios[1] >= ratios[0] && ratios[2] >= ratios[1];
  return report(10, pass, os.str());
}

// criterion 11: expected-count oracle and the empirical triangle mean
bool criterion11() {
  bool oracle_ok = true;
  for (std::size_t n : {20u, 35u, 50u}) {
    DegreeSequence seq = build_powerlaw_sequence(PowerLawSpec(n, Tau("2.5"), 1.0));
    for (const Pattern& p : {Pattern::clique(3), Pattern::path(3), Pattern::path(4),
                             Pattern::cycle(4)}) {
      double fast = expected_count(seq, p);
      double slow = expected_count_direct(seq, p);
      if (std::abs(fast - slow) > 1e-12 * std::max(1.0, std::abs(slow))) oracle_ok = false;
    }
  }

  DegreeSequence seq = build_powerlaw_sequence(PowerLawSpec(2000, Tau("2.5"), 1.0));
  Pattern tri = Pattern::clique(3);
  double expected = expected_count(seq, tri);
  const int samples = 200;
  std::vector<double> counts;
  counts.reserve(samples);
  for (int s = 0; s < samples; ++s) {
    Graph g = switch_chain_sample(seq, 1100u + static_cast<std::uint64_t>(s));
    counts.push_back(static_cast<double>(count_induced_exact(g, tri).labeled_count));
  }
  double mean = 0;
  for (double c : counts) mean += c;
  mean /= samples;
  double var = 0;
  for (double c : counts) var += (c - mean) * (c - mean);
  var /= (samples - 1);
  // sigma is the per-sample spread of the count: the product formula is a
  // leading-order approximation, so its finite-size bias is judged against
  // the count's own fluctuation scale
  double sigma = std::sqrt(var);
  bool mc_ok = std::abs(mean - expected) < 3.0 * sigma;
  std::ostringstream os;
  os << "oracle " << (oracle_ok ? "exact" : "MISMATCH") << "; empirical mean=" << mean
     << " expected=" << expected
     << " |diff|/sigma=" << (sigma > 0 ? std::abs(mean - expected) / sigma : 0.0);
  return report(11, oracle_ok && mc_ok, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1..11>\n";
    return 2;
  }
  const int id = std::atoi(argv[1]);
  bool pass = false;
  switch (id) {
    case 1: pass = criterion1(); break;
    case 2: pass = criterion2(); break;
    case 3: pass = criterion3(); break;
    case 4: pass = criterion4(); break;
    case 5: pass = criterion5(); break;
    case 6: pass = criterion6(); break;
    case 7: pass = criterion7(); break;
    case 8: pass = criterion8(); break;
    case 9: pass = criterion9(); break;
    case 10: pass = criterion10(); break;
    case 11: pass = criterion11(); break;
    default:
      std::cerr << "usage: acceptance <criterion 1..11>\n";
      return 2;
  }
  return pass ? 0 : 1;
}
