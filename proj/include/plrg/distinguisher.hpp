#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "plrg/degree_sequence.hpp"
#include "plrg/graph.hpp"
#include "plrg/pattern.hpp"
#include "plrg/samplers.hpp"

namespace plrg {

struct GraphTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Model { URG, IRG_CHUNG_LU, IRG_EXPONENTIAL, IRG_MAX_ENTROPY };

inline std::string model_name(Model m) {
  switch (m) {
    case Model::URG: return "urg";
    case Model::IRG_CHUNG_LU: return "irg_chung_lu";
    case Model::IRG_EXPONENTIAL: return "irg_exponential";
    case Model::IRG_MAX_ENTROPY: return "irg_max_entropy";
  }
  return "?";
}

// The witness pattern of the search: complete bipartite K_{2,4}, the 2-side
// being vertices 0,1.
inline const Pattern& witness_pattern() {
  static const Pattern p = Pattern::complete_bipartite(2, 4);
  return p;
}

struct AlgorithmConfig {
  double tau;
  std::optional<double> epsilon_override;  // default 1/ln n
  long long attempt_cap = -1;              // default n
  std::uint64_t seed = 0;
};

struct Verdict {
  bool found = false;
  std::array<int, 6> vertices{};  // 2-side first, then the 4-side
  long long attempts_used = 0;
  std::size_t v_prime_size = 0;
  std::size_t w_prime_size = 0;
  bool window_overlap = false;
};

// Linear-time randomized search for an induced K_{2,4} whose 2-side degrees
// lie near n^{1/(tau-1)} and 4-side degrees near n^{(tau-2)/(tau-1)}.
// One degree scan builds the two windows, each is randomly partitioned once
// (pairs / 4-sets), and (pair, 4-set) combinations are tested until the
// attempt cap. When the two degree windows overlap (possible at small n), a
// vertex joins the window whose center is nearer in log-degree.
inline Verdict algorithm1(const Graph& g, const AlgorithmConfig& cfg) {
  const std::size_t n = g.vertex_count();
  if (n < 6) throw GraphTooSmall("need at least 6 vertices");
  const double eps =
      cfg.epsilon_override ? *cfg.epsilon_override : 1.0 / std::log(static_cast<double>(n));
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("epsilon must lie in (0,1)");
  const long long cap = cfg.attempt_cap >= 0 ? cfg.attempt_cap : static_cast<long long>(n);
  const double center_i = std::pow(static_cast<double>(n), 1.0 / (cfg.tau - 1.0));
  const double center_j = std::pow(static_cast<double>(n), (cfg.tau - 2.0) / (cfg.tau - 1.0));
  const double i_lo = center_i * eps, i_hi = center_i / eps;
  const double j_lo = center_j * eps, j_hi = center_j / eps;

  Verdict verdict;
  std::vector<int> v_prime, w_prime;
  for (std::size_t v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(static_cast<int>(v)));
    const bool in_i = d >= i_lo && d <= i_hi;
    const bool in_j = d >= j_lo && d <= j_hi;
    if (in_i && in_j) {
      verdict.window_overlap = true;
      if (std::abs(std::log(d) - std::log(center_i)) <=
          std::abs(std::log(d) - std::log(center_j)))
        v_prime.push_back(static_cast<int>(v));
      else
        w_prime.push_back(static_cast<int>(v));
    } else if (in_i) {
      v_prime.push_back(static_cast<int>(v));
    } else if (in_j) {
      w_prime.push_back(static_cast<int>(v));
    }
  }
  verdict.v_prime_size = v_prime.size();
  verdict.w_prime_size = w_prime.size();

  std::mt19937_64 rng(cfg.seed);
  std::shuffle(v_prime.begin(), v_prime.end(), rng);
  std::shuffle(w_prime.begin(), w_prime.end(), rng);
  const std::size_t pairs = v_prime.size() / 2;
  const std::size_t quads = w_prime.size() / 4;

  for (std::size_t j = 0; j < pairs; ++j) {
    const int u = v_prime[2 * j], v = v_prime[2 * j + 1];
    // the 2-side lists are long, so probe them once per pair; inside the
    // attempt loop every probe goes through a short 4-side adjacency list
    const bool pair_adjacent = g.has_edge(u, v);
    for (std::size_t i = 0; i < quads; ++i) {
      if (verdict.attempts_used >= cap) return verdict;
      ++verdict.attempts_used;
      const int* quad = &w_prime[4 * i];
      // role-specific induced K_{2,4} test: 2-side pair non-adjacent,
      // all 8 pair-to-quad edges present, 4-side mutually non-adjacent
      if (pair_adjacent) continue;
      bool ok = true;
      for (int t = 0; t < 4 && ok; ++t)
        ok = g.has_edge(u, quad[t]) && g.has_edge(v, quad[t]);
      for (int s = 0; s < 4 && ok; ++s)
        for (int t = s + 1; t < 4 && ok; ++t)
          ok = !g.has_edge(quad[s], quad[t]);
      if (ok) {
        verdict.found = true;
        verdict.vertices = {u, v, quad[0], quad[1], quad[2], quad[3]};
        return verdict;
      }
    }
  }
  return verdict;
}

inline std::string classify(const Graph& g, const AlgorithmConfig& cfg) {
  return algorithm1(g, cfg).found ? "URG-like" : "IRG-like";
}

// Degrees (or weights) at the two window centers, in witness slot order.
inline std::array<double, 6> window_center_profile(double tau, std::size_t n) {
  const double ci = std::pow(static_cast<double>(n), 1.0 / (tau - 1.0));
  const double cj = std::pow(static_cast<double>(n), (tau - 2.0) / (tau - 1.0));
  return {ci, ci, cj, cj, cj, cj};
}

// Probability that one (pair, 4-set) attempt with the given degree/weight
// profile realizes the witness pattern: product of the model's 8 edge
// probabilities and 7 non-edge complements. mu_n is the sum of weights
// (IRG kernels) and doubles as L_n for the uniform model.
inline double attempt_success_probability(Model model, double mu_n,
                                          const std::array<double, 6>& profile) {
  const Pattern& p = witness_pattern();
  double prob = 1.0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      double pe;
      switch (model) {
        case Model::URG:
          pe = profile[static_cast<std::size_t>(i)] * profile[static_cast<std::size_t>(j)] /
               (mu_n + profile[static_cast<std::size_t>(i)] * profile[static_cast<std::size_t>(j)]);
          break;
        case Model::IRG_CHUNG_LU:
          pe = kernel_probability(KernelKind::CHUNG_LU, profile[static_cast<std::size_t>(i)],
                                  profile[static_cast<std::size_t>(j)], mu_n);
          break;
        case Model::IRG_EXPONENTIAL:
          pe = kernel_probability(KernelKind::EXPONENTIAL, profile[static_cast<std::size_t>(i)],
                                  profile[static_cast<std::size_t>(j)], mu_n);
          break;
        case Model::IRG_MAX_ENTROPY:
          pe = kernel_probability(KernelKind::MAX_ENTROPY, profile[static_cast<std::size_t>(i)],
                                  profile[static_cast<std::size_t>(j)], mu_n);
          break;
      }
      prob *= p.has_edge(i, j) ? pe : 1.0 - pe;
    }
  return prob;
}

// Convenience overload matching the deterministic construction: mu_n is
// taken from the c=1 power-law sequence at this n.
inline double attempt_success_probability(Model model, const Tau& tau, std::size_t n,
                                          const std::array<double, 6>& profile) {
  DegreeSequence seq = build_powerlaw_sequence(PowerLawSpec(n, tau, 1.0));
  return attempt_success_probability(model, static_cast<double>(seq.L_n), profile);
}

}  // namespace plrg
