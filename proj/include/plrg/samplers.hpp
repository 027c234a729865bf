#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "plrg/degree_sequence.hpp"
#include "plrg/graph.hpp"

namespace plrg {

struct NonPositiveInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class KernelKind { CHUNG_LU, EXPONENTIAL, MAX_ENTROPY };

struct WeightVector {
  std::vector<double> weights;
  double mu_n = 0.0;  // sum of weights = mean weight * n

  explicit WeightVector(std::vector<double> w) : weights(std::move(w)) {
    for (double x : weights)
      if (x <= 0) throw NonPositiveInput("weights must be positive");
    mu_n = std::accumulate(weights.begin(), weights.end(), 0.0);
  }

  static WeightVector from_degrees(const DegreeSequence& seq) {
    std::vector<double> w(seq.degrees.begin(), seq.degrees.end());
    return WeightVector(std::move(w));
  }
};

// Edge probability of the three rank-1 kernels. The exponential kernel's
// textbook display e^{-w_i w_j/(mu n)} is the probability of NO edge; the
// edge probability here is its complement, so connectivity increases with
// weight for all three kernels.
inline double kernel_probability(KernelKind kind, double wi, double wj, double mu_n) {
  if (wi <= 0 || wj <= 0 || mu_n <= 0) throw NonPositiveInput("kernel inputs must be positive");
  const double x = wi * wj / mu_n;
  switch (kind) {
    case KernelKind::CHUNG_LU:
      return std::min(x, 1.0);
    case KernelKind::EXPONENTIAL:
      return -std::expm1(-x);
    case KernelKind::MAX_ENTROPY:
      return wi * wj / (wi * wj + mu_n);
  }
  return 0.0;
}

// Leading-order probability that a uniform random graph with sum of degrees
// L_n places an edge between vertices of degrees di and dj.
inline double urg_edge_probability(long long di, long long dj, long long L_n) {
  const double x = static_cast<double>(di) * static_cast<double>(dj);
  return x / (static_cast<double>(L_n) + x);
}

// Rank-1 inhomogeneous random graph in expected O(n + m): vertices are
// processed in decreasing weight order and candidate partners are reached by
// geometric skips under the Chung-Lu bound min(1, w_i w_j / mu_n), which
// dominates all three kernels; each candidate is kept with p/bound.
inline Graph sample_irg(const WeightVector& w, KernelKind kind, std::uint64_t seed) {
  const std::size_t n = w.weights.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w.weights[static_cast<std::size_t>(a)] >
                                              w.weights[static_cast<std::size_t>(b)]; });
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double wi = w.weights[static_cast<std::size_t>(order[i])];
    std::size_t j = i + 1;
    while (j < n) {
      // envelope at the current position; weights are descending, so it
      // dominates every later candidate in this run
      const double bound = std::min(1.0, wi * w.weights[static_cast<std::size_t>(order[j])] / w.mu_n);
      if (bound <= 0.0) break;
      if (bound < 1.0) {
        // geometric skip to the next success of the Bernoulli(bound) envelope
        double u = unif(rng);
        double skip = std::floor(std::log(u) / std::log1p(-bound));
        if (!(skip < static_cast<double>(n - j))) break;
        j += static_cast<std::size_t>(skip);
      }
      const double wj = w.weights[static_cast<std::size_t>(order[j])];
      const double p = kernel_probability(kind, wi, wj, w.mu_n);
      // thin the envelope success down to the target kernel probability
      const double accept = bound >= 1.0 ? p : p / bound;
      if (unif(rng) < accept) {
        adj[static_cast<std::size_t>(order[i])].push_back(order[j]);
        adj[static_cast<std::size_t>(order[j])].push_back(order[i]);
      }
      ++j;
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

// Havel-Hakimi realization of a graphical sequence. Residuals are kept
// sorted descending; within an equal-degree class the *last* members are
// decremented, which preserves sortedness and keeps the whole construction
// O(n + m + d_max).
inline Graph initial_realization(const DegreeSequence& seq) {
  if (!is_graphical(seq.degrees)) throw NotGraphical("degree sequence is not graphical");
  const std::size_t n = seq.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return seq.degrees[static_cast<std::size_t>(a)] > seq.degrees[static_cast<std::size_t>(b)];
  });
  std::vector<long long> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = seq.degrees[static_cast<std::size_t>(order[i])];
  // last_of[v] = last position currently holding residual v, or -1
  std::vector<long long> last_of(static_cast<std::size_t>(seq.d_max) + 2, -1);
  for (std::size_t i = 0; i < n; ++i) last_of[static_cast<std::size_t>(deg[i])] = static_cast<long long>(i);
  std::vector<std::vector<int>> adj(n);
  for (std::size_t head = 0; head < n; ++head) {
    long long want = deg[head];
    if (want <= 0) continue;
    if (head + static_cast<std::size_t>(want) >= n + 1)
      throw NotGraphical("Havel-Hakimi ran out of partners");
    std::size_t p = head + 1;
    while (want > 0) {
      if (p >= n || deg[p] <= 0) throw NotGraphical("Havel-Hakimi ran out of partners");
      const long long v = deg[p];
      const long long block_end = last_of[static_cast<std::size_t>(v)];
      const long long take_end = std::min(block_end, static_cast<long long>(p) + want - 1);
      const long long cnt = take_end - static_cast<long long>(p) + 1;
      if (cnt <= 0) throw NotGraphical("Havel-Hakimi class index corrupted");
      // decrement the last cnt members of the class ending at block_end
      for (long long q = block_end - cnt + 1; q <= block_end; ++q) {
        adj[head].push_back(order[static_cast<std::size_t>(q)]);
        adj[static_cast<std::size_t>(q)].push_back(order[head]);
        deg[static_cast<std::size_t>(q)] = v - 1;
      }
      // surviving members of class v, if any, end just before the taken tail
      const long long idx = block_end - cnt;
      if (idx >= 0 && deg[static_cast<std::size_t>(idx)] == v)
        last_of[static_cast<std::size_t>(v)] = idx;
      else
        last_of[static_cast<std::size_t>(v)] = -1;
      if (last_of[static_cast<std::size_t>(v - 1)] < block_end)
        last_of[static_cast<std::size_t>(v - 1)] = block_end;
      want -= cnt;
      p = static_cast<std::size_t>(take_end) + 1;
    }
    deg[head] = 0;
  }
  // adjacency currently indexed by sorted position owner; re-key to vertex ids
  std::vector<std::vector<int>> by_vertex(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    by_vertex[static_cast<std::size_t>(order[pos])] = std::move(adj[pos]);
  return Graph::from_adjacency(std::move(by_vertex));
}

inline long long default_swap_budget(std::size_t edge_count) {
  if (edge_count < 2) return 0;
  const double m = static_cast<double>(edge_count);
  return static_cast<long long>(std::ceil(10.0 * m * std::log(m)));
}

// Approximate uniform sampler: Havel-Hakimi start, then degree-preserving
// double-edge swaps, rejecting any proposal that would introduce a loop or
// multi-edge. Degrees are exact invariants of the chain.
inline Graph switch_chain_sample(const DegreeSequence& seq, long long swaps, std::uint64_t seed) {
  Graph start = initial_realization(seq);
  const std::size_t n = start.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(start.edge_count());
  for (std::size_t u = 0; u < n; ++u)
    for (int v : start.neighbors(static_cast<int>(u)))
      if (static_cast<int>(u) < v) edges.emplace_back(static_cast<int>(u), v);
  auto key = [n](int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * n + static_cast<std::uint64_t>(v);
  };
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size() * 2);
  for (auto [u, v] : edges) present.insert(key(u, v));
  if (edges.size() < 2 || swaps <= 0) return start;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  for (long long step = 0; step < swaps; ++step) {
    std::size_t i1 = pick(rng);
    std::size_t i2 = pick(rng);
    if (i1 == i2) continue;
    auto [a, b] = edges[i1];
    auto [c, d] = edges[i2];
    if (rng() & 1u) std::swap(c, d);
    // proposal: {a,b},{c,d} -> {a,d},{c,b}
    if (a == d || c == b || a == c || b == d) continue;
    if (present.count(key(a, d)) || present.count(key(c, b))) continue;
    present.erase(key(a, b));
    present.erase(key(c, d));
    present.insert(key(a, d));
    present.insert(key(c, b));
    edges[i1] = {a, d};
    edges[i2] = {c, b};
  }
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return Graph::from_adjacency(std::move(adj));
}

inline Graph switch_chain_sample(const DegreeSequence& seq, std::uint64_t seed) {
  Graph start = initial_realization(seq);
  return switch_chain_sample(seq, default_swap_budget(start.edge_count()), seed);
}

}  // namespace plrg
