#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "plrg/graph.hpp"

namespace plrg {

struct DuplicateVertex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kMaxPatternSize = 8;

// A small connected pattern graph H on k <= 8 vertices. Adjacency is kept as
// per-vertex bitmasks so induced checks are pair lookups.
class Pattern {
 public:
  Pattern(int k, std::vector<std::pair<int, int>> edges) : k_(k) {
    if (k < 3 || k > kMaxPatternSize) throw std::invalid_argument("pattern size must be in [3,8]");
    adj_.fill(0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= k || v >= k) throw OutOfRange("pattern edge out of range");
      if (u == v) throw SelfLoop("pattern self loop");
      if (adj_[static_cast<std::size_t>(u)] & (1u << v)) continue;
      adj_[static_cast<std::size_t>(u)] |= 1u << v;
      adj_[static_cast<std::size_t>(v)] |= 1u << u;
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    for (int i = 0; i < k_; ++i) {
      h_degrees_.push_back(__builtin_popcount(adj_[static_cast<std::size_t>(i)]));
      if (h_degrees_.back() == 0) throw std::invalid_argument("pattern has an isolated vertex");
      if (h_degrees_.back() == 1) v1_.push_back(i);
    }
    if (!connected()) throw std::invalid_argument("pattern must be connected");
    automorphism_count_ = count_automorphisms();
  }

  int k() const { return k_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)] & (1u << v); }
  std::uint32_t adjacency_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int h_degree(int v) const { return h_degrees_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degree_one_vertices() const { return v1_; }
  int k1() const { return static_cast<int>(v1_.size()); }
  int k2plus() const { return k_ - k1(); }
  long long automorphism_count() const { return automorphism_count_; }
  int min_h_degree() const { return *std::min_element(h_degrees_.begin(), h_degrees_.end()); }

  static Pattern clique(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Pattern(k, e);
  }

  static Pattern cycle(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Pattern(k, e);
  }

  static Pattern path(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Pattern(k, e);
  }

  // Parts are vertices [0,a) and [a,a+b).
  static Pattern complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Pattern(a + b, e);
  }

  // Canonical key under vertex relabeling: the minimum edge bitmask over all
  // k! permutations. Only used for small-k catalog deduplication.
  std::uint64_t canonical_key() const {
    std::vector<int> perm(static_cast<std::size_t>(k_));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
      std::uint64_t key = 0;
      int bit = 0;
      for (int i = 0; i < k_; ++i)
        for (int j = i + 1; j < k_; ++j, ++bit)
          if (has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
            key |= 1ull << bit;
      best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

 private:
  bool connected() const {
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < k_; ++v)
        if (frontier & (1u << v)) next |= adj_[static_cast<std::size_t>(v)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1u << k_) - 1;
  }

  long long count_automorphisms() const {
    std::vector<int> perm(static_cast<std::size_t>(k_));
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
      bool ok = true;
      for (int i = 0; i < k_ && ok; ++i)
        for (int j = i + 1; j < k_ && ok; ++j)
          if (has_edge(i, j) !=
              has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
            ok = false;
      if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
  }

  int k_;
  std::array<std::uint32_t, kMaxPatternSize> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> h_degrees_;
  std::vector<int> v1_;
  long long automorphism_count_ = 0;
};

inline long long automorphism_count(const Pattern& p) { return p.automorphism_count(); }

// True iff mapping pattern vertex i -> tuple[i] realizes H as an *induced*
// subgraph: every pattern edge present, every pattern non-edge absent.
inline bool induced_match_labeled(const Graph& g, const std::vector<int>& tuple,
                                  const Pattern& p) {
  if (static_cast<int>(tuple.size()) != p.k())
    throw std::invalid_argument("tuple size must equal pattern size");
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] == tuple[j]) throw DuplicateVertex("tuple vertices must be distinct");
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (g.has_edge(tuple[i], tuple[j]) !=
          p.has_edge(static_cast<int>(i), static_cast<int>(j)))
        return false;
  return true;
}

// Pattern file: first non-comment line is k, remaining lines are edges.
inline Pattern read_pattern(std::istream& in) {
  int k = -1;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (k < 0) {
      ls >> k;
    } else {
      int u, v;
      if (ls >> u >> v) edges.emplace_back(u, v);
    }
  }
  if (k < 0) throw std::invalid_argument("pattern file has no size line");
  return Pattern(k, edges);
}

inline void write_pattern(const Pattern& p, std::ostream& out) {
  out << p.k() << "\n";
  for (auto [u, v] : p.edges()) out << u << " " << v << "\n";
}

// All connected patterns on exactly k vertices, one per isomorphism class.
// Enumerates the 2^C(k,2) edge sets; intended for k <= 5.
inline std::vector<Pattern> connected_pattern_catalog(int k) {
  if (k < 3 || k > 6) throw std::invalid_argument("catalog supports k in [3,6]");
  const int pairs = k * (k - 1) / 2;
  std::vector<std::pair<int, int>> all_pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) all_pairs.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Pattern> catalog;
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < pairs; ++b)
      if (mask & (1ull << b)) edges.push_back(all_pairs[static_cast<std::size_t>(b)]);
    if (static_cast<int>(edges.size()) < k - 1) continue;
    try {
      Pattern p(k, edges);
      if (seen.insert(p.canonical_key()).second) catalog.push_back(std::move(p));
    } catch (const std::invalid_argument&) {
      // disconnected or isolated-vertex edge set
    }
  }
  return catalog;
}

}  // namespace plrg
