#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plrg {

struct SelfLoop : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable simple graph: sorted adjacency vectors, no self-loops, no
// multi-edges. Queries are safe for concurrent use.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw OutOfRange("edge endpoint out of range");
      if (u == v) throw SelfLoop("self loop rejected");
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return Graph(std::move(adj));
  }

  // Takes ownership of already-deduplicated adjacency (samplers build these
  // directly); sorts each list.
  static Graph from_adjacency(std::vector<std::vector<int>> adj) {
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return Graph(std::move(adj));
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<long long>& degrees() const { return degrees_; }

  bool has_edge(int u, int v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    return std::binary_search(shorter.begin(), shorter.end(), target);
  }

 private:
  explicit Graph(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {
    degrees_.reserve(adj_.size());
    std::size_t stubs = 0;
    for (const auto& nb : adj_) {
      degrees_.push_back(static_cast<long long>(nb.size()));
      stubs += nb.size();
    }
    edge_count_ = stubs / 2;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<long long> degrees_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  return Graph::from_edges(n, edges);
}

// Edge-list format: "u v" per line (0-based), '#' comment lines. The vertex
// count is taken from a "# n=<n>" header when present, else max id + 1.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# n=" << g.vertex_count() << "\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(static_cast<int>(u)))
      if (static_cast<int>(u) < v) out << u << " " << v << "\n";
}

inline Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  long long n = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("n=");
      if (pos != std::string::npos) n = std::stoll(line.substr(pos + 2));
      continue;
    }
    std::istringstream ls(line);
    int u, v;
    if (ls >> u >> v) {
      edges.emplace_back(u, v);
      n = std::max({n, static_cast<long long>(u) + 1, static_cast<long long>(v) + 1});
    }
  }
  if (n < 0) n = 0;
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace plrg
