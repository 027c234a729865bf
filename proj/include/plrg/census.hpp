#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "plrg/graph.hpp"
#include "plrg/optimizer.hpp"
#include "plrg/pattern.hpp"
#include "plrg/rational.hpp"

namespace plrg {

struct PatternLargerThanGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GraphTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-slot admissible degree interval [eps (mu n)^{alpha_i}, (mu n)^{alpha_i}/eps].
struct DegreeWindow {
  AlphaAssignment alpha;
  double epsilon;
  double mu;

  DegreeWindow(AlphaAssignment a, double eps, double mu_) : alpha(std::move(a)), epsilon(eps), mu(mu_) {
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0,1)");
    if (mu <= 0) throw std::invalid_argument("mu must be positive");
  }

  std::pair<double, double> slot_interval(std::size_t slot, std::size_t n) const {
    double scale = std::pow(mu * static_cast<double>(n), to_double(alpha.alpha[slot]));
    return {epsilon * scale, scale / epsilon};
  }
};

struct CensusResult {
  long long labeled_count = 0;
  Rat orbit_count;
  long long tuples_examined = 0;
  bool empty_window = false;
};

namespace detail {

// Slot visit order: highest H-degree first, then grow along pattern
// adjacency so every later slot has an already-placed neighbor to anchor on.
inline std::vector<int> slot_order(const Pattern& p) {
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(p.k()), false);
  int start = 0;
  for (int v = 1; v < p.k(); ++v)
    if (p.h_degree(v) > p.h_degree(start)) start = v;
  order.push_back(start);
  placed[static_cast<std::size_t>(start)] = true;
  while (static_cast<int>(order.size()) < p.k()) {
    int best = -1;
    for (int v = 0; v < p.k(); ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      bool anchored = false;
      for (int u : order)
        if (p.has_edge(u, v)) anchored = true;
      if (!anchored) continue;
      if (best < 0 || p.h_degree(v) > p.h_degree(best)) best = v;
    }
    order.push_back(best);
    placed[static_cast<std::size_t>(best)] = true;
  }
  return order;
}

struct CensusSearch {
  const Graph& g;
  const Pattern& p;
  const DegreeWindow* window;
  std::vector<int> order;                     // slot visit order
  std::vector<std::pair<double, double>> iv;  // admissible interval per pattern slot
  std::vector<int> image;                     // pattern slot -> graph vertex, -1 if unset
  long long count = 0;
  long long examined = 0;

  CensusSearch(const Graph& g_, const Pattern& p_, const DegreeWindow* w)
      : g(g_), p(p_), window(w), order(slot_order(p_)) {
    image.assign(static_cast<std::size_t>(p.k()), -1);
    iv.assign(static_cast<std::size_t>(p.k()), {0.0, std::numeric_limits<double>::infinity()});
    if (window)
      for (int s = 0; s < p.k(); ++s)
        iv[static_cast<std::size_t>(s)] = window->slot_interval(static_cast<std::size_t>(s), g.vertex_count());
  }

  bool admissible(int slot, int vertex) const {
    double d = static_cast<double>(g.degree(vertex));
    return d >= iv[static_cast<std::size_t>(slot)].first &&
           d <= iv[static_cast<std::size_t>(slot)].second;
  }

  bool consistent(int slot, int vertex, std::size_t depth) const {
    for (std::size_t t = 0; t < depth; ++t) {
      int other = order[t];
      int w = image[static_cast<std::size_t>(other)];
      if (w == vertex) return false;
      if (g.has_edge(vertex, w) != p.has_edge(slot, other)) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == order.size()) {
      ++count;
      return;
    }
    const int slot = order[depth];
    if (depth == 0) {
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        ++examined;
        if (!admissible(slot, static_cast<int>(v))) continue;
        image[static_cast<std::size_t>(slot)] = static_cast<int>(v);
        extend(1);
      }
      image[static_cast<std::size_t>(slot)] = -1;
      return;
    }
    // anchor on the placed neighbor with the smallest adjacency list
    int anchor = -1;
    for (std::size_t t = 0; t < depth; ++t)
      if (p.has_edge(order[t], slot)) {
        int cand = image[static_cast<std::size_t>(order[t])];
        if (anchor < 0 || g.degree(cand) < g.degree(anchor)) anchor = cand;
      }
    for (int v : g.neighbors(anchor)) {
      ++examined;
      if (!admissible(slot, v)) continue;
      if (!consistent(slot, v, depth)) continue;
      image[static_cast<std::size_t>(slot)] = v;
      extend(depth + 1);
    }
    image[static_cast<std::size_t>(slot)] = -1;
  }
};

}  // namespace detail

// Labeled (ordered-tuple) induced subgraph count via degree-ordered
// backtracking. Orbit count is labeled / |Aut(H)|.
inline CensusResult count_induced_exact(const Graph& g, const Pattern& p) {
  if (g.vertex_count() < static_cast<std::size_t>(p.k()))
    throw PatternLargerThanGraph("graph smaller than pattern");
  detail::CensusSearch search(g, p, nullptr);
  search.extend(0);
  CensusResult r;
  r.labeled_count = search.count;
  r.orbit_count = Rat(search.count, p.automorphism_count());
  r.tuples_examined = search.examined;
  return r;
}

// Counts only tuples whose slot degrees lie inside the window.
inline CensusResult count_induced_windowed(const Graph& g, const Pattern& p,
                                           const DegreeWindow& w) {
  if (g.vertex_count() < static_cast<std::size_t>(p.k()))
    throw PatternLargerThanGraph("graph smaller than pattern");
  // flag empty slots up front
  for (int s = 0; s < p.k(); ++s) {
    auto [lo, hi] = w.slot_interval(static_cast<std::size_t>(s), g.vertex_count());
    bool any = false;
    for (std::size_t v = 0; v < g.vertex_count() && !any; ++v) {
      double d = static_cast<double>(g.degree(static_cast<int>(v)));
      any = d >= lo && d <= hi;
    }
    if (!any) {
      CensusResult r;
      r.empty_window = true;
      r.orbit_count = Rat(0);
      return r;
    }
  }
  detail::CensusSearch search(g, p, &w);
  search.extend(0);
  CensusResult r;
  r.labeled_count = search.count;
  r.orbit_count = Rat(search.count, p.automorphism_count());
  r.tuples_examined = search.examined;
  return r;
}

// Oracle: iterate every ordered k-tuple of distinct vertices.
inline long long brute_force_count(const Graph& g, const Pattern& p) {
  if (g.vertex_count() > 12) throw GraphTooLarge("brute force limited to n <= 12");
  const int n = static_cast<int>(g.vertex_count());
  const int k = p.k();
  std::vector<int> tuple(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  long long count = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (induced_match_labeled(g, tuple, p)) ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      tuple[static_cast<std::size_t>(depth)] = v;
      self(self, depth + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 0);
  return count;
}

// Least-squares slope of log(count) against log(n).
inline double fit_scaling(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw DegenerateInput("need at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [n, count] : points) {
    if (n <= 0 || count <= 0) throw DegenerateInput("points must be positive");
    double x = std::log(n), y = std::log(count);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) throw DegenerateInput("degenerate abscissae");
  return (m * sxy - sx * sy) / denom;
}

}  // namespace plrg
