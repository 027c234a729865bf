#include <doctest.h>

#include <random>

#include "plrg/census.hpp"
#include "plrg/samplers.hpp"

using namespace plrg;

namespace {
Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unif(rng) < p) edges.emplace_back(u, v);
  return build_graph(static_cast<std::size_t>(n), edges);
}

DegreeWindow vacuous_window(const Pattern& p) {
  AlphaAssignment alpha;
  alpha.alpha.assign(static_cast<std::size_t>(p.k()), Rat(0));
  // alpha = 0 gives interval [eps, 1/eps]; a tiny eps admits every degree
  return DegreeWindow(alpha, 1e-9, 1.0);
}
}  // namespace

TEST_CASE("exact counts on closed-form hosts") {
  Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto tri = count_induced_exact(k4, Pattern::clique(3));
  CHECK(tri.labeled_count == 24);  // 4 triangles, 6 orderings each
  CHECK(tri.orbit_count == Rat(4));

  // C4 is not induced in K4 (the chords are present)
  auto c4 = count_induced_exact(k4, Pattern::cycle(4));
  CHECK(c4.labeled_count == 0);

  Graph p3host = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(count_induced_exact(p3host, Pattern::path(3)).labeled_count == 2);

  Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(count_induced_exact(c5, Pattern::path(3)).labeled_count == 10);
  CHECK(count_induced_exact(c5, Pattern::cycle(5)).labeled_count == 10);

  Graph empty = build_graph(6, {});
  CHECK(count_induced_exact(empty, Pattern::clique(3)).labeled_count == 0);

  CHECK_THROWS_AS(count_induced_exact(p3host, Pattern::clique(4)), PatternLargerThanGraph);
}

TEST_CASE("backtracking count equals the brute-force tuple scan") {
  std::vector<Pattern> patterns = {Pattern::clique(3), Pattern::path(3), Pattern::path(4),
                                   Pattern::cycle(4), Pattern::cycle(5),
                                   Pattern::complete_bipartite(2, 3)};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = random_graph(9, 0.4, seed);
    for (const Pattern& p : patterns) {
      auto fast = count_induced_exact(g, p);
      CHECK(fast.labeled_count == brute_force_count(g, p));
      CHECK(fast.labeled_count % p.automorphism_count() == 0);
    }
  }
  CHECK_THROWS_AS(brute_force_count(random_graph(13, 0.5, 1), Pattern::clique(3)),
                  GraphTooLarge);
}

TEST_CASE("count is invariant under host relabeling") {
  Graph g = random_graph(9, 0.45, 12);
  // relabel v -> (v*4+1) mod 9 (a bijection on 0..8)
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 9; ++u)
    for (int v : g.neighbors(u))
      if (u < v) edges.emplace_back((u * 4 + 1) % 9, (v * 4 + 1) % 9);
  Graph h = build_graph(9, edges);
  for (const Pattern& p : {Pattern::clique(3), Pattern::path(4), Pattern::cycle(4)})
    CHECK(count_induced_exact(g, p).labeled_count == count_induced_exact(h, p).labeled_count);
}

TEST_CASE("windowed census") {
  Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Pattern p3 = Pattern::path(3);

  auto exact = count_induced_exact(c5, p3);
  auto vac = count_induced_windowed(c5, p3, vacuous_window(p3));
  CHECK_FALSE(vac.empty_window);
  CHECK(vac.labeled_count == exact.labeled_count);

  // window demanding degree >= 100 on every slot is empty on C5
  AlphaAssignment high;
  high.alpha.assign(3, Rat(2));
  DegreeWindow impossible(high, 0.9, 100.0);
  auto empty = count_induced_windowed(c5, p3, impossible);
  CHECK(empty.empty_window);
  CHECK(empty.labeled_count == 0);

  // a restrictive but nonempty window never exceeds the exact count
  Graph star_plus = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}});
  AlphaAssignment alpha;
  alpha.alpha = {Rat(1), Rat(0), Rat(0)};  // center slot needs degree near mu*n
  DegreeWindow w(alpha, 0.5, 1.0);
  auto windowed = count_induced_windowed(star_plus, p3, w);
  CHECK_FALSE(windowed.empty_window);
  CHECK(windowed.labeled_count <= count_induced_exact(star_plus, p3).labeled_count);

  // windowed count matches a per-tuple filter applied to the brute scan
  Graph g = random_graph(8, 0.5, 3);
  auto win = vacuous_window(p3);
  long long filtered = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        if (a == b || b == c || a == c) continue;
        std::vector<int> tuple = {a, b, c};
        if (!induced_match_labeled(g, tuple, p3)) continue;
        bool ok = true;
        for (std::size_t s = 0; s < 3; ++s) {
          auto [lo, hi] = win.slot_interval(s, 8);
          double d = static_cast<double>(g.degree(tuple[s]));
          if (d < lo || d > hi) ok = false;
        }
        if (ok) ++filtered;
      }
  CHECK(count_induced_windowed(g, p3, win).labeled_count == filtered);
}

TEST_CASE("window parameter validation") {
  AlphaAssignment alpha;
  alpha.alpha.assign(3, Rat(1, 2));
  CHECK_THROWS_AS(DegreeWindow(alpha, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DegreeWindow(alpha, 1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DegreeWindow(alpha, 0.5, -1.0), std::invalid_argument);
}

TEST_CASE("scaling fit") {
  // exact power law n^1.7 recovers slope 1.7
  std::vector<std::pair<double, double>> pts;
  for (double n : {100.0, 300.0, 1000.0, 3000.0}) pts.emplace_back(n, std::pow(n, 1.7));
  CHECK(fit_scaling(pts) == doctest::Approx(1.7).epsilon(1e-9));

  std::vector<std::pair<double, double>> flat = {{10, 5}, {100, 5}, {1000, 5}};
  CHECK(fit_scaling(flat) == doctest::Approx(0.0));

  CHECK_THROWS_AS(fit_scaling({{10, 5}, {100, 7}}), DegenerateInput);
  CHECK_THROWS_AS(fit_scaling({{10, 5}, {10, 5}, {10, 5}}), DegenerateInput);
  CHECK_THROWS_AS(fit_scaling({{10, 5}, {100, 0}, {1000, 5}}), DegenerateInput);
}
