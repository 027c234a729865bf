#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "plrg/census.hpp"
#include "plrg/degree_sequence.hpp"
#include "plrg/optimizer.hpp"
#include "plrg/pattern.hpp"

namespace plrg {

struct PreconditionB : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooManyDistinctValues : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegralEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  long long samples = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// log(1 + e^y) without overflow
inline double log1p_exp(double y) {
  if (y > 35.0) return y;
  if (y < -35.0) return std::exp(y);
  return std::log1p(std::exp(y));
}

inline void require_sqrt_placement(const Pattern& p, const Tau& tau) {
  if (p.min_h_degree() < 2)
    throw PreconditionB("pattern has a degree-one vertex; optimal placement is not all-sqrt(n)");
  OptimizationResult opt = optimize_partitions(p, tau);
  if (!opt.unique || opt.B != Rat(0))
    throw PreconditionB("partition optimum is not a unique B=0");
  for (int v : opt.maximizers.front().sets())
    if (v != 3) throw PreconditionB("partition optimum is not all-S3");
}

struct MeanAccumulator {
  double sum = 0.0, sumsq = 0.0;
  long long count = 0;
  void add(double x) {
    sum += x;
    sumsq += x * x;
    ++count;
  }
  double mean() const { return sum / static_cast<double>(count); }
  double stderr_of_mean() const {
    double m = mean();
    double var = sumsq / static_cast<double>(count) - m * m;
    if (var < 0) var = 0;
    return std::sqrt(var / static_cast<double>(count));
  }
};

}  // namespace detail

// Monte Carlo estimate of the limiting constant
//   A(H) = (C(tau-1)/mu^{(tau-1)/2})^k Int (x_1...x_k)^{-tau}
//             prod_{edges} x_i x_j/(1+x_i x_j) prod_{non-edges} 1/(1+x_u x_v) dx,
// valid for patterns whose degree-placement optimum is uniquely all-sqrt(n).
// Each coordinate is mapped from (0,1) via x = (t/(1-t))^{1/(3-tau)}, which
// makes the transformed integrand bounded for tau in (2,3) (the per-vertex
// factor x^{d_i - tau} dx/dt stays finite at both endpoints for d_i >= 2).
// The estimator runs in fixed-size blocks with per-block RNG substreams, so
// results are deterministic given the master seed.
inline IntegralEstimate A_monte_carlo(const Pattern& p, const Tau& tau, double C, double mu,
                                      long long samples, std::uint64_t seed) {
  detail::require_sqrt_placement(p, tau);
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  const double tau_d = tau.as_double();
  const double pexp = 1.0 / (3.0 - tau_d);
  const int k = p.k();
  const double prefactor = std::pow(C * (tau_d - 1.0) / std::pow(mu, (tau_d - 1.0) / 2.0), k);

  constexpr long long kBlock = 1 << 16;
  detail::MeanAccumulator acc;
  std::vector<double> log_x(static_cast<std::size_t>(k));
  for (long long block_start = 0; block_start < samples; block_start += kBlock) {
    const long long block_len = std::min(kBlock, samples - block_start);
    std::mt19937_64 rng(detail::splitmix64(seed ^ static_cast<std::uint64_t>(block_start)));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long long s = 0; s < block_len; ++s) {
      double lg = 0.0;
      for (int i = 0; i < k; ++i) {
        double t = unif(rng);
        while (t <= 0.0 || t >= 1.0) t = unif(rng);
        const double log_r = std::log(t) - std::log1p(-t);
        log_x[static_cast<std::size_t>(i)] = pexp * log_r;
        // x^{d_i - tau} * dx/dt, in logs
        lg += std::log(pexp) + (pexp * (p.h_degree(i) + 1 - tau_d) - 1.0) * log_r -
              2.0 * std::log1p(-t);
      }
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          lg -= detail::log1p_exp(log_x[static_cast<std::size_t>(i)] +
                                  log_x[static_cast<std::size_t>(j)]);
      acc.add(std::exp(lg));
    }
  }
  IntegralEstimate est;
  est.mean = prefactor * acc.mean();
  est.stderr_ = prefactor * acc.stderr_of_mean();
  est.samples = samples;
  return est;
}

// Same integrand restricted to [eps, 1/eps]^k, sampled uniformly.
inline IntegralEstimate A_truncated(const Pattern& p, const Tau& tau, double C, double mu,
                                    double eps, long long samples, std::uint64_t seed) {
  detail::require_sqrt_placement(p, tau);
  if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("eps must lie in (0,1]");
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  const double tau_d = tau.as_double();
  const int k = p.k();
  const double prefactor = std::pow(C * (tau_d - 1.0) / std::pow(mu, (tau_d - 1.0) / 2.0), k);
  const double width = 1.0 / eps - eps;
  IntegralEstimate est;
  est.samples = samples;
  if (width <= 0.0) return est;  // eps = 1: empty-measure domain
  const double volume = std::pow(width, k);

  constexpr long long kBlock = 1 << 16;
  detail::MeanAccumulator acc;
  std::vector<double> x(static_cast<std::size_t>(k));
  for (long long block_start = 0; block_start < samples; block_start += kBlock) {
    const long long block_len = std::min(kBlock, samples - block_start);
    std::mt19937_64 rng(detail::splitmix64(seed ^ static_cast<std::uint64_t>(block_start)));
    std::uniform_real_distribution<double> unif(eps, 1.0 / eps);
    for (long long s = 0; s < block_len; ++s) {
      double val = 1.0;
      for (int i = 0; i < k; ++i) {
        x[static_cast<std::size_t>(i)] = unif(rng);
        val *= std::pow(x[static_cast<std::size_t>(i)], -tau_d);
      }
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          const double prod = x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
          val *= p.has_edge(i, j) ? prod / (1.0 + prod) : 1.0 / (1.0 + prod);
        }
      acc.add(val);
    }
  }
  est.mean = prefactor * volume * acc.mean();
  est.stderr_ = prefactor * volume * acc.stderr_of_mean();
  return est;
}

namespace detail {

struct CompressedDegrees {
  std::vector<long long> value;
  std::vector<long long> mult;
};

inline CompressedDegrees compress(const std::vector<long long>& degrees) {
  std::vector<long long> sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  CompressedDegrees c;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    c.value.push_back(sorted[i]);
    c.mult.push_back(static_cast<long long>(j - i));
    i = j;
  }
  return c;
}

// h-factor between two placed slots: edge -> d_i d_j/(L_n + d_i d_j),
// non-edge -> L_n/(L_n + d_i d_j).
inline double pair_factor(const Pattern& p, int slot_a, int slot_b, double da, double db,
                          double L_n) {
  const double prod = da * db;
  return p.has_edge(slot_a, slot_b) ? prod / (L_n + prod) : L_n / (L_n + prod);
}

}  // namespace detail

// Exact expected labeled count of induced copies of H under the leading-order
// edge law: sum over ordered tuples of distinct vertices of
//   prod_{edges} d_i d_j/(L_n + d_i d_j) prod_{non-edges} L_n/(L_n + d_u d_v),
// optionally restricted to a degree window. Degrees are compressed to
// (value, multiplicity) pairs and slots are filled with falling-factorial
// multiplicities; falls back to direct tuple summation when the compressed
// term count would exceed 10^7.
inline double expected_count(const DegreeSequence& seq, const Pattern& p,
                             const DegreeWindow* window = nullptr) {
  const int k = p.k();
  if (k > 6) throw std::invalid_argument("expected_count supports k <= 6");
  const double L_n = static_cast<double>(seq.L_n);
  const std::size_t n = seq.size();

  detail::CompressedDegrees comp = detail::compress(seq.degrees);
  const std::size_t distinct = comp.value.size();

  // admissible value indices per slot
  std::vector<std::vector<std::size_t>> slot_values(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    if (window) {
      auto iv = window->slot_interval(static_cast<std::size_t>(s), n);
      lo = iv.first;
      hi = iv.second;
    }
    for (std::size_t vi = 0; vi < distinct; ++vi) {
      double d = static_cast<double>(comp.value[vi]);
      if (d >= lo && d <= hi) slot_values[static_cast<std::size_t>(s)].push_back(vi);
    }
    if (slot_values[static_cast<std::size_t>(s)].empty()) return 0.0;
  }

  double terms = 1.0;
  for (int s = 0; s < k; ++s) terms *= static_cast<double>(slot_values[static_cast<std::size_t>(s)].size());
  if (terms > 1e7) {
    // direct summation fallback over ordered vertex tuples
    double direct_terms = 1.0;
    for (int s = 0; s < k; ++s) direct_terms *= static_cast<double>(n);
    if (direct_terms > 1e7)
      throw TooManyDistinctValues("compressed and direct summations both exceed 10^7 terms");
    std::vector<int> tuple(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(n, false);
    long double total = 0.0L;
    auto rec = [&](auto&& self, int depth, double partial) -> void {
      if (depth == k) {
        total += static_cast<long double>(partial);
        return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        double d = static_cast<double>(seq.degrees[v]);
        if (window) {
          auto iv = window->slot_interval(static_cast<std::size_t>(depth), n);
          if (d < iv.first || d > iv.second) continue;
        }
        double factor = partial;
        for (int t = 0; t < depth; ++t)
          factor *= detail::pair_factor(p, depth, t, d,
                                        static_cast<double>(seq.degrees[static_cast<std::size_t>(tuple[static_cast<std::size_t>(t)])]),
                                        L_n);
        used[v] = true;
        tuple[static_cast<std::size_t>(depth)] = static_cast<int>(v);
        self(self, depth + 1, factor);
        used[v] = false;
      }
    };
    rec(rec, 0, 1.0);
    return static_cast<double>(total);
  }

  // compressed summation with falling-factorial slot multiplicities
  std::vector<std::size_t> chosen(static_cast<std::size_t>(k));
  std::vector<long long> used_of(distinct, 0);
  long double total = 0.0L;
  auto rec = [&](auto&& self, int depth, double partial) -> void {
    if (depth == k) {
      total += static_cast<long double>(partial);
      return;
    }
    for (std::size_t vi : slot_values[static_cast<std::size_t>(depth)]) {
      const long long remaining = comp.mult[vi] - used_of[vi];
      if (remaining <= 0) continue;
      double factor = partial * static_cast<double>(remaining);
      const double d = static_cast<double>(comp.value[vi]);
      for (int t = 0; t < depth; ++t)
        factor *= detail::pair_factor(p, depth, t, d,
                                      static_cast<double>(comp.value[chosen[static_cast<std::size_t>(t)]]), L_n);
      chosen[static_cast<std::size_t>(depth)] = vi;
      ++used_of[vi];
      self(self, depth + 1, factor);
      --used_of[vi];
    }
  };
  rec(rec, 0, 1.0);
  return static_cast<double>(total);
}

// Direct-summation oracle for small n, independent of the compression path.
inline double expected_count_direct(const DegreeSequence& seq, const Pattern& p,
                                    const DegreeWindow* window = nullptr) {
  const int k = p.k();
  const std::size_t n = seq.size();
  const double L_n = static_cast<double>(seq.L_n);
  if (std::pow(static_cast<double>(n), k) > 5e7)
    throw GraphTooLarge("direct expected count limited to small n");
  std::vector<int> tuple(static_cast<std::size_t>(k), -1);
  std::vector<bool> used(n, false);
  long double total = 0.0L;
  auto rec = [&](auto&& self, int depth, double partial) -> void {
    if (depth == k) {
      total += static_cast<long double>(partial);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      double d = static_cast<double>(seq.degrees[v]);
      if (window) {
        auto iv = window->slot_interval(static_cast<std::size_t>(depth), n);
        if (d < iv.first || d > iv.second) continue;
      }
      double factor = partial;
      for (int t = 0; t < depth; ++t)
        factor *= detail::pair_factor(p, depth, t, d,
                                      static_cast<double>(seq.degrees[static_cast<std::size_t>(tuple[static_cast<std::size_t>(t)])]),
                                      L_n);
      used[v] = true;
      tuple[static_cast<std::size_t>(depth)] = static_cast<int>(v);
      self(self, depth + 1, factor);
      used[v] = false;
    }
  };
  rec(rec, 0, 1.0);
  return static_cast<double>(total);
}

}  // namespace plrg
