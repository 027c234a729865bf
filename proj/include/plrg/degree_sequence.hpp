#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plrg/rational.hpp"

namespace plrg {

struct NotGraphical : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters of the deterministic power-law construction. The tail law is
// 1 - F_n(j) = C j^{1-tau} with C = c^{tau-1}.
struct PowerLawSpec {
  std::size_t n;
  Tau tau;
  double c = 1.0;

  PowerLawSpec(std::size_t n_, Tau tau_, double c_ = 1.0) : n(n_), tau(tau_), c(c_) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (c <= 0) throw std::invalid_argument("c must be positive");
  }

  double tail_constant() const { return std::pow(c, tau.as_double() - 1.0); }
};

struct DegreeSequence {
  std::vector<long long> degrees;
  long long L_n = 0;
  double mu_hat = 0.0;
  long long d_max = 0;

  std::size_t size() const { return degrees.size(); }
};

// Erdos-Gallai test: an integer sequence is realizable as the degree
// sequence of a simple graph iff the sum is even and the k prefix
// inequalities hold for the sorted sequence.
inline bool is_graphical(std::vector<long long> degrees) {
  if (degrees.empty()) return true;
  for (long long d : degrees)
    if (d < 0) return false;
  long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
  if (sum % 2 != 0) return false;
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const std::size_t n = degrees.size();
  if (degrees[0] >= static_cast<long long>(n)) return false;
  // suffix[k] = sum of min(d_i, k) for i > k, computed per k by counting.
  long long prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += degrees[k - 1];
    long long rhs = static_cast<long long>(k) * (static_cast<long long>(k) - 1);
    for (std::size_t i = k; i < n; ++i)
      rhs += std::min<long long>(degrees[i], static_cast<long long>(k));
    if (prefix > rhs) return false;
    if (degrees[k - 1] < static_cast<long long>(k)) break;  // later inequalities are implied
  }
  return true;
}

namespace detail {
inline DegreeSequence finalize(std::vector<long long> degrees) {
  DegreeSequence seq;
  seq.L_n = std::accumulate(degrees.begin(), degrees.end(), 0LL);
  seq.d_max = *std::max_element(degrees.begin(), degrees.end());
  seq.mu_hat = static_cast<double>(seq.L_n) / static_cast<double>(degrees.size());
  seq.degrees = std::move(degrees);
  return seq;
}
}  // namespace detail

// Deterministic quantile construction: rank-i degree ceil(c*(n/i)^{1/(tau-1)}),
// so 1 - F_n(j) = c^{tau-1} j^{1-tau} (1+o(1)) holds exactly along the tail.
// Parity is fixed by bumping the smallest degree; on an Erdos-Gallai failure
// the largest degree is decremented once (parity re-fixed) before giving up.
inline DegreeSequence build_powerlaw_sequence(const PowerLawSpec& spec) {
  const double expo = 1.0 / (spec.tau.as_double() - 1.0);
  std::vector<long long> degrees(spec.n);
  for (std::size_t i = 1; i <= spec.n; ++i) {
    double v = spec.c * std::pow(static_cast<double>(spec.n) / static_cast<double>(i), expo);
    degrees[i - 1] = static_cast<long long>(std::ceil(v - 1e-12));
    if (degrees[i - 1] < 1) degrees[i - 1] = 1;
  }
  auto fix_parity = [](std::vector<long long>& d) {
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum % 2 != 0) d.back() += 1;  // degrees are stored descending
  };
  fix_parity(degrees);
  if (!is_graphical(degrees)) {
    degrees.front() -= 1;
    fix_parity(degrees);
    if (degrees.front() < 1 || !is_graphical(degrees))
      throw NotGraphical("power-law sequence is not graphical after retry");
  }
  return detail::finalize(std::move(degrees));
}

// Tightest constants of the tail sandwich K1 j^{1-tau} <= 1-F_n(j) <= K2 j^{1-tau},
// scanned over all j in [1, d_max] with 1-F_n(j) > 0. (At j = d_max the left
// tail is exactly zero for any finite sequence, so that point carries no
// constraint and is skipped.)
inline std::pair<double, double> validate_tail_bounds(const DegreeSequence& seq, double tau) {
  if (seq.size() == 0) throw std::invalid_argument("empty degree sequence");
  const auto n = static_cast<double>(seq.size());
  // count_gt[j] = #{i : d_i > j}
  std::vector<long long> count_gt(static_cast<std::size_t>(seq.d_max) + 1, 0);
  for (long long d : seq.degrees)
    for (long long j = 0; j < d && j <= seq.d_max; ++j) ++count_gt[static_cast<std::size_t>(j)];
  double k1 = std::numeric_limits<double>::infinity();
  double k2 = 0.0;
  for (long long j = 1; j <= seq.d_max; ++j) {
    double tail = static_cast<double>(count_gt[static_cast<std::size_t>(j)]) / n;
    if (tail <= 0.0) continue;
    double scaled = tail * std::pow(static_cast<double>(j), tau - 1.0);
    k1 = std::min(k1, scaled);
    k2 = std::max(k2, scaled);
  }
  return {k1, k2};
}

inline void write_degree_sequence(const DegreeSequence& seq, const PowerLawSpec& spec,
                                  std::ostream& out) {
  out << "# n=" << spec.n << " tau=" << spec.tau.as_double() << " c=" << spec.c << "\n";
  for (long long d : seq.degrees) out << d << "\n";
}

inline DegreeSequence read_degree_sequence(std::istream& in) {
  std::vector<long long> degrees;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    degrees.push_back(std::stoll(line));
  }
  if (degrees.empty()) throw std::invalid_argument("no degrees in input");
  return detail::finalize(std::move(degrees));
}

}  // namespace plrg
