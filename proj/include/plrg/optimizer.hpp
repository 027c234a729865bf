#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "plrg/pattern.hpp"
#include "plrg/rational.hpp"

namespace plrg {

struct InvalidPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AlphaOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (S1,S2,S3) over V_H \ V_1, encoded per vertex: 1,2,3 for the three sets,
// 0 for degree-one vertices (which are excluded from the partition).
struct PartitionAssignment {
  std::vector<int> set_of;  // length k

  const std::vector<int>& sets() const { return set_of; }

  std::vector<int> members(int which) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < set_of.size(); ++i)
      if (set_of[i] == which) out.push_back(static_cast<int>(i));
    return out;
  }
};

struct AlphaAssignment {
  std::vector<Rat> alpha;  // per pattern vertex

  std::vector<double> as_doubles() const {
    std::vector<double> out;
    out.reserve(alpha.size());
    for (const Rat& a : alpha) out.push_back(to_double(a));
    return out;
  }
};

struct OptimizationResult {
  Rat B;
  std::vector<PartitionAssignment> maximizers;
  bool unique = false;
  Rat exponent;

  double B_value() const { return to_double(B); }
  double exponent_value() const { return to_double(exponent); }
};

namespace detail {
inline void check_partition(const Pattern& p, const PartitionAssignment& part) {
  if (part.set_of.size() != static_cast<std::size_t>(p.k()))
    throw InvalidPartition("partition must label every pattern vertex");
  for (int v = 0; v < p.k(); ++v) {
    int s = part.set_of[static_cast<std::size_t>(v)];
    if (p.h_degree(v) == 1) {
      if (s != 0) throw InvalidPartition("degree-one vertices do not belong to the partition");
    } else if (s < 1 || s > 3) {
      throw InvalidPartition("non-leaf vertices must be assigned to S1, S2 or S3");
    }
  }
}
}  // namespace detail

// The degree-placement objective
//   |S1| + |S2| (2 - tau - k + |S1| + k1)/(tau-1)
//        - (2 E_{S1} - 2 E_{S2} + E_{S1,S3} - E_{S2,S3} + E_{S1,V1} - E_{S2,V1})/(tau-1),
// evaluated exactly in tau.
inline Rat partition_objective(const Pattern& p, const PartitionAssignment& part, const Tau& tau) {
  detail::check_partition(p, part);
  long long s1 = 0, s2 = 0;
  for (int v = 0; v < p.k(); ++v) {
    if (part.set_of[static_cast<std::size_t>(v)] == 1) ++s1;
    if (part.set_of[static_cast<std::size_t>(v)] == 2) ++s2;
  }
  long long e_s1 = 0, e_s2 = 0, e_s1s3 = 0, e_s2s3 = 0, e_s1v1 = 0, e_s2v1 = 0;
  for (auto [u, v] : p.edges()) {
    int a = part.set_of[static_cast<std::size_t>(u)];
    int b = part.set_of[static_cast<std::size_t>(v)];
    if (a > b) std::swap(a, b);
    if (a == 1 && b == 1) ++e_s1;
    if (a == 2 && b == 2) ++e_s2;
    if (a == 1 && b == 3) ++e_s1s3;
    if (a == 2 && b == 3) ++e_s2s3;
    if (a == 0 && b == 1) ++e_s1v1;
    if (a == 0 && b == 2) ++e_s2v1;
  }
  const Rat tau_r = tau.value;
  const Rat inv = Rat(1) / (tau_r - 1);
  Rat obj(s1);
  obj += inv * Rat(s2) * (Rat(2) - tau_r - Rat(p.k()) + Rat(s1) + Rat(p.k1()));
  obj -= inv * Rat(2 * e_s1 - 2 * e_s2 + e_s1s3 - e_s2s3 + e_s1v1 - e_s2v1);
  return obj;
}

// Count-scaling exponent (3-tau)/2 (k_{2+} + B) + k_1/2.
inline Rat scaling_exponent(const Pattern& p, const Tau& tau, const Rat& B) {
  return (Rat(3) - tau.value) / 2 * (Rat(p.k2plus()) + B) + Rat(p.k1(), 2);
}

// Exhaustive search over all 3^{k_{2+}} partitions. Ties are exact rational
// ties; maximizers are reported in lexicographic order of the assignment.
inline OptimizationResult optimize_partitions(const Pattern& p, const Tau& tau) {
  std::vector<int> movable;
  for (int v = 0; v < p.k(); ++v)
    if (p.h_degree(v) >= 2) movable.push_back(v);
  const std::size_t count = movable.size();
  OptimizationResult result;
  std::vector<int> labels(count, 1);
  bool first = true;
  PartitionAssignment part;
  part.set_of.assign(static_cast<std::size_t>(p.k()), 0);
  while (true) {
    for (std::size_t i = 0; i < count; ++i)
      part.set_of[static_cast<std::size_t>(movable[i])] = labels[i];
    Rat value = partition_objective(p, part, tau);
    if (first || value > result.B) {
      result.B = value;
      result.maximizers.clear();
      result.maximizers.push_back(part);
      first = false;
    } else if (value == result.B) {
      result.maximizers.push_back(part);
    }
    // next assignment in base-3 (labels 1..3)
    std::size_t pos = 0;
    while (pos < count && labels[pos] == 3) labels[pos++] = 1;
    if (pos == count) break;
    ++labels[pos];
  }
  result.unique = result.maximizers.size() == 1;
  result.exponent = scaling_exponent(p, tau, result.B);
  return result;
}

// alpha_i = (tau-2)/(tau-1) on S1, 1/(tau-1) on S2, 1/2 on S3, 0 on V_1.
inline AlphaAssignment alpha_from_partition(const Pattern& p, const PartitionAssignment& part,
                                            const Tau& tau) {
  detail::check_partition(p, part);
  const Rat tau_r = tau.value;
  const std::array<Rat, 4> values = {Rat(0), (tau_r - 2) / (tau_r - 1), Rat(1) / (tau_r - 1),
                                     Rat(1, 2)};
  AlphaAssignment out;
  out.alpha.reserve(static_cast<std::size_t>(p.k()));
  for (int v = 0; v < p.k(); ++v)
    out.alpha.push_back(values[static_cast<std::size_t>(part.set_of[static_cast<std::size_t>(v)])]);
  return out;
}

// The raw alpha-space objective
//   (1-tau) sum_i alpha_i + sum_{edges, a_i+a_j<1}(a_i+a_j-1)
//                         - sum_{non-edges, a_u+a_v>1}(a_u+a_v-1).
// Pairs whose alpha-sum is exactly 1 contribute to neither sum.
inline Rat grid_objective(const Pattern& p, const std::vector<Rat>& alphas, const Tau& tau) {
  if (alphas.size() != static_cast<std::size_t>(p.k()))
    throw std::invalid_argument("alpha vector size must equal pattern size");
  const Rat tau_r = tau.value;
  const Rat upper = Rat(1) / (tau_r - 1);
  for (const Rat& a : alphas)
    if (a < Rat(0) || a > upper) throw AlphaOutOfRange("alpha outside [0, 1/(tau-1)]");
  Rat obj(0);
  for (const Rat& a : alphas) obj += (Rat(1) - tau_r) * a;
  for (int i = 0; i < p.k(); ++i)
    for (int j = i + 1; j < p.k(); ++j) {
      Rat s = alphas[static_cast<std::size_t>(i)] + alphas[static_cast<std::size_t>(j)];
      if (p.has_edge(i, j)) {
        if (s < Rat(1)) obj += s - 1;
      } else {
        if (s > Rat(1)) obj -= s - 1;
      }
    }
  return obj;
}

struct GridResult {
  Rat value;
  std::vector<std::vector<Rat>> maximizers;
  bool unique = false;
};

// Exhaustive search of the alpha objective over the structural 4-value grid
// {0, (tau-2)/(tau-1), 1/2, 1/(tau-1)}^k.
inline GridResult optimize_grid(const Pattern& p, const Tau& tau) {
  const Rat tau_r = tau.value;
  const std::array<Rat, 4> values = {Rat(0), (tau_r - 2) / (tau_r - 1), Rat(1, 2),
                                     Rat(1) / (tau_r - 1)};
  const int k = p.k();
  GridResult result;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  std::vector<Rat> alphas(static_cast<std::size_t>(k));
  bool first = true;
  while (true) {
    for (int i = 0; i < k; ++i)
      alphas[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    Rat v = grid_objective(p, alphas, tau);
    if (first || v > result.value) {
      result.value = v;
      result.maximizers.clear();
      result.maximizers.push_back(alphas);
      first = false;
    } else if (v == result.value) {
      result.maximizers.push_back(alphas);
    }
    std::size_t pos = 0;
    while (pos < static_cast<std::size_t>(k) && idx[pos] == 3) idx[pos++] = 0;
    if (pos == static_cast<std::size_t>(k)) break;
    ++idx[pos];
  }
  result.unique = result.maximizers.size() == 1;
  return result;
}

}  // namespace plrg
