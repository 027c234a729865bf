#include <doctest.h>

#include <cmath>

#include "plrg/limit_constants.hpp"

using namespace plrg;

TEST_CASE("preconditions for the limiting constant") {
  Tau tau("2.5");
  // degree-one vertex: P4
  CHECK_THROWS_AS(A_monte_carlo(Pattern::path(4), tau, 1.0, 2.0, 1024, 1), PreconditionB);
  // K_{2,4} has B = 2/3 > 0
  CHECK_THROWS_AS(A_monte_carlo(Pattern::complete_bipartite(2, 4), tau, 1.0, 2.0, 1024, 1),
                  PreconditionB);
  CHECK_THROWS_AS(A_monte_carlo(Pattern::clique(3), tau, 1.0, 2.0, 0, 1), std::invalid_argument);
}

TEST_CASE("estimator is deterministic and seed-consistent") {
  Tau tau("2.5");
  auto a = A_monte_carlo(Pattern::clique(3), tau, 1.0, 2.0, 200000, 7);
  auto a2 = A_monte_carlo(Pattern::clique(3), tau, 1.0, 2.0, 200000, 7);
  CHECK(a.mean == a2.mean);
  CHECK(a.stderr_ == a2.stderr_);
  CHECK(a.mean > 0.0);
  CHECK(a.stderr_ > 0.0);
  CHECK(a.samples == 200000);

  // independent seeds agree within joint error bars
  auto b = A_monte_carlo(Pattern::clique(3), tau, 1.0, 2.0, 200000, 99);
  double joint = std::sqrt(a.stderr_ * a.stderr_ + b.stderr_ * b.stderr_);
  CHECK(std::abs(a.mean - b.mean) < 4.0 * joint);
}

TEST_CASE("prefactor scales as C^k exactly") {
  Tau tau("2.5");
  auto one = A_monte_carlo(Pattern::clique(3), tau, 1.0, 2.0, 65536, 5);
  auto two = A_monte_carlo(Pattern::clique(3), tau, 2.0, 2.0, 65536, 5);
  CHECK(two.mean == doctest::Approx(8.0 * one.mean).epsilon(1e-12));
}

TEST_CASE("error bar shrinks like one over sqrt samples") {
  Tau tau("2.5");
  auto small = A_monte_carlo(Pattern::clique(3), tau, 1.0, 2.0, 1 << 17, 3);
  auto large = A_monte_carlo(Pattern::clique(3), tau, 1.0, 2.0, 1 << 19, 3);
  CHECK(large.stderr_ < small.stderr_);
  double ratio = small.stderr_ / large.stderr_;  // expect about 2
  CHECK(ratio > 1.6);
  CHECK(ratio < 2.4);
}

TEST_CASE("truncated integral behaviour") {
  Tau tau("2.5");
  Pattern tri = Pattern::clique(3);
  auto degenerate = A_truncated(tri, tau, 1.0, 2.0, 1.0, 4096, 2);
  CHECK(degenerate.mean == 0.0);

  auto loose = A_truncated(tri, tau, 1.0, 2.0, 0.05, 1 << 20, 2);
  auto tight = A_truncated(tri, tau, 1.0, 2.0, 0.5, 1 << 20, 2);
  auto full = A_monte_carlo(tri, tau, 1.0, 2.0, 1 << 20, 2);
  CHECK(loose.mean > tight.mean);  // nested domains
  CHECK(loose.mean < full.mean + 4.0 * (loose.stderr_ + full.stderr_));

  CHECK_THROWS_AS(A_truncated(tri, tau, 1.0, 2.0, 1.5, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(A_truncated(Pattern::path(4), tau, 1.0, 2.0, 0.1, 100, 1), PreconditionB);
}

TEST_CASE("expected count, closed-form fixture") {
  // degrees (2,2,2), L = 6, triangle: 6 ordered tuples each (4/10)^3
  DegreeSequence seq;
  seq.degrees = {2, 2, 2};
  seq.L_n = 6;
  seq.d_max = 2;
  seq.mu_hat = 2.0;
  CHECK(expected_count(seq, Pattern::clique(3)) == doctest::Approx(0.384).epsilon(1e-12));
  CHECK(expected_count_direct(seq, Pattern::clique(3)) ==
        doctest::Approx(0.384).epsilon(1e-12));
}

TEST_CASE("compressed and direct expected counts agree") {
  for (std::size_t n : {20, 50}) {
    DegreeSequence seq = build_powerlaw_sequence(PowerLawSpec(n, Tau("2.5"), 1.0));
    for (const Pattern& p : {Pattern::clique(3), Pattern::path(3), Pattern::cycle(4)}) {
      double fast = expected_count(seq, p);
      double slow = expected_count_direct(seq, p);
      CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    }
  }
}

TEST_CASE("windowed expected count") {
  DegreeSequence seq = build_powerlaw_sequence(PowerLawSpec(50, Tau("2.5"), 1.0));
  Pattern p3 = Pattern::path(3);

  // impossible window gives zero
  AlphaAssignment high;
  high.alpha.assign(3, Rat(3));
  DegreeWindow impossible(high, 0.9, 100.0);
  CHECK(expected_count(seq, p3, &impossible) == 0.0);

  // vacuous window reproduces the unwindowed value
  AlphaAssignment zero;
  zero.alpha.assign(3, Rat(0));
  DegreeWindow vac(zero, 1e-9, 1.0);
  CHECK(expected_count(seq, p3, &vac) == doctest::Approx(expected_count(seq, p3)).epsilon(1e-12));

  // windowed direct oracle agreement
  AlphaAssignment mid;
  mid.alpha.assign(3, Rat(1, 2));
  DegreeWindow w(mid, 0.25, seq.mu_hat);
  CHECK(expected_count(seq, p3, &w) ==
        doctest::Approx(expected_count_direct(seq, p3, &w)).epsilon(1e-12));
}

TEST_CASE("expected count grows with degrees") {
  DegreeSequence lo;
  lo.degrees = {2, 2, 2, 2};
  lo.L_n = 8;
  lo.d_max = 2;
  lo.mu_hat = 2.0;
  DegreeSequence hi;
  hi.degrees = {3, 3, 3, 3};
  hi.L_n = 12;
  hi.d_max = 3;
  hi.mu_hat = 3.0;
  // richer degrees make dense patterns more likely even after L grows
  CHECK(expected_count(hi, Pattern::clique(3)) > expected_count(lo, Pattern::clique(3)));
}
