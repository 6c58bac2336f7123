#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "degenet/algorithm_metrics.hpp"
#include "degenet/error.hpp"
#include "oracle/oracles.hpp"

using namespace degenet;

TEST(Arq, Examples) {
  const Portfolio twins({{"A", {0.9, 0.1}, {1, 0}}, {"B", {0.9, 0.1}, {0, 1}}});
  EXPECT_DOUBLE_EQ(arq(twins, 0.05, 0.5), 1.0);
  const Portfolio apart({{"A", {0.9}, {1, 0}}, {"B", {0.1}, {0, 1}}});
  EXPECT_DOUBLE_EQ(arq(apart, 0.05, 0.5), 0.0);
  // Only {A, B} qualifies: C performs differently.
  const Portfolio trio({{"A", {0.5}, {1, 0}}, {"B", {0.52}, {0, 1}}, {"C", {3.0}, {-1, 0}}});
  EXPECT_DOUBLE_EQ(arq(trio, 0.1, 0.5), 1.0 / 3.0);
}

TEST(Arq, Errors) {
  EXPECT_THROW(arq(Portfolio({{"A", {1}, {1}}}), 0.1, 0.5), Error);
  EXPECT_THROW(arq_star(Portfolio(std::vector<AlgorithmProfile>{}), 1.0), Error);
  EXPECT_THROW(Portfolio({{"A", {1}, {1, 0}}, {"B", {1}, {1}}}), Error);
  const auto r = arq_report(Portfolio({{"A", {1}, {1}}}), 0.1, 0.5, 1.0);
  EXPECT_FALSE(r.arq);
  EXPECT_FALSE(r.arq_star);
}

TEST(PerformanceKernel, Examples) {
  const AlgorithmProfile a{"A", {1.0, 2.0}, {1}};
  EXPECT_EQ(performance_kernel(a, a, 0.3), 1.0);
  const double sigma = 0.5;
  const AlgorithmProfile b{"B", {1.0 + sigma * std::sqrt(2.0), 2.0}, {1}};
  EXPECT_NEAR(performance_kernel(a, b, sigma), std::exp(-1.0), 1e-12);
  const AlgorithmProfile c{"C", {1.0 + 2 * sigma * std::sqrt(2.0), 2.0}, {1}};
  EXPECT_LT(performance_kernel(a, c, sigma), performance_kernel(a, b, sigma));
  EXPECT_THROW(performance_kernel(a, AlgorithmProfile{"D", {1.0}, {1}}, 1.0), Error);
}

TEST(ArqStar, Examples) {
  const Portfolio clones({{"A", {0.5}, {1, 2}}, {"B", {0.5}, {1, 2}}});
  EXPECT_NEAR(arq_star(clones, 1.0), 0.0, 1e-15);
  const Portfolio ortho({{"A", {0.5}, {1, 0}}, {"B", {0.5}, {0, 1}}});
  EXPECT_NEAR(arq_star(ortho, 1.0), 1.0, 1e-15);
  const Portfolio far({{"A", {0.0}, {1, 0}}, {"B", {100.0}, {-1, 0}}});
  EXPECT_LT(arq_star(far, 1.0), 1e-300);
}

TEST(AlgorithmMetrics, MatchNaiveOracleAndInvariants) {
  oracle::Rng rng(51);
  for (int t = 0; t < 200; ++t) {
    auto as = oracle::random_algorithms(rng, 2 + rng() % 5, 2, 3);
    const Portfolio pf(as);
    const double eps = 0.1 * static_cast<double>(1 + rng() % 10);
    const double delta = 0.01 * static_cast<double>(rng() % 40);
    const double sigma = 0.2 + 0.1 * static_cast<double>(rng() % 10);
    const double a = arq(pf, eps, delta);
    const double s = arq_star(pf, sigma);
    EXPECT_NEAR(a, oracle::naive_arq(as, eps, delta), 1e-12);
    EXPECT_NEAR(s, oracle::naive_arq_star(as, sigma), 1e-12);
    EXPECT_NEAR(s, arq_star(pf, sigma, Execution::serial), 1e-12);
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, 1.0);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 2.0);
    EXPECT_GE(arq(pf, eps * 2, delta), a);
    EXPECT_LE(arq(pf, eps, delta + 0.1), a);
    std::reverse(as.begin(), as.end());
    EXPECT_NEAR(arq(Portfolio(as), eps, delta), a, 1e-15);
    EXPECT_NEAR(arq_star(Portfolio(as), sigma), s, 1e-12);
  }
}

TEST(ArqReport, PairDetailsConsistent) {
  const Portfolio pf({{"A", {0.5}, {1, 0}}, {"B", {0.55}, {0, 1}}, {"C", {0.9}, {1, 1}}});
  const auto r = arq_report(pf, 0.1, 0.5, 1.0);
  ASSERT_EQ(r.pair_details.size(), 6u);
  for (const auto& p : r.pair_details) {
    EXPECT_GT(p.kernel, 0.0);
    EXPECT_LE(p.kernel, 1.0);
    EXPECT_GE(p.structural, 0.0);
    EXPECT_LE(p.structural, 2.0);
    EXPECT_EQ(p.passed, p.perf_distance <= 0.1 && p.structural > 0.5);
  }
  EXPECT_DOUBLE_EQ(*r.arq, 2.0 / 6.0);
}

TEST(Arq, AlternativeStructureDistance) {
  const Portfolio pf({{"A", {0.5}, {1, 0, 0}}, {"B", {0.5}, {0, 1, 1}}});
  EXPECT_DOUBLE_EQ(arq(pf, 0.1, 2.5, DistanceKind::hamming), 1.0);
  EXPECT_DOUBLE_EQ(arq(pf, 0.1, 3.0, DistanceKind::hamming), 0.0);
}
