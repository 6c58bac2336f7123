#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "degenet/kernels.hpp"
#include "degenet/model.hpp"
#include "degenet/pairwise.hpp"

namespace degenet {

/// Structural dissimilarity between two algorithms. Cosine uses the
/// dedicated [0, 2] dissimilarity; other kinds go through vector_distance.
double structure_dissimilarity(const AlgorithmProfile& ai, const AlgorithmProfile& aj,
                               DistanceKind kind = DistanceKind::cosine);

/// Fraction of ordered pairs with |P_i - P_j|_2 <= epsilon and structural
/// dissimilarity > delta.
double arq(const Portfolio& portfolio, double epsilon, double delta,
           DistanceKind structure = DistanceKind::cosine, Execution exec = kDefaultExecution);

/// Gaussian kernel on the performance vectors.
double performance_kernel(const AlgorithmProfile& ai, const AlgorithmProfile& aj, double sigma);

/// Ordered-pair mean of K_P(i, j) * D_S(i, j) with cosine D_S.
double arq_star(const Portfolio& portfolio, double sigma, Execution exec = kDefaultExecution);

struct AlgorithmPair {
  std::size_t i = 0;
  std::size_t j = 0;
  double perf_distance = 0.0;
  double kernel = 0.0;
  double structural = 0.0;
  bool passed = false;
};

struct ArqReport {
  std::optional<double> arq;
  std::optional<double> arq_star;
  std::size_t n = 0;
  std::vector<AlgorithmPair> pair_details;
};

ArqReport arq_report(const Portfolio& portfolio, double epsilon, double delta, double sigma,
                     DistanceKind structure = DistanceKind::cosine,
                     Execution exec = kDefaultExecution);

}  // namespace degenet
