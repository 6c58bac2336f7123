#include "degenet/algorithm_metrics.hpp"

#include "degenet/error.hpp"

namespace degenet {

double structure_dissimilarity(const AlgorithmProfile& ai, const AlgorithmProfile& aj, DistanceKind kind) {
  if (kind == DistanceKind::cosine) return cosine_structural_dissimilarity(ai.structure, aj.structure);
  return vector_distance(ai.structure, aj.structure, kind);
}

double performance_kernel(const AlgorithmProfile& ai, const AlgorithmProfile& aj, double sigma) {
  return gaussian_kernel(ai.performance, aj.performance, sigma);
}

namespace {

void require_pairs(const Portfolio& portfolio, const char* what) {
  if (portfolio.size() < 2) {
    throw Error(ErrorCode::undefined,
                std::string(what) + " needs at least two algorithms, got " + std::to_string(portfolio.size()));
  }
}

struct PairTables {
  std::vector<double> perf;        // Euclidean performance distance
  std::vector<double> structural;  // D_S
};

PairTables pair_tables(const Portfolio& portfolio, DistanceKind kind) {
  const auto& algs = portfolio.algorithms();
  const std::size_t n = algs.size();
  PairTables t{std::vector<double>(n * n, 0.0), std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      t.perf[i * n + j] = t.perf[j * n + i] =
          vector_distance(algs[i].performance, algs[j].performance, DistanceKind::euclidean);
      t.structural[i * n + j] = t.structural[j * n + i] = structure_dissimilarity(algs[i], algs[j], kind);
    }
  }
  return t;
}

}  // namespace

double arq(const Portfolio& portfolio, double epsilon, double delta, DistanceKind structure, Execution exec) {
  require_pairs(portfolio, "ARQ");
  const std::size_t n = portfolio.size();
  const auto t = pair_tables(portfolio, structure);
  const double hits = ordered_pair_sum(
      n,
      [&](std::size_t i, std::size_t j) {
        return t.perf[i * n + j] <= epsilon && t.structural[i * n + j] > delta ? 1.0 : 0.0;
      },
      exec);
  return hits / static_cast<double>(n * (n - 1));
}

double arq_star(const Portfolio& portfolio, double sigma, Execution exec) {
  require_pairs(portfolio, "ARQ*");
  if (!(sigma > 0.0)) throw Error(ErrorCode::domain, "sigma must be > 0");
  const std::size_t n = portfolio.size();
  const auto& algs = portfolio.algorithms();
  const auto t = pair_tables(portfolio, DistanceKind::cosine);
  const double sum = ordered_pair_sum(
      n,
      [&](std::size_t i, std::size_t j) {
        return performance_kernel(algs[i], algs[j], sigma) * t.structural[i * n + j];
      },
      exec);
  return sum / static_cast<double>(n * (n - 1));
}

ArqReport arq_report(const Portfolio& portfolio, double epsilon, double delta, double sigma,
                     DistanceKind structure, Execution exec) {
  ArqReport r;
  r.n = portfolio.size();
  if (r.n < 2) return r;
  r.arq = arq(portfolio, epsilon, delta, structure, exec);
  r.arq_star = arq_star(portfolio, sigma, exec);
  const auto t = pair_tables(portfolio, structure);
  const auto& algs = portfolio.algorithms();
  for (std::size_t i = 0; i < r.n; ++i) {
    for (std::size_t j = 0; j < r.n; ++j) {
      if (i == j) continue;
      const double pd = t.perf[i * r.n + j];
      const double ds = t.structural[i * r.n + j];
      r.pair_details.push_back({i, j, pd, performance_kernel(algs[i], algs[j], sigma), ds,
                                pd <= epsilon && ds > delta});
    }
  }
  return r;
}

}  // namespace degenet
