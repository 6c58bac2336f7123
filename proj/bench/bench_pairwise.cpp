// Serial reference vs OpenMP execution of the pairwise kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "degenet/algorithm_metrics.hpp"
#include "degenet/path_metrics.hpp"
#include "degenet/paths.hpp"
#include "degenet/substitution_metrics.hpp"

using namespace degenet;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

std::vector<Element> elements(std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"e" + std::to_string(i), {"route"}, random_vector(rng, 16, 0.0, 1.0), 2.0 + i % 7, 1.0 * (i % 3)});
  }
  return out;
}

Portfolio portfolio(std::size_t n) {
  std::mt19937_64 rng(2);
  std::vector<AlgorithmProfile> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto s = random_vector(rng, 8, -1.0, 1.0);
    s[0] += 2.0;
    out.push_back({"A" + std::to_string(i), random_vector(rng, 4, 0.0, 1.0), std::move(s)});
  }
  return Portfolio(std::move(out));
}

// Dense multigraph: every node pair linked in each of three modes.
Network dense_network(std::size_t n) {
  const std::vector<std::string> modes{"radio", "optical", "acoustic"};
  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t k = 0; k < modes.size(); ++k)
        if ((a + b + k) % 2 == 0) edges.push_back({nodes[a], nodes[b], modes[k], 1.0 + k, 10.0 + a + b});
  return Network(nodes, edges);
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_FssStar(benchmark::State& state) {
  const auto es = elements(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fss_star(es, 0.5, exec_of(state)));
}

void BM_ArqStar(benchmark::State& state) {
  const auto pf = portfolio(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(arq_star(pf, 0.5, exec_of(state)));
}

void BM_Enumerate(benchmark::State& state) {
  const auto net = dense_network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_simple_paths(net, net.nodes().front(), net.nodes().back(), 5, kDefaultMaxPaths * 100, exec_of(state)));
  }
}

void BM_DwprStar(benchmark::State& state) {
  const auto net = dense_network(static_cast<std::size_t>(state.range(0)));
  const auto paths = enumerate_simple_paths(net, net.nodes().front(), net.nodes().back(), 4,
                                            kDefaultMaxPaths * 100).paths;
  const auto vps = filter_qos(paths, 1e9, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(dwpr_star(vps, LogBase::two, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_FssStar)->ArgsProduct({{256, 1024}, {0, 1}})->ArgNames({"n", "parallel"});
BENCHMARK(BM_ArqStar)->ArgsProduct({{256, 1024}, {0, 1}})->ArgNames({"n", "parallel"});
BENCHMARK(BM_Enumerate)->ArgsProduct({{9, 11}, {0, 1}})->ArgNames({"nodes", "parallel"});
BENCHMARK(BM_DwprStar)->ArgsProduct({{8, 10}, {0, 1}})->ArgNames({"nodes", "parallel"});

BENCHMARK_MAIN();
