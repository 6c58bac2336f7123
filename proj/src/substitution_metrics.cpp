#include "degenet/substitution_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "degenet/error.hpp"

namespace degenet {

std::vector<Element> capable_set(const std::vector<Element>& inventory, const FunctionId& f) {
  std::vector<Element> out;
  std::copy_if(inventory.begin(), inventory.end(), std::back_inserter(out),
               [&](const Element& e) { return capability(e, f) == 1; });
  return out;
}

namespace {

void require_pairs(std::size_t n, const char* what) {
  if (n < 2) {
    throw Error(ErrorCode::undefined,
                std::string(what) + " needs at least two capable elements, got " + std::to_string(n));
  }
}

// Full n x n distance table; precondition failures are raised here rather
// than inside a parallel loop.
std::vector<double> distance_table(const std::vector<Element>& elems, DistanceKind kind) {
  const std::size_t n = elems.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = vector_distance(elems[i].embedding, elems[j].embedding, kind);
    }
  }
  return d;
}

double weight_for(const Element& ei, const Element& ej, double distance) {
  return std::min(ei.capacity, ej.capacity) / (1.0 + std::abs(ei.load - ej.load)) * distance;
}

}  // namespace

double fss(const std::vector<Element>& capable, double delta, DistanceKind kind, Execution exec) {
  require_pairs(capable.size(), "FSS");
  const std::size_t n = capable.size();
  const auto d = distance_table(capable, kind);
  const double passing = ordered_pair_sum(
      n, [&](std::size_t i, std::size_t j) { return d[i * n + j] > delta ? 1.0 : 0.0; }, exec);
  return passing / static_cast<double>(n * (n - 1));
}

double substitution_weight(const Element& ei, const Element& ej) {
  return weight_for(ei, ej, vector_distance(ei.embedding, ej.embedding, DistanceKind::euclidean));
}

double fss_star(const std::vector<Element>& capable, double delta, Execution exec) {
  require_pairs(capable.size(), "FSS*");
  const std::size_t n = capable.size();
  const auto d = distance_table(capable, DistanceKind::euclidean);
  const double sum = ordered_pair_sum(
      n,
      [&](std::size_t i, std::size_t j) {
        const double dij = d[i * n + j];
        return dij > delta ? weight_for(capable[i], capable[j], dij) : 0.0;
      },
      exec);
  return sum / static_cast<double>(n * (n - 1));
}

FssReport fss_report(const std::vector<Element>& capable, double delta, DistanceKind kind, Execution exec) {
  FssReport r;
  r.n = capable.size();
  if (r.n < 2) return r;
  r.fss = fss(capable, delta, kind, exec);
  r.fss_star = fss_star(capable, delta, exec);
  const auto d = distance_table(capable, kind);
  for (std::size_t i = 0; i < r.n; ++i) {
    for (std::size_t j = 0; j < r.n; ++j) {
      if (i == j) continue;
      const double dij = d[i * r.n + j];
      r.pair_details.push_back({i, j, dij, substitution_weight(capable[i], capable[j]), dij > delta});
    }
  }
  return r;
}

}  // namespace degenet
