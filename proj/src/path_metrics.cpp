#include "degenet/path_metrics.hpp"

#include <algorithm>
#include <set>

#include "degenet/error.hpp"

namespace degenet {

std::size_t degeneracy_score(const Inventory& inventory, const FunctionId& f, DistanceKind kind,
                             double delta, Execution exec) {
  if (!inventory.has_function(f)) throw Error(ErrorCode::unknown_id, "unknown function '" + f + "'");
  std::vector<const Element*> capable;
  for (const auto& e : inventory.elements()) {
    if (capability(e, f) == 1) capable.push_back(&e);
  }
  // Evaluate distances up front so precondition errors surface outside the
  // parallel region.
  const std::size_t n = capable.size();
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i * n + j] = vector_distance(capable[i]->embedding, capable[j]->embedding, kind);
    }
  }
  return unordered_pair_count(
      n, [&](std::size_t i, std::size_t j) { return dist[i * n + j] > delta; }, exec);
}

double path_mode_dissimilarity(std::size_t index, const ValidPathSet& vps) {
  if (index >= vps.size()) throw Error(ErrorCode::domain, "path index out of range");
  if (vps.size() == 1) return 1.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < vps.size(); ++j) {
    if (j != index) sum += jaccard_dissimilarity(vps.paths[index].mode_set, vps.paths[j].mode_set);
  }
  return sum / static_cast<double>(vps.size() - 1);
}

double dwpr(const ValidPathSet& vps, double theta) {
  if (vps.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < vps.size(); ++i) {
    if (vps.qualities[i] >= theta) sum += path_mode_dissimilarity(i, vps);
  }
  return sum / static_cast<double>(vps.unique_mode_combos.size());
}

std::vector<Distribution> mode_vectors(const ValidPathSet& vps) {
  std::set<ModeId> present;
  for (const auto& p : vps.paths) present.insert(p.mode_set.begin(), p.mode_set.end());
  const std::vector<ModeId> labels(present.begin(), present.end());
  std::vector<Distribution> out;
  out.reserve(vps.size());
  for (const auto& p : vps.paths) {
    std::vector<double> counts(labels.size(), 0.0);
    for (const auto& e : p.edges) {
      const auto k = std::lower_bound(labels.begin(), labels.end(), e.mode) - labels.begin();
      counts[static_cast<std::size_t>(k)] += 1.0;
    }
    out.push_back(normalize(counts, labels));
  }
  return out;
}

namespace {

void require_paths(const ValidPathSet& vps, const char* what) {
  if (vps.empty() || !vps.distribution) {
    throw Error(ErrorCode::undefined, std::string(what) + " is undefined without valid paths");
  }
}

}  // namespace

double mode_entropy(const ValidPathSet& vps, LogBase base) {
  require_paths(vps, "mode entropy");
  const auto mu = mode_vectors(vps);
  const auto& prob = *vps.distribution;
  std::vector<double> pooled(mu.front().size(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t k = 0; k < pooled.size(); ++k) pooled[k] += prob[i] * mu[i][k];
  }
  return shannon_entropy(normalize(pooled), base);
}

double dwpr_star(const ValidPathSet& vps, LogBase base, Execution exec) {
  require_paths(vps, "DWPR*");
  const auto mu = mode_vectors(vps);
  const auto& prob = *vps.distribution;
  const double pair_term = ordered_pair_sum(
      mu.size(), [&](std::size_t i, std::size_t j) { return prob[i] * prob[j] * jsd(mu[i], mu[j], base); },
      exec);
  return mode_entropy(vps, base) + pair_term;
}

DwprReport dwpr_report(const ValidPathSet& vps, double theta, LogBase base, Execution exec) {
  DwprReport r;
  r.valid_path_count = vps.size();
  r.unique_combo_count = vps.unique_mode_combos.size();
  r.dwpr = dwpr(vps, theta);
  if (vps.empty()) {
    r.no_valid_paths = true;
    return r;
  }
  r.mode_entropy = mode_entropy(vps, base);
  r.dwpr_star = dwpr_star(vps, base, exec);
  for (std::size_t i = 0; i < vps.size(); ++i) {
    r.per_path.push_back({vps.paths[i], vps.qualities[i], (*vps.distribution)[i],
                          vps.qualities[i] >= theta, path_mode_dissimilarity(i, vps)});
  }
  return r;
}

}  // namespace degenet
