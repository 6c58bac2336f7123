#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "degenet/kernels.hpp"
#include "degenet/model.hpp"
#include "degenet/pairwise.hpp"
#include "degenet/paths.hpp"

namespace degenet {

/// Number of unordered element pairs that can both perform `f` and whose
/// embeddings are further apart than `delta` under `kind`.
std::size_t degeneracy_score(const Inventory& inventory, const FunctionId& f, DistanceKind kind,
                             double delta, Execution exec = kDefaultExecution);

/// Mean Jaccard dissimilarity between the mode set of path `index` and those
/// of every other path in `vps`; 1 when it is the only path.
double path_mode_dissimilarity(std::size_t index, const ValidPathSet& vps);

/// Degeneracy-weighted path robustness. An empty set yields 0.
double dwpr(const ValidPathSet& vps, double theta);

/// Per-path mode frequency vectors re-expressed over the modes present in
/// `vps` (sorted), in path order.
std::vector<Distribution> mode_vectors(const ValidPathSet& vps);

/// Entropy of the quality-weighted pooled mode distribution. Throws
/// ErrorCode::undefined on an empty set.
double mode_entropy(const ValidPathSet& vps, LogBase base = LogBase::two);

/// Mode entropy plus Σ_{i != j} P_i P_j JSD(mu_i, mu_j).
double dwpr_star(const ValidPathSet& vps, LogBase base = LogBase::two,
                 Execution exec = kDefaultExecution);

struct PathDetail {
  Path path;
  double quality = 0.0;
  double probability = 0.0;
  bool passed_theta = false;
  double mean_dissimilarity = 0.0;
};

struct DwprReport {
  double dwpr = 0.0;
  /// Undefined (nullopt) when there are no valid paths.
  std::optional<double> dwpr_star;
  std::optional<double> mode_entropy;
  std::size_t valid_path_count = 0;
  std::size_t unique_combo_count = 0;
  std::vector<PathDetail> per_path;
  bool no_valid_paths = false;
};

DwprReport dwpr_report(const ValidPathSet& vps, double theta, LogBase base = LogBase::two,
                       Execution exec = kDefaultExecution);

}  // namespace degenet
