#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "degenet/kernels.hpp"
#include "degenet/model.hpp"
#include "degenet/pairwise.hpp"

namespace degenet {

/// Simple s->d path with its derived QoS aggregates.
struct Path {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  double total_latency = 0.0;
  double min_bandwidth = 0.0;
  std::size_t hop_count = 0;
  std::set<ModeId> mode_set;
  /// Edges per mode divided by hop count, over the network's mode universe.
  Distribution mode_freq{{1.0}};

  std::vector<ModeId> mode_sequence() const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a Path from an ordered edge walk starting at `source`.
/// `mode_universe` must be sorted and contain every edge mode.
Path make_path(const NodeId& source, std::vector<Edge> edges,
               const std::vector<ModeId>& mode_universe);

struct PathSearch {
  std::vector<Path> paths;
  /// True when max_hops pruned at least one extension that could have been
  /// explored otherwise.
  bool hop_limited = false;
};

inline constexpr std::size_t kDefaultMaxPaths = 100000;

/// Every simple path from s to d with at most max_hops edges. Parallel edges
/// produce distinct paths. Output is sorted by node sequence, then by mode
/// sequence. Throws ErrorCode::limit_exceeded when more than max_paths paths
/// exist.
PathSearch enumerate_simple_paths(const Network& net, const NodeId& s, const NodeId& d,
                                  std::size_t max_hops, std::size_t max_paths = kDefaultMaxPaths,
                                  Execution exec = kDefaultExecution);

/// min bandwidth / (total latency + hop count).
double path_quality(const Path& p);

/// Q_i / Σ Q_j. Throws on empty input or a non-positive quality.
Distribution path_distribution(const std::vector<double>& qualities);

struct ValidPathSet {
  std::vector<Path> paths;
  std::vector<double> qualities;
  /// Quality-proportional distribution; absent when there are no paths.
  std::optional<Distribution> distribution;
  std::set<std::set<ModeId>> unique_mode_combos;

  bool empty() const noexcept { return paths.empty(); }
  std::size_t size() const noexcept { return paths.size(); }
};

/// Keeps paths with total latency <= lambda_max and bottleneck bandwidth
/// >= beta_min, and derives qualities, distribution and mode combinations.
ValidPathSet filter_qos(const std::vector<Path>& paths, double lambda_max, double beta_min);

}  // namespace degenet
