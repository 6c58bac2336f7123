#pragma once

#include <cstddef>
#include <limits>

#include "degenet/kernels.hpp"

namespace degenet {

/// Thresholds and parameters shared by every metric. Build through
/// MetricConfig::checked() (or validate()) so ranges are enforced.
struct MetricConfig {
  double delta = 0.5;       // structural distinctness threshold
  double epsilon = 0.1;     // functional (performance) similarity threshold
  double theta = 0.0;       // path quality threshold
  double lambda_max = std::numeric_limits<double>::infinity();  // total latency cap, ms
  double beta_min = 0.0;    // bottleneck bandwidth floor, Mbit/s
  double sigma = 1.0;       // Gaussian kernel width
  double gamma_weight = 0.5;  // weight of the cross-layer term
  LogBase log_base = LogBase::two;
  std::size_t max_hops = 8;
  DistanceKind element_distance = DistanceKind::euclidean;
  DistanceKind structure_distance = DistanceKind::cosine;

  /// Throws ErrorCode::domain when a field is out of range.
  void validate() const;

  static MetricConfig checked(MetricConfig raw) {
    raw.validate();
    return raw;
  }

  friend bool operator==(const MetricConfig&, const MetricConfig&) = default;
};

}  // namespace degenet
