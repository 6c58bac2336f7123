#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace degenet {

enum class LogBase { two, e };

std::string_view to_string(LogBase base) noexcept;
LogBase parse_log_base(std::string_view text);

/// log of x in the requested base.
double log_in(LogBase base, double x) noexcept;

/// Non-negative vector summing to 1 within 1e-9. Never renormalized
/// implicitly; use normalize() to build one from raw weights.
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-9;

  explicit Distribution(std::vector<double> probs,
                        std::optional<std::vector<std::string>> labels = std::nullopt);

  const std::vector<double>& probs() const noexcept { return probs_; }
  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> probs_;
  std::optional<std::vector<std::string>> labels_;
};

/// Scales non-negative weights to sum to one. Throws on negative entries or
/// an all-zero input.
Distribution normalize(std::span<const double> weights,
                       std::optional<std::vector<std::string>> labels = std::nullopt);

enum class DistanceKind { euclidean, manhattan, chebyshev, cosine, braycurtis, hamming };

std::string_view to_string(DistanceKind kind) noexcept;
DistanceKind parse_distance_kind(std::string_view text);

/// (|a∪b| - |a∩b|) / |a∪b|; two empty sets are at distance 0.
template <typename T>
double jaccard_dissimilarity(const std::set<T>& a, const std::set<T>& b) {
  std::size_t common = 0;
  for (const auto& x : a) common += b.count(x);
  const std::size_t joint = a.size() + b.size() - common;
  if (joint == 0) return 0.0;
  return static_cast<double>(joint - common) / static_cast<double>(joint);
}

double shannon_entropy(const Distribution& p, LogBase base = LogBase::two);

/// Σ p_i log(p_i / m_i). Throws ErrorCode::support when p_i > 0 but m_i = 0.
double kl_divergence(const Distribution& p, const Distribution& m, LogBase base = LogBase::two);

/// Jensen-Shannon divergence against the midpoint mixture. Exactly
/// symmetric in its arguments; bounded by log(2) in the chosen base.
double jsd(const Distribution& p, const Distribution& q, LogBase base = LogBase::two);

/// exp(-|x - y|^2 / (2 sigma^2)).
double gaussian_kernel(std::span<const double> x, std::span<const double> y, double sigma);

double vector_distance(std::span<const double> x, std::span<const double> y, DistanceKind kind);

/// 1 - cos(angle(si, sj)), in [0, 2]. Throws on a zero vector.
double cosine_structural_dissimilarity(std::span<const double> si, std::span<const double> sj);

}  // namespace degenet
