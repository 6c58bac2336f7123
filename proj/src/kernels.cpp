#include "degenet/kernels.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "degenet/error.hpp"

namespace degenet {

std::string_view to_string(LogBase base) noexcept { return base == LogBase::two ? "2" : "e"; }

LogBase parse_log_base(std::string_view text) {
  if (text == "2") return LogBase::two;
  if (text == "e") return LogBase::e;
  throw Error(ErrorCode::domain, "log base must be '2' or 'e', got '" + std::string(text) + "'");
}

double log_in(LogBase base, double x) noexcept {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

Distribution::Distribution(std::vector<double> probs, std::optional<std::vector<std::string>> labels)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
  if (probs_.empty()) throw Error(ErrorCode::domain, "distribution must have at least one entry");
  if (labels_ && labels_->size() != probs_.size()) {
    throw Error(ErrorCode::dimension_mismatch, "distribution labels and probabilities differ in length");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::domain, "distribution entries must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::domain, "distribution sums to " + std::to_string(sum) + ", not 1");
  }
}

Distribution normalize(std::span<const double> weights, std::optional<std::vector<std::string>> labels) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::domain, "weights must be finite and >= 0");
    sum += w;
  }
  if (sum <= 0.0) throw Error(ErrorCode::undefined, "cannot normalize an all-zero weight vector");
  std::vector<double> probs(weights.begin(), weights.end());
  for (double& p : probs) p /= sum;
  return Distribution(std::move(probs), std::move(labels));
}

std::string_view to_string(DistanceKind kind) noexcept {
  switch (kind) {
    case DistanceKind::euclidean: return "euclidean";
    case DistanceKind::manhattan: return "manhattan";
    case DistanceKind::chebyshev: return "chebyshev";
    case DistanceKind::cosine: return "cosine";
    case DistanceKind::braycurtis: return "braycurtis";
    case DistanceKind::hamming: return "hamming";
  }
  return "unknown";
}

DistanceKind parse_distance_kind(std::string_view text) {
  for (auto kind : {DistanceKind::euclidean, DistanceKind::manhattan, DistanceKind::chebyshev,
                    DistanceKind::cosine, DistanceKind::braycurtis, DistanceKind::hamming}) {
    if (to_string(kind) == text) return kind;
  }
  throw Error(ErrorCode::domain, "unknown distance kind '" + std::string(text) + "'");
}

double shannon_entropy(const Distribution& p, LogBase base) {
  double h = 0.0;
  for (double x : p.probs()) {
    if (x > 0.0) h -= x * log_in(base, x);
  }
  return h > 0.0 ? h : 0.0;
}

double kl_divergence(const Distribution& p, const Distribution& m, LogBase base) {
  if (p.size() != m.size()) throw Error(ErrorCode::dimension_mismatch, "KL: distributions differ in size");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (m[i] == 0.0) {
      throw Error(ErrorCode::support, "KL: p[" + std::to_string(i) + "] > 0 where m is 0");
    }
    kl += p[i] * log_in(base, p[i] / m[i]);
  }
  return kl > 0.0 ? kl : 0.0;
}

double jsd(const Distribution& p, const Distribution& q, LogBase base) {
  if (p.size() != q.size()) throw Error(ErrorCode::dimension_mismatch, "JSD: distributions differ in size");
  // Each term is symmetric in (p_i, q_i) and floating-point addition is
  // commutative, so jsd(p, q) == jsd(q, p) bit for bit.
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double a = p[i];
    const double b = q[i];
    const double mid = 0.5 * (a + b);
    const double ta = a > 0.0 ? a * log_in(base, a / mid) : 0.0;
    const double tb = b > 0.0 ? b * log_in(base, b / mid) : 0.0;
    total += ta + tb;
  }
  const double upper = log_in(base, 2.0);
  return std::clamp(0.5 * total, 0.0, upper);
}

namespace {

void require_same_size(std::span<const double> x, std::span<const double> y, const char* what) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string(what) + ": vectors differ in size (" + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()) + ")");
  }
}

double squared_l2(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

double norm(std::span<const double> x) { return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0)); }

double cosine_distance(std::span<const double> x, std::span<const double> y) {
  const double nx = norm(x);
  const double ny = norm(y);
  if (nx == 0.0 || ny == 0.0) throw Error(ErrorCode::domain, "cosine: zero vector");
  const double cos = std::inner_product(x.begin(), x.end(), y.begin(), 0.0) / (nx * ny);
  return std::clamp(1.0 - cos, 0.0, 2.0);
}

}  // namespace

double gaussian_kernel(std::span<const double> x, std::span<const double> y, double sigma) {
  require_same_size(x, y, "gaussian_kernel");
  if (!(sigma > 0.0)) throw Error(ErrorCode::domain, "gaussian_kernel: sigma must be > 0");
  return std::exp(-squared_l2(x, y) / (2.0 * sigma * sigma));
}

double vector_distance(std::span<const double> x, std::span<const double> y, DistanceKind kind) {
  require_same_size(x, y, "vector_distance");
  switch (kind) {
    case DistanceKind::euclidean:
      return std::sqrt(squared_l2(x, y));
    case DistanceKind::manhattan: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
      return s;
    }
    case DistanceKind::chebyshev: {
      double m = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
      return m;
    }
    case DistanceKind::cosine:
      return cosine_distance(x, y);
    case DistanceKind::braycurtis: {
      double num = 0.0;
      double den = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0 || y[i] < 0.0) throw Error(ErrorCode::domain, "braycurtis: negative entry");
        num += std::abs(x[i] - y[i]);
        den += x[i] + y[i];
      }
      if (den <= 0.0) throw Error(ErrorCode::domain, "braycurtis: both vectors are zero");
      return num / den;
    }
    case DistanceKind::hamming: {
      double count = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if ((x[i] != 0.0 && x[i] != 1.0) || (y[i] != 0.0 && y[i] != 1.0)) {
          throw Error(ErrorCode::domain, "hamming: entries must be 0 or 1");
        }
        if (x[i] != y[i]) count += 1.0;
      }
      return count;
    }
  }
  throw Error(ErrorCode::domain, "unknown distance kind");
}

double cosine_structural_dissimilarity(std::span<const double> si, std::span<const double> sj) {
  require_same_size(si, sj, "cosine_structural_dissimilarity");
  return cosine_distance(si, sj);
}

}  // namespace degenet
