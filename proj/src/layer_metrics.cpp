#include "degenet/layer_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "degenet/error.hpp"

namespace degenet {

DiversityBasis diversity_basis(const Layer& layer) {
  return layer.has_embeddings() ? DiversityBasis::embedding : DiversityBasis::identity;
}

std::set<ElementId> degenerate_subset(const Layer& layer, double delta) {
  const auto basis = diversity_basis(layer);
  const auto& es = layer.elements;
  std::set<ElementId> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    // An element that performs nothing has no function to share.
    if (std::none_of(es[i].functions.begin(), es[i].functions.end(), [](auto b) { return b != 0; })) continue;
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j || es[i].functions != es[j].functions) continue;
      const bool diverse =
          basis == DiversityBasis::identity ||
          vector_distance(*es[i].embedding, *es[j].embedding, DistanceKind::euclidean) > delta;
      if (diverse) {
        out.insert(es[i].id);
        break;
      }
    }
  }
  return out;
}

double mldi(const LayerStack& stack, double delta) {
  if (stack.layers().empty()) throw Error(ErrorCode::undefined, "MLDI of an empty layer stack");
  double sum = 0.0;
  for (const auto& layer : stack.layers()) {
    sum += static_cast<double>(degenerate_subset(layer, delta).size()) /
           static_cast<double>(layer.elements.size());
  }
  return sum / static_cast<double>(stack.layers().size());
}

FunctionCoverage layer_function_distribution(const Layer& layer) {
  if (layer.elements.empty()) throw Error(ErrorCode::undefined, "layer '" + layer.id + "' is empty");
  const std::size_t m = layer.elements.front().functions.size();
  std::vector<double> coverage(m, 0.0);
  for (const auto& e : layer.elements) {
    for (std::size_t k = 0; k < m; ++k) coverage[k] += e.functions[k];
  }
  for (double& c : coverage) c /= static_cast<double>(layer.elements.size());
  if (std::all_of(coverage.begin(), coverage.end(), [](double c) { return c == 0.0; })) {
    throw Error(ErrorCode::undefined, "layer '" + layer.id + "' performs no function");
  }
  auto dist = normalize(coverage);
  return {std::move(coverage), std::move(dist)};
}

double layer_entropy(const Layer& layer, LogBase base) {
  return shannon_entropy(layer_function_distribution(layer).distribution, base);
}

std::vector<double> cross_layer_joint(const Layer& lower, const Layer& upper) {
  if (lower.elements.empty() || upper.elements.empty()) {
    throw Error(ErrorCode::undefined, "cross-layer joint of an empty layer");
  }
  const std::size_t m = lower.elements.front().functions.size();
  if (upper.elements.front().functions.size() != m) {
    throw Error(ErrorCode::dimension_mismatch, "layers use different function universes");
  }
  std::vector<double> joint(m * m, 0.0);
  for (const auto& a : lower.elements) {
    for (const auto& b : upper.elements) {
      for (std::size_t k = 0; k < m; ++k) {
        if (a.functions[k] == 0) continue;
        for (std::size_t l = 0; l < m; ++l) joint[k * m + l] += b.functions[l];
      }
    }
  }
  double total = 0.0;
  for (double x : joint) total += x;
  if (total == 0.0) throw Error(ErrorCode::undefined, "cross-layer joint is all zero");
  for (double& x : joint) x /= total;
  return joint;
}

double conditional_layer_entropy(const Layer& lower, const Layer& upper, LogBase base) {
  const auto joint = cross_layer_joint(lower, upper);
  const std::size_t m = lower.elements.front().functions.size();
  std::vector<double> upper_marginal(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) upper_marginal[l] += joint[k * m + l];
  }
  const double h = shannon_entropy(normalize(joint), base) - shannon_entropy(normalize(upper_marginal), base);
  return h > 0.0 ? h : 0.0;
}

namespace {

void require_stack(const LayerStack& stack) {
  if (stack.layers().empty()) throw Error(ErrorCode::undefined, "MLDI* of an empty layer stack");
  if (stack.function_count() < 2) {
    throw Error(ErrorCode::undefined, "MLDI* needs at least two functions (log m = 0)");
  }
}

}  // namespace

double mldi_star(const LayerStack& stack, double gamma_weight, LogBase base) {
  require_stack(stack);
  if (!(gamma_weight >= 0.0 && gamma_weight <= 1.0)) {
    throw Error(ErrorCode::domain, "gamma_weight must lie in [0, 1]");
  }
  const auto& layers = stack.layers();
  const double log_m = log_in(base, static_cast<double>(stack.function_count()));
  double sum = 0.0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    sum += layer_entropy(layers[i], base) / log_m;
    if (i + 1 < layers.size()) {
      sum += gamma_weight * conditional_layer_entropy(layers[i], layers[i + 1], base) / log_m;
    }
  }
  return sum / static_cast<double>(layers.size());
}

MldiReport mldi_report(const LayerStack& stack, double delta, double gamma_weight, LogBase base) {
  MldiReport r;
  r.mldi = mldi(stack, delta);
  const auto& layers = stack.layers();
  const bool entropy_defined = stack.function_count() >= 2;
  const double log_m = entropy_defined ? log_in(base, static_cast<double>(stack.function_count())) : 1.0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    LayerDetail d;
    d.id = layers[i].id;
    d.degenerate_count = degenerate_subset(layers[i], delta).size();
    d.total = layers[i].elements.size();
    d.basis = diversity_basis(layers[i]);
    if (entropy_defined) {
      d.normalized_entropy = layer_entropy(layers[i], base) / log_m;
      if (i + 1 < layers.size()) {
        d.normalized_conditional = conditional_layer_entropy(layers[i], layers[i + 1], base) / log_m;
      }
    }
    r.per_layer.push_back(std::move(d));
  }
  if (entropy_defined) r.mldi_star = mldi_star(stack, gamma_weight, base);
  return r;
}

}  // namespace degenet
