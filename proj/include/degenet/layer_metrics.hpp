#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "degenet/kernels.hpp"
#include "degenet/model.hpp"

namespace degenet {

/// How structural diversity was decided inside a layer.
enum class DiversityBasis { embedding, identity };

/// Elements that share their (non-zero) function vector with at least one
/// other structurally diverse element of the layer. Diversity is embedding
/// L2 distance > delta when the layer carries embeddings, distinct element
/// identity otherwise.
std::set<ElementId> degenerate_subset(const Layer& layer, double delta);

DiversityBasis diversity_basis(const Layer& layer);

/// Mean over layers of |degenerate| / |elements|.
double mldi(const LayerStack& stack, double delta);

struct FunctionCoverage {
  std::vector<double> coverage;  // fraction of elements performing each function
  Distribution distribution;     // coverage normalized to sum 1
};

FunctionCoverage layer_function_distribution(const Layer& layer);

double layer_entropy(const Layer& layer, LogBase base = LogBase::two);

/// Joint function distribution of two layers, p(k, l) proportional to the
/// number of cross-layer element pairs where the first performs k and the
/// second performs l. Row-major m x m over the stack's function universe.
std::vector<double> cross_layer_joint(const Layer& lower, const Layer& upper);

/// H(lower | upper) = H(joint) - H(upper marginal of the joint).
double conditional_layer_entropy(const Layer& lower, const Layer& upper,
                                 LogBase base = LogBase::two);

/// (1/k) Σ_i [H(l_i)/log m + gamma * H(l_i | l_{i+1})/log m]; the last
/// layer has no conditional term.
double mldi_star(const LayerStack& stack, double gamma_weight, LogBase base = LogBase::two);

struct LayerDetail {
  LayerId id;
  std::size_t degenerate_count = 0;
  std::size_t total = 0;
  DiversityBasis basis = DiversityBasis::identity;
  double normalized_entropy = 0.0;
  std::optional<double> normalized_conditional;  // absent for the last layer
};

struct MldiReport {
  double mldi = 0.0;
  std::optional<double> mldi_star;  // undefined when m < 2
  std::vector<LayerDetail> per_layer;
};

MldiReport mldi_report(const LayerStack& stack, double delta, double gamma_weight,
                       LogBase base = LogBase::two);

}  // namespace degenet
