#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "degenet/kernels.hpp"
#include "degenet/model.hpp"
#include "degenet/pairwise.hpp"

namespace degenet {

/// Elements able to perform `f`, in inventory order.
std::vector<Element> capable_set(const std::vector<Element>& inventory, const FunctionId& f);

/// Fraction of ordered pairs whose embedding distance exceeds delta.
/// Throws ErrorCode::undefined when fewer than two elements are given.
double fss(const std::vector<Element>& capable, double delta,
           DistanceKind kind = DistanceKind::euclidean, Execution exec = kDefaultExecution);

/// min(C_i, C_j) / (1 + |L_i - L_j|) * |s_i - s_j|_2
double substitution_weight(const Element& ei, const Element& ej);

/// Ordered-pair mean of 1[D > delta] * W_ij, with D the L2 embedding distance.
double fss_star(const std::vector<Element>& capable, double delta,
                Execution exec = kDefaultExecution);

struct SubstitutionPair {
  std::size_t i = 0;
  std::size_t j = 0;
  double distance = 0.0;
  double weight = 0.0;
  bool passed_delta = false;
};

struct FssReport {
  std::optional<double> fss;
  std::optional<double> fss_star;
  std::size_t n = 0;
  std::vector<SubstitutionPair> pair_details;  // ordered pairs, i != j
};

/// Never throws for n < 2; the scores are left undefined instead.
FssReport fss_report(const std::vector<Element>& capable, double delta,
                     DistanceKind kind = DistanceKind::euclidean,
                     Execution exec = kDefaultExecution);

}  // namespace degenet
