#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degenet/config.hpp"
#include "degenet/io.hpp"
#include "degenet/model.hpp"
#include "degenet/paths.hpp"

namespace degenet {

inline constexpr std::string_view kToolName = "degenet";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class MetricKind {
  dwpr,
  dwpr_star,
  fss,
  fss_star,
  arq,
  arq_star,
  mldi,
  mldi_star,
  degeneracy_score,
};

std::string_view to_string(MetricKind kind) noexcept;
MetricKind parse_metric_kind(std::string_view text);

/// One failure-injection step. Node and edge ids target the network;
/// element ids target the inventory and layer stack; algorithm ids target
/// the portfolio.
struct FailureStep {
  std::string label;
  std::set<NodeId> nodes;
  std::set<EdgeKey> edges;
  std::set<ElementId> elements;
  std::set<AlgorithmId> algorithms;

  bool empty() const noexcept {
    return nodes.empty() && edges.empty() && elements.empty() && algorithms.empty();
  }
  /// Union of two steps (used for cumulative mode).
  FailureStep merged_with(const FailureStep& next) const;

  friend bool operator==(const FailureStep&, const FailureStep&) = default;
};

struct ScenarioInputs {
  std::optional<Network> network;
  std::optional<Inventory> inventory;
  std::optional<Portfolio> portfolio;
  std::optional<LayerStack> layers;
};

struct Scenario {
  std::string name;
  std::vector<FailureStep> failures;
  std::vector<MetricKind> metrics;
  MetricConfig config;
  std::vector<std::pair<NodeId, NodeId>> endpoints;
  std::optional<FunctionId> function;
  bool cumulative = true;
  std::size_t max_paths = kDefaultMaxPaths;
};

/// Scenario file: `inputs` entries may be file paths (resolved against
/// base_dir) or inline documents.
struct LoadedScenario {
  Scenario scenario;
  ScenarioInputs inputs;
};

LoadedScenario scenario_from_json(const Json& j, const std::string& base_dir = ".");
LoadedScenario load_scenario(const std::string& path);

struct MetricValue {
  std::string name;
  std::optional<double> value;
  std::optional<double> delta;  // value - baseline, when both are defined
  std::string reason;           // set when value is undefined

  friend bool operator==(const MetricValue&, const MetricValue&) = default;
};

struct StepResult {
  std::size_t step = 0;
  std::string label;
  FailureStep applied;  // failures in effect for this step
  std::vector<MetricValue> metrics;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

struct Warning {
  std::size_t step = 0;
  std::string source;
  std::string code;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct Report {
  std::string tool{kToolName};
  std::string version{kToolVersion};
  std::string scenario;
  bool cumulative = true;
  MetricConfig config;
  std::vector<StepResult> steps;  // steps[0] is the intact baseline
  std::vector<Warning> warnings;

  /// True when every requested metric is undefined on the baseline.
  bool baseline_undefined() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Rounds to 12 significant digits; every reported number passes through it.
double round_report_value(double x);

/// Baseline plus one result per failure step. Throws on unresolvable
/// failure targets or a metric whose input document is missing.
Report run_scenario(const ScenarioInputs& inputs, const Scenario& scenario);

enum class ReportFormat { json, csv };

Json to_json(const Report& report);
Report report_from_json(const Json& j);
std::string emit_report(const Report& report, ReportFormat format);

}  // namespace degenet
