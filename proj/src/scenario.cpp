#include "degenet/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>

#include "degenet/algorithm_metrics.hpp"
#include "degenet/error.hpp"
#include "degenet/layer_metrics.hpp"
#include "degenet/path_metrics.hpp"
#include "degenet/substitution_metrics.hpp"

namespace degenet {

namespace {

constexpr MetricKind kAllMetrics[] = {
    MetricKind::dwpr, MetricKind::dwpr_star, MetricKind::fss,       MetricKind::fss_star,
    MetricKind::arq,  MetricKind::arq_star,  MetricKind::mldi,      MetricKind::mldi_star,
    MetricKind::degeneracy_score,
};

[[noreturn]] void input_error(const std::string& msg) { throw Error(ErrorCode::schema, msg); }

std::set<std::string> string_set(const Json& j, const std::string& where) {
  std::set<std::string> out;
  if (j.is_null()) return out;
  if (!j.is_array()) input_error(where + ": expected an array");
  for (const auto& x : j) {
    if (!x.is_string()) input_error(where + ": expected strings");
    out.insert(x.get<std::string>());
  }
  return out;
}

FailureStep failure_step_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) input_error(where + ": expected an object");
  FailureStep step;
  step.label = j.value("label", std::string());
  step.nodes = string_set(j.value("nodes", Json()), where + ".nodes");
  if (const auto it = j.find("edges"); it != j.end()) {
    if (!it->is_array()) input_error(where + ".edges: expected an array");
    for (const auto& e : *it) step.edges.insert(edge_key_from_json(e));
  }
  step.elements = string_set(j.value("elements", Json()), where + ".elements");
  step.algorithms = string_set(j.value("algorithms", Json()), where + ".algorithms");
  return step;
}

Json to_json(const FailureStep& step) {
  Json edges = Json::array();
  for (const auto& k : step.edges) edges.push_back(degenet::to_json(k));
  return {{"nodes", step.nodes}, {"edges", std::move(edges)}, {"elements", step.elements},
          {"algorithms", step.algorithms}};
}

Json load_input(const Json& entry, const std::string& base_dir) {
  if (entry.is_string()) {
    std::filesystem::path p(entry.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return parse_json(read_file(p.string()));
  }
  if (entry.is_object()) return entry;
  input_error("inputs: each entry must be a file path or an inline document");
}

bool needs_network(MetricKind k) { return k == MetricKind::dwpr || k == MetricKind::dwpr_star; }
bool needs_inventory(MetricKind k) {
  return k == MetricKind::fss || k == MetricKind::fss_star || k == MetricKind::degeneracy_score;
}
bool needs_portfolio(MetricKind k) { return k == MetricKind::arq || k == MetricKind::arq_star; }
bool needs_layers(MetricKind k) { return k == MetricKind::mldi || k == MetricKind::mldi_star; }

std::string endpoint_tag(const std::pair<NodeId, NodeId>& ep) { return ep.first + "->" + ep.second; }

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view to_string(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::dwpr: return "dwpr";
    case MetricKind::dwpr_star: return "dwpr_star";
    case MetricKind::fss: return "fss";
    case MetricKind::fss_star: return "fss_star";
    case MetricKind::arq: return "arq";
    case MetricKind::arq_star: return "arq_star";
    case MetricKind::mldi: return "mldi";
    case MetricKind::mldi_star: return "mldi_star";
    case MetricKind::degeneracy_score: return "degeneracy_score";
  }
  return "unknown";
}

MetricKind parse_metric_kind(std::string_view text) {
  for (auto k : kAllMetrics) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::schema, "unknown metric '" + std::string(text) + "'");
}

FailureStep FailureStep::merged_with(const FailureStep& next) const {
  FailureStep out = *this;
  out.label = next.label;
  out.nodes.insert(next.nodes.begin(), next.nodes.end());
  out.edges.insert(next.edges.begin(), next.edges.end());
  out.elements.insert(next.elements.begin(), next.elements.end());
  out.algorithms.insert(next.algorithms.begin(), next.algorithms.end());
  return out;
}

LoadedScenario scenario_from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) input_error("scenario: top level must be an object");
  LoadedScenario out;
  Scenario& sc = out.scenario;
  sc.name = j.value("name", std::string("scenario"));

  if (const auto it = j.find("inputs"); it != j.end()) {
    if (!it->is_object()) input_error("scenario.inputs: expected an object");
    for (const auto& [key, entry] : it->items()) {
      const Json doc = load_input(entry, base_dir);
      if (key == "network") out.inputs.network = network_from_json(doc);
      else if (key == "inventory") out.inputs.inventory = inventory_from_json(doc);
      else if (key == "portfolio") out.inputs.portfolio = portfolio_from_json(doc);
      else if (key == "layers") out.inputs.layers = layer_stack_from_json(doc);
      else input_error("scenario.inputs: unknown input '" + key + "'");
    }
  }

  const auto jm = j.find("metrics");
  if (jm == j.end() || !jm->is_array() || jm->empty()) {
    input_error("scenario.metrics: at least one metric is required");
  }
  for (const auto& m : *jm) {
    if (!m.is_string()) input_error("scenario.metrics: expected strings");
    const auto kind = parse_metric_kind(m.get<std::string>());
    if (std::find(sc.metrics.begin(), sc.metrics.end(), kind) == sc.metrics.end()) sc.metrics.push_back(kind);
  }

  sc.config = config_from_json(j.value("config", Json::object()));

  if (const auto it = j.find("endpoints"); it != j.end()) {
    if (!it->is_array()) input_error("scenario.endpoints: expected an array");
    for (const auto& ep : *it) {
      if (ep.is_array() && ep.size() == 2 && ep[0].is_string() && ep[1].is_string()) {
        sc.endpoints.emplace_back(ep[0].get<std::string>(), ep[1].get<std::string>());
      } else if (ep.is_object() && ep.contains("src") && ep.contains("dst")) {
        sc.endpoints.emplace_back(ep["src"].get<std::string>(), ep["dst"].get<std::string>());
      } else {
        input_error("scenario.endpoints: expected [\"s\", \"d\"] pairs");
      }
    }
  }
  if (const auto it = j.find("function"); it != j.end()) {
    if (!it->is_string()) input_error("scenario.function: expected a string");
    sc.function = it->get<std::string>();
  }
  if (const auto it = j.find("failures"); it != j.end()) {
    if (!it->is_array()) input_error("scenario.failures: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      sc.failures.push_back(failure_step_from_json((*it)[i], "scenario.failures[" + std::to_string(i) + "]"));
    }
  }
  const auto mode = j.value("mode", std::string("cumulative"));
  if (mode != "cumulative" && mode != "independent") {
    input_error("scenario.mode: expected 'cumulative' or 'independent'");
  }
  sc.cumulative = mode == "cumulative";
  if (const auto it = j.find("max_paths"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1) input_error("scenario.max_paths: expected a positive integer");
    sc.max_paths = it->get<std::size_t>();
  }
  return out;
}

LoadedScenario load_scenario(const std::string& path) {
  const auto base = std::filesystem::path(path).parent_path().string();
  return scenario_from_json(parse_json(read_file(path)), base.empty() ? "." : base);
}

double round_report_value(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

bool Report::baseline_undefined() const {
  if (steps.empty()) return true;
  const auto& m = steps.front().metrics;
  return !m.empty() && std::none_of(m.begin(), m.end(), [](const MetricValue& v) { return v.value.has_value(); });
}

namespace {

struct StepInputs {
  std::optional<Network> network;
  std::optional<Inventory> inventory;
  std::optional<Portfolio> portfolio;
  std::optional<LayerStack> layers;
};

std::set<ElementId> present_ids(const std::set<ElementId>& wanted, const std::set<ElementId>& universe) {
  std::set<ElementId> out;
  for (const auto& id : wanted) {
    if (universe.contains(id)) out.insert(id);
  }
  return out;
}

StepInputs apply_failures(const ScenarioInputs& intact, const FailureStep& f) {
  StepInputs s{intact.network, intact.inventory, intact.portfolio, intact.layers};
  if (!f.nodes.empty() || !f.edges.empty()) {
    if (!intact.network) throw Error(ErrorCode::schema, "node/edge failures need a network input");
    s.network = remove_failures(*intact.network, f.nodes, f.edges);
  }
  if (!f.elements.empty()) {
    std::set<ElementId> inv_ids, layer_ids;
    if (intact.inventory) {
      for (const auto& e : intact.inventory->elements()) inv_ids.insert(e.id);
    }
    if (intact.layers) {
      for (const auto& l : intact.layers->layers()) {
        for (const auto& e : l.elements) layer_ids.insert(e.id);
      }
    }
    for (const auto& id : f.elements) {
      if (!inv_ids.contains(id) && !layer_ids.contains(id)) {
        throw Error(ErrorCode::unknown_id, "unknown element '" + id + "'");
      }
    }
    if (intact.inventory) s.inventory = intact.inventory->without(present_ids(f.elements, inv_ids));
    if (intact.layers) s.layers = intact.layers->without(present_ids(f.elements, layer_ids));
  }
  if (!f.algorithms.empty()) {
    if (!intact.portfolio) throw Error(ErrorCode::schema, "algorithm failures need a portfolio input");
    s.portfolio = intact.portfolio->without(f.algorithms);
  }
  return s;
}

class StepEvaluator {
 public:
  StepEvaluator(const Scenario& sc, const StepInputs& in, std::size_t step, std::vector<Warning>& warnings)
      : sc_(sc), in_(in), step_(step), warnings_(warnings) {}

  std::vector<MetricValue> run() {
    std::vector<MetricValue> out;
    for (auto kind : sc_.metrics) {
      if (needs_network(kind)) {
        for (const auto& ep : sc_.endpoints) {
          const std::string name = std::string(to_string(kind)) + "[" + endpoint_tag(ep) + "]";
          out.push_back(guarded(name, [&] { return path_metric(kind, ep); }));
        }
      } else {
        out.push_back(guarded(std::string(to_string(kind)), [&] { return scalar_metric(kind); }));
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
  }

 private:
  template <typename Fn>
  MetricValue guarded(const std::string& name, Fn&& fn) {
    MetricValue v{name, std::nullopt, std::nullopt, {}};
    try {
      v.value = fn();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::undefined) throw;
      v.reason = e.what();
      warn(name, "undefined_metric", e.what());
    }
    return v;
  }

  void warn(const std::string& source, const std::string& code, const std::string& message) {
    warnings_.push_back({step_, source, code, message});
  }

  const ValidPathSet& valid_paths(const std::pair<NodeId, NodeId>& ep) {
    const auto it = paths_.find(ep);
    if (it != paths_.end()) return it->second;
    const Network& net = *in_.network;
    const std::string source = "paths[" + endpoint_tag(ep) + "]";
    for (const auto& n : {ep.first, ep.second}) {
      if (!net.has_node(n)) throw Error(ErrorCode::undefined, "endpoint '" + n + "' is not in the network");
    }
    const auto search = enumerate_simple_paths(net, ep.first, ep.second, sc_.config.max_hops, sc_.max_paths);
    if (search.hop_limited) {
      warn(source, "hop_cap_reached",
           "path search was cut at max_hops = " + std::to_string(sc_.config.max_hops));
    }
    auto vps = filter_qos(search.paths, sc_.config.lambda_max, sc_.config.beta_min);
    if (vps.empty()) warn(source, "no_valid_paths", "no QoS-valid path between " + ep.first + " and " + ep.second);
    return paths_.emplace(ep, std::move(vps)).first->second;
  }

  double path_metric(MetricKind kind, const std::pair<NodeId, NodeId>& ep) {
    const auto& vps = valid_paths(ep);
    if (kind == MetricKind::dwpr) return dwpr(vps, sc_.config.theta);
    return dwpr_star(vps, sc_.config.log_base);
  }

  double scalar_metric(MetricKind kind) {
    const auto& c = sc_.config;
    switch (kind) {
      case MetricKind::fss:
        return fss(capable(), c.delta, c.element_distance);
      case MetricKind::fss_star:
        return fss_star(capable(), c.delta);
      case MetricKind::degeneracy_score:
        return static_cast<double>(degeneracy_score(*in_.inventory, *sc_.function, c.element_distance, c.delta));
      case MetricKind::arq:
        return arq(*in_.portfolio, c.epsilon, c.delta, c.structure_distance);
      case MetricKind::arq_star:
        return arq_star(*in_.portfolio, c.sigma);
      case MetricKind::mldi:
        return mldi(*in_.layers, c.delta);
      case MetricKind::mldi_star:
        return mldi_star(*in_.layers, c.gamma_weight, c.log_base);
      default:
        break;
    }
    throw Error(ErrorCode::domain, "metric needs endpoints");
  }

  std::vector<Element> capable() {
    if (!in_.inventory->has_function(*sc_.function)) {
      throw Error(ErrorCode::unknown_id, "unknown function '" + *sc_.function + "'");
    }
    return capable_set(in_.inventory->elements(), *sc_.function);
  }

  const Scenario& sc_;
  const StepInputs& in_;
  std::size_t step_;
  std::vector<Warning>& warnings_;
  std::map<std::pair<NodeId, NodeId>, ValidPathSet> paths_;
};

void check_requirements(const ScenarioInputs& inputs, const Scenario& sc) {
  if (sc.metrics.empty()) throw Error(ErrorCode::schema, "scenario requests no metrics");
  for (auto k : sc.metrics) {
    const std::string name(to_string(k));
    if (needs_network(k)) {
      if (!inputs.network) throw Error(ErrorCode::schema, name + " needs a network input");
      if (sc.endpoints.empty()) throw Error(ErrorCode::schema, name + " needs at least one endpoint pair");
      for (const auto& ep : sc.endpoints) {
        for (const auto& n : {ep.first, ep.second}) {
          if (!inputs.network->has_node(n)) throw Error(ErrorCode::unknown_id, "unknown endpoint '" + n + "'");
        }
        if (ep.first == ep.second) throw Error(ErrorCode::domain, "endpoint pair must name two distinct nodes");
      }
    }
    if (needs_inventory(k)) {
      if (!inputs.inventory) throw Error(ErrorCode::schema, name + " needs an inventory input");
      if (!sc.function) throw Error(ErrorCode::schema, name + " needs a 'function'");
      if (!inputs.inventory->has_function(*sc.function)) {
        throw Error(ErrorCode::unknown_id, "unknown function '" + *sc.function + "'");
      }
    }
    if (needs_portfolio(k) && !inputs.portfolio) throw Error(ErrorCode::schema, name + " needs a portfolio input");
    if (needs_layers(k) && !inputs.layers) throw Error(ErrorCode::schema, name + " needs a layer-stack input");
  }
}

}  // namespace

Report run_scenario(const ScenarioInputs& inputs, const Scenario& scenario) {
  scenario.config.validate();
  check_requirements(inputs, scenario);

  Report r;
  r.scenario = scenario.name;
  r.cumulative = scenario.cumulative;
  r.config = scenario.config;

  std::vector<FailureStep> applied{FailureStep{"baseline", {}, {}, {}, {}}};
  for (std::size_t i = 0; i < scenario.failures.size(); ++i) {
    FailureStep step = scenario.cumulative ? applied.back().merged_with(scenario.failures[i]) : scenario.failures[i];
    if (step.label.empty()) step.label = "step " + std::to_string(i + 1);
    applied.push_back(std::move(step));
  }

  for (std::size_t s = 0; s < applied.size(); ++s) {
    const StepInputs in = apply_failures(inputs, applied[s]);
    StepResult res;
    res.step = s;
    res.label = applied[s].label;
    res.applied = applied[s];
    res.metrics = StepEvaluator(scenario, in, s, r.warnings).run();
    r.steps.push_back(std::move(res));
  }

  const auto& base = r.steps.front().metrics;
  for (auto& step : r.steps) {
    for (std::size_t k = 0; k < step.metrics.size(); ++k) {
      auto& v = step.metrics[k];
      if (v.value && base[k].value) v.delta = round_report_value(*v.value - *base[k].value);
    }
  }
  for (auto& step : r.steps) {
    for (auto& v : step.metrics) {
      if (v.value) v.value = round_report_value(*v.value);
    }
  }
  return r;
}

Json to_json(const Report& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    Json metrics = Json::object();
    Json deltas = Json::object();
    Json reasons = Json::object();
    for (const auto& m : s.metrics) {
      metrics[m.name] = m.value ? Json(*m.value) : Json(nullptr);
      deltas[m.name] = m.delta ? Json(*m.delta) : Json(nullptr);
      if (!m.value) reasons[m.name] = m.reason;
    }
    steps.push_back({{"step", s.step},
                     {"label", s.label},
                     {"failures", to_json(s.applied)},
                     {"metrics", std::move(metrics)},
                     {"deltas", std::move(deltas)},
                     {"reasons", std::move(reasons)}});
  }
  Json warnings = Json::array();
  for (const auto& w : report.warnings) {
    warnings.push_back({{"step", w.step}, {"source", w.source}, {"code", w.code}, {"message", w.message}});
  }
  return {{"tool", report.tool},
          {"version", report.version},
          {"scenario", report.scenario},
          {"mode", report.cumulative ? "cumulative" : "independent"},
          {"config", to_json(report.config)},
          {"steps", std::move(steps)},
          {"warnings", std::move(warnings)}};
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.scenario = j.at("scenario").get<std::string>();
    r.cumulative = j.at("mode").get<std::string>() == "cumulative";
    r.config = config_from_json(j.at("config"));
    for (const auto& js : j.at("steps")) {
      StepResult s;
      s.step = js.at("step").get<std::size_t>();
      s.label = js.at("label").get<std::string>();
      s.applied = failure_step_from_json(js.at("failures"), "report.steps.failures");
      s.applied.label = s.label;
      const auto& deltas = js.at("deltas");
      const auto& reasons = js.at("reasons");
      for (const auto& [name, value] : js.at("metrics").items()) {
        MetricValue m{name, std::nullopt, std::nullopt, {}};
        if (!value.is_null()) m.value = value.get<double>();
        if (deltas.contains(name) && !deltas[name].is_null()) m.delta = deltas[name].get<double>();
        if (reasons.contains(name)) m.reason = reasons[name].get<std::string>();
        s.metrics.push_back(std::move(m));
      }
      r.steps.push_back(std::move(s));
    }
    for (const auto& jw : j.at("warnings")) {
      r.warnings.push_back({jw.at("step").get<std::size_t>(), jw.at("source").get<std::string>(),
                            jw.at("code").get<std::string>(), jw.at("message").get<std::string>()});
    }
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::schema, std::string("report: ") + e.what());
  }
}

std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(report).dump(2) + "\n";
  std::ostringstream out;
  out << "step,label,metric,value,delta\n";
  for (const auto& s : report.steps) {
    for (const auto& m : s.metrics) {
      out << s.step << ',' << csv_field(s.label) << ',' << csv_field(m.name) << ','
          << (m.value ? format_number(*m.value) : "") << ',' << (m.delta ? format_number(*m.delta) : "")
          << '\n';
    }
  }
  return out.str();
}

}  // namespace degenet
