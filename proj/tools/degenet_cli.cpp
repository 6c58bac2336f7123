// degenet: command-line front end for the degeneracy / robustness metrics.
//
//   degenet validate <doc>
//   degenet paths --net N --src s --dst d [--max-hops H] [--lambda-max L] [--beta-min B]
//   degenet metric dwpr|fss|arq|mldi|degeneracy ...
//   degenet scenario run --file S.json --out report.json [--csv report.csv]
//
// Exit codes: 0 ok, 1 input error, 2 computation undefined, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "degenet/error.hpp"
#include "degenet/io.hpp"
#include "degenet/path_metrics.hpp"
#include "degenet/report_json.hpp"
#include "degenet/scenario.hpp"

namespace {

using namespace degenet;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUndefined = 2;
constexpr int kInternal = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::undefined:
    case ErrorCode::limit_exceeded:
    case ErrorCode::support:
      return kUndefined;
    default:
      return kInputError;
  }
}

std::size_t max_paths_from_env() {
  const char* raw = std::getenv("DEGENET_MAX_PATHS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxPaths;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw Error(ErrorCode::domain, "DEGENET_MAX_PATHS must be a positive integer");
  return static_cast<std::size_t>(v);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::schema, "cannot write '" + path + "'");
  out << text;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Raw flag values; converted to a checked MetricConfig on use.
struct ConfigFlags {
  MetricConfig config;
  std::string log_base = "2";
  std::string element_distance = "euclidean";
  std::string structure_distance = "cosine";

  void attach(CLI::App& app) {
    app.add_option("--delta", config.delta, "structural distinctness threshold");
    app.add_option("--epsilon", config.epsilon, "performance similarity threshold");
    app.add_option("--theta", config.theta, "path quality threshold");
    app.add_option("--lambda-max", config.lambda_max, "total latency cap (ms)");
    app.add_option("--beta-min", config.beta_min, "bottleneck bandwidth floor (Mbit/s)");
    app.add_option("--sigma", config.sigma, "Gaussian kernel width");
    app.add_option("--gamma", config.gamma_weight, "weight of the cross-layer entropy term");
    app.add_option("--log-base", log_base, "2 or e")->check(CLI::IsMember({"2", "e"}));
    app.add_option("--max-hops", config.max_hops, "path enumeration hop cap");
    app.add_option("--distance", element_distance, "element embedding distance");
    app.add_option("--structure-distance", structure_distance, "algorithm structure distance");
  }

  MetricConfig resolve() const {
    MetricConfig c = config;
    c.log_base = parse_log_base(log_base);
    c.element_distance = parse_distance_kind(element_distance);
    c.structure_distance = parse_distance_kind(structure_distance);
    return MetricConfig::checked(c);
  }
};

Json summary(const Document& doc) {
  Json out = {{"valid", true}, {"kind", std::string(document_kind(doc))}};
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Network>) {
          out["nodes"] = d.node_count();
          out["edges"] = d.edge_count();
          out["modes"] = d.modes();
        } else if constexpr (std::is_same_v<T, Inventory>) {
          out["functions"] = d.functions().size();
          out["elements"] = d.elements().size();
          out["embedding_dim"] = d.embedding_dim();
        } else if constexpr (std::is_same_v<T, Portfolio>) {
          out["algorithms"] = d.size();
        } else {
          out["functions"] = d.function_count();
          out["layers"] = d.layers().size();
        }
      },
      doc);
  return out;
}

int cmd_validate(const std::string& path) {
  try {
    print(summary(parse_document(read_file(path))));
    return kOk;
  } catch (const Error& e) {
    print({{"valid", false}, {"reason", std::string(e.reason())}, {"message", e.what()}});
    return kInputError;
  }
}

int cmd_paths(const std::string& net_path, const std::string& src, const std::string& dst,
              const ConfigFlags& flags) {
  const auto config = flags.resolve();
  const Network net = network_from_json(parse_json(read_file(net_path)));
  const auto search = enumerate_simple_paths(net, src, dst, config.max_hops, max_paths_from_env());
  const auto vps = filter_qos(search.paths, config.lambda_max, config.beta_min);
  Json paths = Json::array();
  std::size_t v = 0;
  for (const auto& p : search.paths) {
    Json jp = to_json(p);
    jp["quality"] = round_report_value(path_quality(p));
    const bool valid = v < vps.size() && vps.paths[v] == p;
    jp["valid"] = valid;
    if (valid) {
      jp["probability"] = round_report_value((*vps.distribution)[v]);
      ++v;
    }
    paths.push_back(std::move(jp));
  }
  Json out = {{"src", src},
              {"dst", dst},
              {"max_hops", config.max_hops},
              {"hop_limited", search.hop_limited},
              {"path_count", search.paths.size()},
              {"valid_count", vps.size()},
              {"paths", std::move(paths)}};
  if (search.hop_limited) std::cerr << "warning: max_hops = " << config.max_hops << " cut the path search\n";
  print(out);
  return kOk;
}

int cmd_metric_dwpr(const std::string& net_path, const std::string& src, const std::string& dst,
                    const ConfigFlags& flags) {
  const auto config = flags.resolve();
  const Network net = network_from_json(parse_json(read_file(net_path)));
  const auto search = enumerate_simple_paths(net, src, dst, config.max_hops, max_paths_from_env());
  const auto vps = filter_qos(search.paths, config.lambda_max, config.beta_min);
  const auto report = dwpr_report(vps, config.theta, config.log_base);
  Json out = to_json(report);
  out["hop_limited"] = search.hop_limited;
  print(out);
  return report.no_valid_paths ? kUndefined : kOk;
}

int cmd_metric_fss(const std::string& inv_path, const std::string& function, const ConfigFlags& flags) {
  const auto config = flags.resolve();
  const Inventory inv = inventory_from_json(parse_json(read_file(inv_path)));
  if (!inv.has_function(function)) throw Error(ErrorCode::unknown_id, "unknown function '" + function + "'");
  const auto report = fss_report(capable_set(inv.elements(), function), config.delta, config.element_distance);
  Json out = to_json(report);
  out["function"] = function;
  out["degeneracy_score"] = degeneracy_score(inv, function, config.element_distance, config.delta);
  print(out);
  return report.fss ? kOk : kUndefined;
}

int cmd_metric_degeneracy(const std::string& inv_path, const std::string& function, const ConfigFlags& flags) {
  const auto config = flags.resolve();
  const Inventory inv = inventory_from_json(parse_json(read_file(inv_path)));
  print({{"function", function},
         {"degeneracy_score", degeneracy_score(inv, function, config.element_distance, config.delta)}});
  return kOk;
}

int cmd_metric_arq(const std::string& portfolio_path, const ConfigFlags& flags) {
  const auto config = flags.resolve();
  const Portfolio portfolio = portfolio_from_json(parse_json(read_file(portfolio_path)));
  const auto report = arq_report(portfolio, config.epsilon, config.delta, config.sigma, config.structure_distance);
  print(to_json(report));
  return report.arq ? kOk : kUndefined;
}

int cmd_metric_mldi(const std::string& layers_path, const ConfigFlags& flags) {
  const auto config = flags.resolve();
  const LayerStack stack = layer_stack_from_json(parse_json(read_file(layers_path)));
  const auto report = mldi_report(stack, config.delta, config.gamma_weight, config.log_base);
  print(to_json(report));
  return report.mldi_star ? kOk : kUndefined;
}

int cmd_scenario_run(const std::string& file, const std::string& out_path, const std::string& csv_path,
                     bool independent) {
  auto loaded = load_scenario(file);
  const std::size_t env_cap = max_paths_from_env();
  if (loaded.scenario.max_paths == kDefaultMaxPaths) loaded.scenario.max_paths = env_cap;
  if (independent) loaded.scenario.cumulative = false;
  const Report report = run_scenario(loaded.inputs, loaded.scenario);
  write_file(out_path, emit_report(report, ReportFormat::json));
  if (!csv_path.empty()) write_file(csv_path, emit_report(report, ReportFormat::csv));
  for (const auto& w : report.warnings) {
    std::cerr << "warning: step " << w.step << " " << w.source << ": " << w.code << " (" << w.message << ")\n";
  }
  return report.baseline_undefined() ? kUndefined : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degeneracy-based robustness metrics for multi-modal networks"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string doc_path;
  auto* validate = app.add_subcommand("validate", "parse and validate an input document");
  validate->add_option("doc", doc_path, "document path")->required();

  std::string net_path, src, dst;
  ConfigFlags path_flags;
  auto* paths = app.add_subcommand("paths", "enumerate simple paths and apply QoS validity");
  paths->add_option("--net", net_path, "network document")->required();
  paths->add_option("--src", src, "source node")->required();
  paths->add_option("--dst", dst, "destination node")->required();
  path_flags.attach(*paths);

  auto* metric = app.add_subcommand("metric", "compute one metric family");
  metric->require_subcommand(1);
  ConfigFlags metric_flags;

  auto* m_dwpr = metric->add_subcommand("dwpr", "DWPR, DWPR* and mode entropy for one endpoint pair");
  m_dwpr->add_option("--net", net_path, "network document")->required();
  m_dwpr->add_option("--src", src, "source node")->required();
  m_dwpr->add_option("--dst", dst, "destination node")->required();
  metric_flags.attach(*m_dwpr);

  std::string inv_path, function;
  auto* m_fss = metric->add_subcommand("fss", "FSS and FSS* for one function");
  m_fss->add_option("--inventory", inv_path, "element inventory document")->required();
  m_fss->add_option("--function", function, "function id")->required();
  metric_flags.attach(*m_fss);

  auto* m_deg = metric->add_subcommand("degeneracy", "degeneracy score for one function");
  m_deg->add_option("--inventory", inv_path, "element inventory document")->required();
  m_deg->add_option("--function", function, "function id")->required();
  metric_flags.attach(*m_deg);

  std::string portfolio_path;
  auto* m_arq = metric->add_subcommand("arq", "ARQ and ARQ* over an algorithm portfolio");
  m_arq->add_option("--portfolio", portfolio_path, "portfolio document")->required();
  metric_flags.attach(*m_arq);

  std::string layers_path;
  auto* m_mldi = metric->add_subcommand("mldi", "MLDI and MLDI* over a layer stack");
  m_mldi->add_option("--layers", layers_path, "layer-stack document")->required();
  metric_flags.attach(*m_mldi);

  auto* scenario = app.add_subcommand("scenario", "failure-injection scenarios");
  scenario->require_subcommand(1);
  std::string scenario_file, out_path, csv_path;
  bool independent = false;
  auto* run = scenario->add_subcommand("run", "run a scenario file");
  run->add_option("--file", scenario_file, "scenario document")->required();
  run->add_option("--out", out_path, "JSON report path")->required();
  run->add_option("--csv", csv_path, "optional CSV report path");
  run->add_flag("--independent", independent, "apply each failure step to the intact system");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(doc_path);
    if (*paths) return cmd_paths(net_path, src, dst, path_flags);
    if (*m_dwpr) return cmd_metric_dwpr(net_path, src, dst, metric_flags);
    if (*m_fss) return cmd_metric_fss(inv_path, function, metric_flags);
    if (*m_deg) return cmd_metric_degeneracy(inv_path, function, metric_flags);
    if (*m_arq) return cmd_metric_arq(portfolio_path, metric_flags);
    if (*m_mldi) return cmd_metric_mldi(layers_path, metric_flags);
    if (*run) return cmd_scenario_run(scenario_file, out_path, csv_path, independent);
  } catch (const Error& e) {
    std::cerr << "error [" << e.reason() << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
