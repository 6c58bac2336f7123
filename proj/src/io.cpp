#include "degenet/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "degenet/error.hpp"

namespace degenet {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::schema, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

double as_number(const Json& j, const std::string& where) {
  if (!j.is_number()) schema_error(where, "expected a number");
  return j.get<double>();
}

// Numbers, plus the strings "inf"/"-inf" for unbounded thresholds.
double as_extended_number(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    if (s == "-inf" || s == "-infinity") return -std::numeric_limits<double>::infinity();
  }
  return as_number(j, where);
}

Json extended_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  return j;
}

std::vector<double> as_vector(const Json& j, const std::string& where) {
  std::vector<double> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i) {
    out.push_back(as_number(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> as_strings(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i) {
    out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

std::string_view document_kind(const Document& doc) noexcept {
  switch (doc.index()) {
    case 0: return "network";
    case 1: return "inventory";
    case 2: return "portfolio";
    default: return "layer_stack";
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::syntax, "JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::schema, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Network network_from_json(const Json& j) {
  const std::string where = "network";
  std::vector<NodeId> nodes;
  const Json& jn = as_array(field(j, "nodes", where), "network.nodes");
  for (std::size_t i = 0; i < jn.size(); ++i) {
    const std::string w = "network.nodes[" + std::to_string(i) + "]";
    nodes.push_back(as_string(field(jn[i], "id", w), w + ".id"));
  }
  std::vector<Edge> edges;
  const Json& je = as_array(field(j, "edges", where), "network.edges");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string w = "network.edges[" + std::to_string(i) + "]";
    Edge e;
    e.u = as_string(field(je[i], "u", w), w + ".u");
    e.v = as_string(field(je[i], "v", w), w + ".v");
    e.mode = as_string(field(je[i], "mode", w), w + ".mode");
    e.latency_ms = as_number(field(je[i], "latency_ms", w), w + ".latency_ms");
    e.bandwidth_mbps = as_number(field(je[i], "bandwidth_mbps", w), w + ".bandwidth_mbps");
    edges.push_back(std::move(e));
  }
  std::map<std::string, std::string> metadata;
  if (const auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) schema_error("network.metadata", "expected an object");
    for (const auto& [k, v] : it->items()) metadata[k] = as_string(v, "network.metadata." + k);
  }
  return Network(std::move(nodes), std::move(edges), std::move(metadata));
}

Inventory inventory_from_json(const Json& j) {
  auto functions = as_strings(field(j, "functions", "inventory"), "inventory.functions");
  std::vector<Element> elements;
  const Json& je = as_array(field(j, "elements", "inventory"), "inventory.elements");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string w = "inventory.elements[" + std::to_string(i) + "]";
    Element e;
    e.id = as_string(field(je[i], "id", w), w + ".id");
    for (auto& f : as_strings(field(je[i], "capabilities", w), w + ".capabilities")) {
      e.capabilities.insert(std::move(f));
    }
    e.embedding = as_vector(field(je[i], "embedding", w), w + ".embedding");
    e.capacity = as_number(field(je[i], "capacity", w), w + ".capacity");
    e.load = as_number(field(je[i], "load", w), w + ".load");
    elements.push_back(std::move(e));
  }
  return Inventory(std::move(functions), std::move(elements));
}

Portfolio portfolio_from_json(const Json& j) {
  std::vector<AlgorithmProfile> algorithms;
  const Json& ja = as_array(field(j, "algorithms", "portfolio"), "portfolio.algorithms");
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const std::string w = "portfolio.algorithms[" + std::to_string(i) + "]";
    AlgorithmProfile a;
    a.id = as_string(field(ja[i], "id", w), w + ".id");
    a.performance = as_vector(field(ja[i], "performance", w), w + ".performance");
    a.structure = as_vector(field(ja[i], "structure", w), w + ".structure");
    algorithms.push_back(std::move(a));
  }
  return Portfolio(std::move(algorithms));
}

LayerStack layer_stack_from_json(const Json& j) {
  auto functions = as_strings(field(j, "functions", "layer_stack"), "layer_stack.functions");
  std::vector<Layer> layers;
  const Json& jl = as_array(field(j, "layers", "layer_stack"), "layer_stack.layers");
  for (std::size_t i = 0; i < jl.size(); ++i) {
    const std::string w = "layer_stack.layers[" + std::to_string(i) + "]";
    Layer layer;
    layer.id = as_string(field(jl[i], "id", w), w + ".id");
    const Json& je = as_array(field(jl[i], "elements", w), w + ".elements");
    for (std::size_t k = 0; k < je.size(); ++k) {
      const std::string we = w + ".elements[" + std::to_string(k) + "]";
      LayerElement e;
      e.id = as_string(field(je[k], "id", we), we + ".id");
      const Json& bits = as_array(field(je[k], "f", we), we + ".f");
      for (std::size_t b = 0; b < bits.size(); ++b) {
        if (!bits[b].is_number_integer() || (bits[b] != 0 && bits[b] != 1)) {
          throw Error(ErrorCode::invariant, we + ".f[" + std::to_string(b) + "]: expected 0 or 1");
        }
        e.functions.push_back(static_cast<std::uint8_t>(bits[b].get<int>()));
      }
      if (const auto it = je[k].find("embedding"); it != je[k].end()) {
        e.embedding = as_vector(*it, we + ".embedding");
      }
      layer.elements.push_back(std::move(e));
    }
    layers.push_back(std::move(layer));
  }
  return LayerStack(std::move(functions), std::move(layers));
}

Document document_from_json(const Json& j) {
  if (!j.is_object()) schema_error("document", "top level must be an object");
  if (j.contains("nodes") || j.contains("edges")) return network_from_json(j);
  if (j.contains("elements")) return inventory_from_json(j);
  if (j.contains("algorithms")) return portfolio_from_json(j);
  if (j.contains("layers")) return layer_stack_from_json(j);
  schema_error("document", "cannot tell the document kind (expected nodes/edges, elements, algorithms or layers)");
}

Document parse_document(std::string_view text) { return document_from_json(parse_json(text)); }

Json to_json(const Network& net) {
  Json nodes = Json::array();
  for (const auto& n : net.nodes()) nodes.push_back({{"id", n}});
  Json edges = Json::array();
  for (const auto& e : net.edges()) {
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"mode", e.mode},
                     {"latency_ms", e.latency_ms},
                     {"bandwidth_mbps", e.bandwidth_mbps}});
  }
  Json out = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  if (!net.metadata().empty()) out["metadata"] = net.metadata();
  return out;
}

Json to_json(const Inventory& inv) {
  Json elements = Json::array();
  for (const auto& e : inv.elements()) {
    elements.push_back({{"id", e.id},
                        {"capabilities", e.capabilities},
                        {"embedding", e.embedding},
                        {"capacity", e.capacity},
                        {"load", e.load}});
  }
  return {{"functions", inv.functions()}, {"elements", std::move(elements)}};
}

Json to_json(const Portfolio& portfolio) {
  Json algorithms = Json::array();
  for (const auto& a : portfolio.algorithms()) {
    algorithms.push_back({{"id", a.id}, {"performance", a.performance}, {"structure", a.structure}});
  }
  return {{"algorithms", std::move(algorithms)}};
}

Json to_json(const LayerStack& stack) {
  Json layers = Json::array();
  for (const auto& layer : stack.layers()) {
    Json elements = Json::array();
    for (const auto& e : layer.elements) {
      Json bits = Json::array();
      for (auto b : e.functions) bits.push_back(static_cast<int>(b));
      Json je = {{"id", e.id}, {"f", std::move(bits)}};
      if (e.embedding) je["embedding"] = *e.embedding;
      elements.push_back(std::move(je));
    }
    layers.push_back({{"id", layer.id}, {"elements", std::move(elements)}});
  }
  return {{"functions", stack.functions()}, {"layers", std::move(layers)}};
}

Json to_json(const Document& doc) {
  return std::visit([](const auto& d) { return to_json(d); }, doc);
}

std::string emit_document(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

MetricConfig config_from_json(const Json& j) {
  MetricConfig c;
  if (j.is_null()) return c;
  if (!j.is_object()) schema_error("config", "expected an object");
  for (const auto& [key, value] : j.items()) {
    const std::string w = "config." + key;
    if (key == "delta") c.delta = as_number(value, w);
    else if (key == "epsilon") c.epsilon = as_number(value, w);
    else if (key == "theta") c.theta = as_extended_number(value, w);
    else if (key == "lambda_max") c.lambda_max = as_extended_number(value, w);
    else if (key == "beta_min") c.beta_min = as_number(value, w);
    else if (key == "sigma") c.sigma = as_number(value, w);
    else if (key == "gamma_weight" || key == "gamma") c.gamma_weight = as_number(value, w);
    else if (key == "log_base") {
      c.log_base = parse_log_base(value.is_number() ? std::to_string(value.get<int>()) : as_string(value, w));
    } else if (key == "max_hops") {
      if (!value.is_number_integer() || value.get<long long>() < 1) schema_error(w, "expected a positive integer");
      c.max_hops = value.get<std::size_t>();
    } else if (key == "element_distance") c.element_distance = parse_distance_kind(as_string(value, w));
    else if (key == "structure_distance") c.structure_distance = parse_distance_kind(as_string(value, w));
    else schema_error(w, "unknown config field");
  }
  return MetricConfig::checked(c);
}

Json to_json(const MetricConfig& c) {
  return {{"delta", c.delta},
          {"epsilon", c.epsilon},
          {"theta", extended_number(c.theta)},
          {"lambda_max", extended_number(c.lambda_max)},
          {"beta_min", c.beta_min},
          {"sigma", c.sigma},
          {"gamma_weight", c.gamma_weight},
          {"log_base", std::string(to_string(c.log_base))},
          {"max_hops", c.max_hops},
          {"element_distance", std::string(to_string(c.element_distance))},
          {"structure_distance", std::string(to_string(c.structure_distance))}};
}

EdgeKey edge_key_from_json(const Json& j) {
  return EdgeKey(as_string(field(j, "u", "edge key"), "edge key.u"),
                 as_string(field(j, "v", "edge key"), "edge key.v"),
                 as_string(field(j, "mode", "edge key"), "edge key.mode"));
}

Json to_json(const EdgeKey& key) { return {{"u", key.u}, {"v", key.v}, {"mode", key.mode}}; }

}  // namespace degenet
