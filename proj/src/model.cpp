#include "degenet/model.hpp"

#include <algorithm>
#include <cmath>

#include "degenet/config.hpp"
#include "degenet/error.hpp"

namespace degenet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::schema: return "schema";
    case ErrorCode::invariant: return "invariant";
    case ErrorCode::unknown_id: return "unknown_id";
    case ErrorCode::domain: return "domain";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::support: return "support";
    case ErrorCode::undefined: return "undefined";
    case ErrorCode::limit_exceeded: return "limit_exceeded";
  }
  return "unknown";
}

EdgeKey::EdgeKey(NodeId a, NodeId b, ModeId m) : mode(std::move(m)) {
  if (b < a) std::swap(a, b);
  u = std::move(a);
  v = std::move(b);
}

Network::Network(std::vector<NodeId> nodes, std::vector<Edge> edges,
                 std::map<std::string, std::string> metadata)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), metadata_(std::move(metadata)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i], i).second) {
      throw Error(ErrorCode::invariant, "duplicate node id '" + nodes_[i] + "'");
    }
  }
  adjacency_.resize(nodes_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    const std::string where = "edge " + std::to_string(k) + " (" + e.u + "-" + e.v + ")";
    if (e.u == e.v) throw Error(ErrorCode::invariant, where + ": self-loop");
    if (!std::isfinite(e.latency_ms) || e.latency_ms < 0.0) {
      throw Error(ErrorCode::invariant, where + ": latency must be finite and >= 0");
    }
    if (!std::isfinite(e.bandwidth_mbps) || e.bandwidth_mbps <= 0.0) {
      throw Error(ErrorCode::invariant, where + ": bandwidth must be finite and > 0");
    }
    const auto iu = index_.find(e.u);
    const auto iv = index_.find(e.v);
    if (iu == index_.end() || iv == index_.end()) {
      throw Error(ErrorCode::invariant, where + ": endpoint is not a node");
    }
    if (!keys_.insert(EdgeKey::of(e)).second) {
      throw Error(ErrorCode::invariant, where + ": parallel edge with the same mode '" + e.mode + "'");
    }
    adjacency_[iu->second].push_back({iv->second, k});
    adjacency_[iv->second].push_back({iu->second, k});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [this](const Incidence& a, const Incidence& b) {
      const auto& na = nodes_[a.neighbor];
      const auto& nb = nodes_[b.neighbor];
      if (na != nb) return na < nb;
      return edges_[a.edge].mode < edges_[b.edge].mode;
    });
  }
}

std::optional<std::size_t> Network::index_of(const NodeId& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Network::has_edge(const EdgeKey& key) const { return keys_.contains(key); }

std::vector<ModeId> Network::modes() const {
  std::set<ModeId> all;
  for (const auto& e : edges_) all.insert(e.mode);
  return {all.begin(), all.end()};
}

Network remove_failures(const Network& net, const std::set<NodeId>& failed_nodes,
                        const std::set<EdgeKey>& failed_edges) {
  for (const auto& n : failed_nodes) {
    if (!net.has_node(n)) throw Error(ErrorCode::unknown_id, "unknown node '" + n + "'");
  }
  for (const auto& k : failed_edges) {
    if (!net.has_edge(k)) {
      throw Error(ErrorCode::unknown_id,
                  "unknown edge (" + k.u + ", " + k.v + ", " + k.mode + ")");
    }
  }
  std::vector<NodeId> nodes;
  for (const auto& n : net.nodes()) {
    if (!failed_nodes.contains(n)) nodes.push_back(n);
  }
  std::vector<Edge> edges;
  for (const auto& e : net.edges()) {
    if (failed_nodes.contains(e.u) || failed_nodes.contains(e.v)) continue;
    if (failed_edges.contains(EdgeKey::of(e))) continue;
    edges.push_back(e);
  }
  return Network(std::move(nodes), std::move(edges), net.metadata());
}

int capability(const Element& e, const FunctionId& f) { return e.capabilities.contains(f) ? 1 : 0; }

namespace {

void require_finite(const std::vector<double>& v, const std::string& what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(ErrorCode::invariant, what + " contains a non-finite value");
  }
}

}  // namespace

Inventory::Inventory(std::vector<FunctionId> functions, std::vector<Element> elements)
    : functions_(std::move(functions)), elements_(std::move(elements)) {
  std::set<FunctionId> universe;
  for (const auto& f : functions_) {
    if (!universe.insert(f).second) throw Error(ErrorCode::invariant, "duplicate function '" + f + "'");
  }
  std::set<ElementId> seen;
  for (const auto& e : elements_) {
    const std::string where = "element '" + e.id + "'";
    if (!seen.insert(e.id).second) throw Error(ErrorCode::invariant, "duplicate " + where);
    if (e.embedding.size() != elements_.front().embedding.size()) {
      throw Error(ErrorCode::invariant, where + ": embedding dimension differs from '" +
                                            elements_.front().id + "'");
    }
    require_finite(e.embedding, where + " embedding");
    if (!std::isfinite(e.capacity) || e.capacity < 0.0) {
      throw Error(ErrorCode::invariant, where + ": capacity must be >= 0");
    }
    if (!std::isfinite(e.load) || e.load < 0.0) {
      throw Error(ErrorCode::invariant, where + ": load must be >= 0");
    }
    for (const auto& f : e.capabilities) {
      if (!universe.contains(f)) {
        throw Error(ErrorCode::invariant, where + ": capability '" + f + "' not in functions");
      }
    }
  }
}

bool Inventory::has_function(const FunctionId& f) const {
  return std::find(functions_.begin(), functions_.end(), f) != functions_.end();
}

std::size_t Inventory::embedding_dim() const noexcept {
  return elements_.empty() ? 0 : elements_.front().embedding.size();
}

Inventory Inventory::without(const std::set<ElementId>& ids) const {
  std::vector<Element> kept;
  std::size_t removed = 0;
  for (const auto& e : elements_) {
    if (ids.contains(e.id)) {
      ++removed;
    } else {
      kept.push_back(e);
    }
  }
  if (removed != ids.size()) {
    for (const auto& id : ids) {
      if (std::none_of(elements_.begin(), elements_.end(),
                       [&](const Element& e) { return e.id == id; })) {
        throw Error(ErrorCode::unknown_id, "unknown element '" + id + "'");
      }
    }
  }
  return Inventory(functions_, std::move(kept));
}

Portfolio::Portfolio(std::vector<AlgorithmProfile> algorithms) : algorithms_(std::move(algorithms)) {
  std::set<AlgorithmId> seen;
  for (const auto& a : algorithms_) {
    const std::string where = "algorithm '" + a.id + "'";
    if (!seen.insert(a.id).second) throw Error(ErrorCode::invariant, "duplicate " + where);
    if (a.performance.size() != algorithms_.front().performance.size()) {
      throw Error(ErrorCode::invariant, where + ": performance dimension differs");
    }
    if (a.structure.size() != algorithms_.front().structure.size()) {
      throw Error(ErrorCode::invariant, where + ": structure dimension differs");
    }
    require_finite(a.performance, where + " performance");
    require_finite(a.structure, where + " structure");
    if (std::all_of(a.structure.begin(), a.structure.end(), [](double x) { return x == 0.0; })) {
      throw Error(ErrorCode::invariant, where + ": structure vector is all zero");
    }
  }
}

Portfolio Portfolio::without(const std::set<AlgorithmId>& ids) const {
  std::vector<AlgorithmProfile> kept;
  std::set<AlgorithmId> found;
  for (const auto& a : algorithms_) {
    if (ids.contains(a.id)) {
      found.insert(a.id);
    } else {
      kept.push_back(a);
    }
  }
  for (const auto& id : ids) {
    if (!found.contains(id)) throw Error(ErrorCode::unknown_id, "unknown algorithm '" + id + "'");
  }
  return Portfolio(std::move(kept));
}

bool Layer::has_embeddings() const {
  return !elements.empty() && std::all_of(elements.begin(), elements.end(),
                                          [](const LayerElement& e) { return e.embedding.has_value(); });
}

LayerStack::LayerStack(std::vector<FunctionId> functions, std::vector<Layer> layers)
    : functions_(std::move(functions)), layers_(std::move(layers)) {
  std::set<FunctionId> universe(functions_.begin(), functions_.end());
  if (universe.size() != functions_.size()) throw Error(ErrorCode::invariant, "duplicate function id");
  std::set<LayerId> layer_ids;
  for (const auto& layer : layers_) {
    const std::string where = "layer '" + layer.id + "'";
    if (!layer_ids.insert(layer.id).second) throw Error(ErrorCode::invariant, "duplicate " + where);
    if (layer.elements.empty()) throw Error(ErrorCode::invariant, where + " is empty");
    std::set<ElementId> ids;
    std::size_t with_embedding = 0;
    for (const auto& e : layer.elements) {
      if (!ids.insert(e.id).second) {
        throw Error(ErrorCode::invariant, where + ": duplicate element '" + e.id + "'");
      }
      if (e.functions.size() != functions_.size()) {
        throw Error(ErrorCode::invariant,
                    where + ": element '" + e.id + "' function vector length != " +
                        std::to_string(functions_.size()));
      }
      for (auto bit : e.functions) {
        if (bit > 1) throw Error(ErrorCode::invariant, where + ": function vectors must be 0/1");
      }
      if (e.embedding) {
        ++with_embedding;
        require_finite(*e.embedding, where + " embedding");
        if (e.embedding->size() != layer.elements.front().embedding.value_or(*e.embedding).size()) {
          throw Error(ErrorCode::invariant, where + ": embedding dimension differs");
        }
      }
    }
    if (with_embedding != 0 && with_embedding != layer.elements.size()) {
      throw Error(ErrorCode::invariant, where + ": embeddings must be given for all elements or none");
    }
  }
}

LayerStack LayerStack::without(const std::set<ElementId>& ids) const {
  std::set<ElementId> found;
  std::vector<Layer> kept;
  for (const auto& layer : layers_) {
    Layer copy{layer.id, {}};
    for (const auto& e : layer.elements) {
      if (ids.contains(e.id)) {
        found.insert(e.id);
      } else {
        copy.elements.push_back(e);
      }
    }
    if (!copy.elements.empty()) kept.push_back(std::move(copy));
  }
  for (const auto& id : ids) {
    if (!found.contains(id)) throw Error(ErrorCode::unknown_id, "unknown layer element '" + id + "'");
  }
  return LayerStack(functions_, std::move(kept));
}

void MetricConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::domain, msg); };
  if (!(delta >= 0.0)) fail("delta must be >= 0");
  if (!(epsilon >= 0.0)) fail("epsilon must be >= 0");
  if (std::isnan(theta)) fail("theta must be a number");
  if (!(lambda_max >= 0.0)) fail("lambda_max must be >= 0");
  if (!(beta_min >= 0.0)) fail("beta_min must be >= 0");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) fail("sigma must be finite and > 0");
  if (!(gamma_weight >= 0.0 && gamma_weight <= 1.0)) fail("gamma_weight must lie in [0, 1]");
  if (max_hops < 1) fail("max_hops must be >= 1");
}

}  // namespace degenet
