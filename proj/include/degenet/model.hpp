#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace degenet {

using NodeId = std::string;
using ModeId = std::string;
using FunctionId = std::string;
using ElementId = std::string;
using AlgorithmId = std::string;
using LayerId = std::string;

/// Undirected link labelled with (mode, latency in ms, bandwidth in Mbit/s).
struct Edge {
  NodeId u;
  NodeId v;
  ModeId mode;
  double latency_ms = 0.0;
  double bandwidth_mbps = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Identifies an edge for failure injection: endpoints stored in canonical
/// (lexicographically ordered) form, plus the mode.
struct EdgeKey {
  NodeId u;
  NodeId v;
  ModeId mode;

  EdgeKey() = default;
  EdgeKey(NodeId a, NodeId b, ModeId m);
  static EdgeKey of(const Edge& e) { return {e.u, e.v, e.mode}; }

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Labelled undirected multigraph. Validated on construction and immutable
/// afterwards.
class Network {
 public:
  struct Incidence {
    std::size_t neighbor;  // node index
    std::size_t edge;      // edge index
  };

  Network() = default;
  Network(std::vector<NodeId> nodes, std::vector<Edge> edges,
          std::map<std::string, std::string> metadata = {});

  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_node(const NodeId& id) const { return index_.contains(id); }
  std::optional<std::size_t> index_of(const NodeId& id) const;
  bool has_edge(const EdgeKey& key) const;

  /// Incident edges of the node at `index`, sorted by (neighbor id, mode).
  const std::vector<Incidence>& incident(std::size_t index) const { return adjacency_[index]; }

  /// Sorted set of every mode label used by some edge.
  std::vector<ModeId> modes() const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ && a.metadata_ == b.metadata_;
  }

 private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::map<std::string, std::string> metadata_;
  std::map<NodeId, std::size_t> index_;
  std::set<EdgeKey> keys_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Returns a copy of `net` without the failed nodes (and their incident
/// edges) and without the failed edges. Unknown ids are rejected.
Network remove_failures(const Network& net, const std::set<NodeId>& failed_nodes,
                        const std::set<EdgeKey>& failed_edges);

/// A functional component: capability set, structural embedding, capacity
/// and current load.
struct Element {
  ElementId id;
  std::set<FunctionId> capabilities;
  std::vector<double> embedding;
  double capacity = 0.0;
  double load = 0.0;

  friend bool operator==(const Element&, const Element&) = default;
};

/// 1 iff `e` can perform `f`.
int capability(const Element& e, const FunctionId& f);

class Inventory {
 public:
  Inventory() = default;
  Inventory(std::vector<FunctionId> functions, std::vector<Element> elements);

  const std::vector<FunctionId>& functions() const noexcept { return functions_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  bool has_function(const FunctionId& f) const;
  std::size_t embedding_dim() const noexcept;

  /// Copy without the listed elements; unknown ids are rejected.
  Inventory without(const std::set<ElementId>& ids) const;

  friend bool operator==(const Inventory&, const Inventory&) = default;

 private:
  std::vector<FunctionId> functions_;
  std::vector<Element> elements_;
};

struct AlgorithmProfile {
  AlgorithmId id;
  std::vector<double> performance;
  std::vector<double> structure;

  friend bool operator==(const AlgorithmProfile&, const AlgorithmProfile&) = default;
};

class Portfolio {
 public:
  Portfolio() = default;
  explicit Portfolio(std::vector<AlgorithmProfile> algorithms);

  const std::vector<AlgorithmProfile>& algorithms() const noexcept { return algorithms_; }
  std::size_t size() const noexcept { return algorithms_.size(); }

  Portfolio without(const std::set<AlgorithmId>& ids) const;

  friend bool operator==(const Portfolio&, const Portfolio&) = default;

 private:
  std::vector<AlgorithmProfile> algorithms_;
};

/// Element of a protocol layer: binary function vector over the stack's
/// function universe, with an optional structural embedding.
struct LayerElement {
  ElementId id;
  std::vector<std::uint8_t> functions;
  std::optional<std::vector<double>> embedding;

  friend bool operator==(const LayerElement&, const LayerElement&) = default;
};

struct Layer {
  LayerId id;
  std::vector<LayerElement> elements;

  /// True when every element carries an embedding.
  bool has_embeddings() const;

  friend bool operator==(const Layer&, const Layer&) = default;
};

class LayerStack {
 public:
  LayerStack() = default;
  LayerStack(std::vector<FunctionId> functions, std::vector<Layer> layers);

  const std::vector<FunctionId>& functions() const noexcept { return functions_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  std::size_t function_count() const noexcept { return functions_.size(); }

  /// Copy with the listed elements removed from every layer. Layers left
  /// empty are dropped.
  LayerStack without(const std::set<ElementId>& ids) const;

  friend bool operator==(const LayerStack&, const LayerStack&) = default;

 private:
  std::vector<FunctionId> functions_;
  std::vector<Layer> layers_;
};

}  // namespace degenet
