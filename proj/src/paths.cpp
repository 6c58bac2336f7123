#include "degenet/paths.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>

#include "degenet/error.hpp"

namespace degenet {

std::vector<ModeId> Path::mode_sequence() const {
  std::vector<ModeId> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(e.mode);
  return out;
}

Path make_path(const NodeId& source, std::vector<Edge> edges, const std::vector<ModeId>& mode_universe) {
  if (edges.empty()) throw Error(ErrorCode::domain, "a path needs at least one edge");
  Path p;
  p.nodes.push_back(source);
  p.total_latency = 0.0;
  p.min_bandwidth = std::numeric_limits<double>::infinity();
  std::vector<double> counts(mode_universe.size(), 0.0);
  for (const auto& e : edges) {
    const NodeId& here = p.nodes.back();
    if (e.u == here) {
      p.nodes.push_back(e.v);
    } else if (e.v == here) {
      p.nodes.push_back(e.u);
    } else {
      throw Error(ErrorCode::invariant, "edge " + e.u + "-" + e.v + " does not continue the walk at " + here);
    }
    p.total_latency += e.latency_ms;
    p.min_bandwidth = std::min(p.min_bandwidth, e.bandwidth_mbps);
    p.mode_set.insert(e.mode);
    const auto it = std::lower_bound(mode_universe.begin(), mode_universe.end(), e.mode);
    if (it == mode_universe.end() || *it != e.mode) {
      throw Error(ErrorCode::unknown_id, "mode '" + e.mode + "' missing from the mode universe");
    }
    counts[static_cast<std::size_t>(it - mode_universe.begin())] += 1.0;
  }
  p.hop_count = edges.size();
  p.edges = std::move(edges);
  for (double& c : counts) c /= static_cast<double>(p.hop_count);
  p.mode_freq = Distribution(std::move(counts), mode_universe);
  return p;
}

namespace {

struct SearchState {
  const Network& net;
  std::size_t target;
  std::size_t max_hops;
  std::size_t max_paths;
  std::atomic<std::size_t>& found;
  std::atomic<bool>& overflow;
};

struct Branch {
  std::vector<std::vector<std::size_t>> walks;  // edge-index sequences
  bool hop_limited = false;
};

void extend(const SearchState& st, std::size_t node, std::vector<bool>& visited,
            std::vector<std::size_t>& walk, Branch& out) {
  if (st.overflow.load(std::memory_order_relaxed)) return;
  if (node == st.target) {
    if (st.found.fetch_add(1, std::memory_order_relaxed) + 1 > st.max_paths) {
      st.overflow.store(true, std::memory_order_relaxed);
      return;
    }
    out.walks.push_back(walk);
    return;
  }
  for (const auto& inc : st.net.incident(node)) {
    if (visited[inc.neighbor]) continue;
    if (walk.size() == st.max_hops) {
      out.hop_limited = true;
      return;
    }
    visited[inc.neighbor] = true;
    walk.push_back(inc.edge);
    extend(st, inc.neighbor, visited, walk, out);
    walk.pop_back();
    visited[inc.neighbor] = false;
  }
}

bool path_less(const Path& a, const Path& b) {
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  return a.mode_sequence() < b.mode_sequence();
}

}  // namespace

PathSearch enumerate_simple_paths(const Network& net, const NodeId& s, const NodeId& d,
                                  std::size_t max_hops, std::size_t max_paths, Execution exec) {
  const auto si = net.index_of(s);
  const auto di = net.index_of(d);
  if (!si) throw Error(ErrorCode::unknown_id, "unknown source node '" + s + "'");
  if (!di) throw Error(ErrorCode::unknown_id, "unknown destination node '" + d + "'");
  if (s == d) throw Error(ErrorCode::domain, "source and destination must differ");
  if (max_hops < 1) throw Error(ErrorCode::domain, "max_hops must be >= 1");

  std::atomic<std::size_t> found{0};
  std::atomic<bool> overflow{false};
  const SearchState st{net, *di, max_hops, max_paths, found, overflow};

  // One branch per edge leaving the source; branches are independent.
  const auto& first = net.incident(*si);
  std::vector<Branch> branches(first.size());
  auto run_branch = [&](std::size_t b) {
    std::vector<bool> visited(net.node_count(), false);
    visited[*si] = true;
    visited[first[b].neighbor] = true;
    std::vector<std::size_t> walk{first[b].edge};
    extend(st, first[b].neighbor, visited, walk, branches[b]);
  };
  const auto count = static_cast<std::int64_t>(first.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < count; ++b) run_branch(static_cast<std::size_t>(b));
  } else {
    for (std::int64_t b = 0; b < count; ++b) run_branch(static_cast<std::size_t>(b));
  }
  if (overflow.load()) {
    throw Error(ErrorCode::limit_exceeded,
                "more than " + std::to_string(max_paths) + " simple paths between " + s + " and " + d);
  }

  const auto modes = net.modes();
  PathSearch out;
  for (const auto& br : branches) {
    out.hop_limited = out.hop_limited || br.hop_limited;
    for (const auto& w : br.walks) {
      std::vector<Edge> edges;
      edges.reserve(w.size());
      for (auto k : w) edges.push_back(net.edges()[k]);
      out.paths.push_back(make_path(s, std::move(edges), modes));
    }
  }
  std::sort(out.paths.begin(), out.paths.end(), path_less);
  return out;
}

double path_quality(const Path& p) {
  if (p.hop_count < 1) throw Error(ErrorCode::domain, "path quality needs at least one hop");
  return p.min_bandwidth / (p.total_latency + static_cast<double>(p.hop_count));
}

Distribution path_distribution(const std::vector<double>& qualities) {
  if (qualities.empty()) throw Error(ErrorCode::undefined, "path distribution of an empty path set");
  for (double q : qualities) {
    if (!(q > 0.0)) throw Error(ErrorCode::domain, "path qualities must be > 0");
  }
  return normalize(qualities);
}

ValidPathSet filter_qos(const std::vector<Path>& paths, double lambda_max, double beta_min) {
  ValidPathSet out;
  for (const auto& p : paths) {
    if (p.total_latency <= lambda_max && p.min_bandwidth >= beta_min) {
      out.paths.push_back(p);
      out.qualities.push_back(path_quality(p));
      out.unique_mode_combos.insert(p.mode_set);
    }
  }
  if (!out.paths.empty()) out.distribution = path_distribution(out.qualities);
  return out;
}

}  // namespace degenet
