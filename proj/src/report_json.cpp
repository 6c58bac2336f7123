#include "degenet/report_json.hpp"

#include "degenet/scenario.hpp"

namespace degenet {

namespace {

Json number(double x) { return round_report_value(x); }

Json optional_number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

}  // namespace

Json to_json(const Path& path) {
  return {{"nodes", path.nodes},
          {"modes", path.mode_sequence()},
          {"total_latency_ms", number(path.total_latency)},
          {"min_bandwidth_mbps", number(path.min_bandwidth)},
          {"hops", path.hop_count}};
}

Json to_json(const DwprReport& r) {
  Json paths = Json::array();
  for (const auto& p : r.per_path) {
    Json jp = to_json(p.path);
    jp["quality"] = number(p.quality);
    jp["probability"] = number(p.probability);
    jp["passed_theta"] = p.passed_theta;
    jp["mean_dissimilarity"] = number(p.mean_dissimilarity);
    paths.push_back(std::move(jp));
  }
  Json out = {{"dwpr", number(r.dwpr)},
              {"dwpr_star", optional_number(r.dwpr_star)},
              {"mode_entropy", optional_number(r.mode_entropy)},
              {"valid_path_count", r.valid_path_count},
              {"unique_combo_count", r.unique_combo_count},
              {"paths", std::move(paths)}};
  if (r.no_valid_paths) out["warnings"] = Json::array({"no_valid_paths"});
  return out;
}

Json to_json(const FssReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pair_details) {
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"distance", number(p.distance)},
                     {"weight", number(p.weight)},
                     {"passed_delta", p.passed_delta}});
  }
  Json out = {{"fss", optional_number(r.fss)},
              {"fss_star", optional_number(r.fss_star)},
              {"n", r.n},
              {"pairs", std::move(pairs)}};
  if (!r.fss) out["reason"] = "fewer than two capable elements (n = " + std::to_string(r.n) + ")";
  return out;
}

Json to_json(const ArqReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pair_details) {
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"perf_distance", number(p.perf_distance)},
                     {"kernel", number(p.kernel)},
                     {"structural", number(p.structural)},
                     {"passed", p.passed}});
  }
  Json out = {{"arq", optional_number(r.arq)},
              {"arq_star", optional_number(r.arq_star)},
              {"n", r.n},
              {"pairs", std::move(pairs)}};
  if (!r.arq) out["reason"] = "fewer than two algorithms (n = " + std::to_string(r.n) + ")";
  return out;
}

Json to_json(const MldiReport& r) {
  Json layers = Json::array();
  for (const auto& d : r.per_layer) {
    layers.push_back({{"id", d.id},
                      {"degenerate_count", d.degenerate_count},
                      {"total", d.total},
                      {"diversity_basis", d.basis == DiversityBasis::embedding ? "embedding" : "identity"},
                      {"normalized_entropy", number(d.normalized_entropy)},
                      {"normalized_conditional_entropy", optional_number(d.normalized_conditional)}});
  }
  Json out = {{"mldi", number(r.mldi)}, {"mldi_star", optional_number(r.mldi_star)}, {"layers", std::move(layers)}};
  if (!r.mldi_star) out["reason"] = "fewer than two functions (log m = 0)";
  return out;
}

}  // namespace degenet
