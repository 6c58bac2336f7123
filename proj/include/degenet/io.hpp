#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "degenet/config.hpp"
#include "degenet/model.hpp"

namespace degenet {

using Json = nlohmann::json;

/// Any of the four input document kinds.
using Document = std::variant<Network, Inventory, Portfolio, LayerStack>;

std::string_view document_kind(const Document& doc) noexcept;

/// Parses UTF-8 JSON text and dispatches on the top-level keys:
/// "nodes"/"edges" -> Network, "elements" -> Inventory,
/// "algorithms" -> Portfolio, "layers" -> LayerStack.
/// Syntax errors report the byte offset; schema and invariant violations
/// carry their own ErrorCode.
Document parse_document(std::string_view text);

Json parse_json(std::string_view text);
std::string read_file(const std::string& path);

Network network_from_json(const Json& j);
Inventory inventory_from_json(const Json& j);
Portfolio portfolio_from_json(const Json& j);
LayerStack layer_stack_from_json(const Json& j);
Document document_from_json(const Json& j);

Json to_json(const Network& net);
Json to_json(const Inventory& inv);
Json to_json(const Portfolio& portfolio);
Json to_json(const LayerStack& stack);
Json to_json(const Document& doc);

/// Pretty-printed document text; parse_document(emit_document(d)) == d.
std::string emit_document(const Document& doc);

/// Reads any subset of MetricConfig fields; absent fields keep defaults.
MetricConfig config_from_json(const Json& j);
Json to_json(const MetricConfig& config);

EdgeKey edge_key_from_json(const Json& j);
Json to_json(const EdgeKey& key);

}  // namespace degenet
