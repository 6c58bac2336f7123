#include <gtest/gtest.h>

#include "degenet/error.hpp"
#include "degenet/io.hpp"
#include "degenet/model.hpp"
#include "fixture.hpp"
#include "oracle/oracles.hpp"

using namespace degenet;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected degenet::Error";
  return ErrorCode::undefined;
}

}  // namespace

TEST(ParseDocument, FixtureNetworkHasFourNodesFiveEdges) {
  const auto doc = parse_document(fixtures::kFixtureJson);
  ASSERT_TRUE(std::holds_alternative<Network>(doc));
  const auto& net = std::get<Network>(doc);
  EXPECT_EQ(net.node_count(), 4u);
  EXPECT_EQ(net.edge_count(), 5u);
  EXPECT_EQ(net, fixtures::fixture_network());
  EXPECT_EQ(net.modes(), (std::vector<ModeId>{"acoustic", "optical", "radio"}));
}

TEST(ParseDocument, DanglingEndpointIsInvariantError) {
  const char* text = R"({"nodes": [], "edges": [{"u":"s","v":"a","mode":"radio","latency_ms":1,"bandwidth_mbps":1}]})";
  EXPECT_EQ(code_of([&] { parse_document(text); }), ErrorCode::invariant);
}

TEST(ParseDocument, DuplicateNodeIsInvariantError) {
  const char* text = R"({"nodes": [{"id":"s"},{"id":"s"}], "edges": []})";
  EXPECT_EQ(code_of([&] { parse_document(text); }), ErrorCode::invariant);
}

TEST(ParseDocument, SyntaxErrorReportsPosition) {
  try {
    parse_document(R"({"nodes": [ })");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::syntax);
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
}

TEST(ParseDocument, SchemaErrors) {
  EXPECT_EQ(code_of([] { parse_document(R"({"nodes": [{"name":"s"}], "edges": []})"); }), ErrorCode::schema);
  EXPECT_EQ(code_of([] {
              parse_document(R"({"nodes":[{"id":"s"},{"id":"a"}],
                                 "edges":[{"u":"s","v":"a","mode":"radio","latency_ms":"1","bandwidth_mbps":1}]})");
            }),
            ErrorCode::schema);
  EXPECT_EQ(code_of([] { parse_document(R"([1, 2])"); }), ErrorCode::schema);
  EXPECT_EQ(code_of([] { parse_document(R"({"something": 1})"); }), ErrorCode::schema);
}

TEST(Network, EdgeInvariants) {
  EXPECT_EQ(code_of([] { Network({"s"}, {{"s", "s", "radio", 1, 1}}); }), ErrorCode::invariant);
  EXPECT_EQ(code_of([] { Network({"s", "a"}, {{"s", "a", "radio", -1, 1}}); }), ErrorCode::invariant);
  EXPECT_EQ(code_of([] { Network({"s", "a"}, {{"s", "a", "radio", 1, 0}}); }), ErrorCode::invariant);
  // Same mode in either orientation is still a duplicate.
  EXPECT_EQ(code_of([] { Network({"s", "a"}, {{"s", "a", "radio", 1, 1}, {"a", "s", "radio", 2, 2}}); }),
            ErrorCode::invariant);
  const Network ok({"s", "a"}, {{"s", "a", "radio", 1, 1}, {"a", "s", "optical", 2, 2}});
  EXPECT_EQ(ok.edge_count(), 2u);
  EXPECT_TRUE(ok.has_edge(EdgeKey("a", "s", "optical")));
}

TEST(RemoveFailures, EmptySetIsIdentity) {
  const auto net = fixtures::fixture_network();
  EXPECT_EQ(remove_failures(net, {}, {}), net);
}

TEST(RemoveFailures, NodeRemovalDropsIncidentEdges) {
  const auto net = fixtures::fixture_network();
  const auto out = remove_failures(net, {"a"}, {});
  EXPECT_EQ(out.node_count(), 3u);
  EXPECT_EQ(out.edge_count(), 3u);
  EXPECT_FALSE(out.has_node("a"));
  EXPECT_EQ(net.node_count(), 4u);  // input untouched
}

TEST(RemoveFailures, EdgeRemovalUsesCanonicalKey) {
  const auto net = fixtures::fixture_network();
  const auto out = remove_failures(net, {}, {EdgeKey("d", "s", "acoustic")});
  EXPECT_EQ(out.edge_count(), 4u);
  EXPECT_FALSE(out.has_edge(EdgeKey("s", "d", "acoustic")));
}

TEST(RemoveFailures, UnknownIdsRejected) {
  const auto net = fixtures::fixture_network();
  EXPECT_EQ(code_of([&] { remove_failures(net, {"zz"}, {}); }), ErrorCode::unknown_id);
  EXPECT_EQ(code_of([&] { remove_failures(net, {}, {EdgeKey("s", "a", "optical")}); }), ErrorCode::unknown_id);
}

TEST(RemoveFailures, NeverGrowsCounts) {
  oracle::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto net = oracle::random_connected_network(rng, 6, 2);
    std::set<NodeId> nodes;
    std::set<EdgeKey> edges;
    for (const auto& n : net.nodes()) {
      if (rng() % 4 == 0) nodes.insert(n);
    }
    for (const auto& e : net.edges()) {
      if (rng() % 4 == 0) edges.insert(EdgeKey::of(e));
    }
    const auto out = remove_failures(net, nodes, edges);
    EXPECT_LE(out.node_count(), net.node_count());
    EXPECT_LE(out.edge_count(), net.edge_count());
  }
}

TEST(Capability, Membership) {
  const Element e{"e", {"route"}, {0.0}, 1.0, 0.0};
  const Element none{"n", {}, {0.0}, 1.0, 0.0};
  EXPECT_EQ(capability(e, "route"), 1);
  EXPECT_EQ(capability(e, "compress"), 0);
  EXPECT_EQ(capability(none, "route"), 0);
}

TEST(Inventory, Invariants) {
  EXPECT_EQ(code_of([] { Inventory({"route"}, {{"a", {"route"}, {1, 2}, 1, 0}, {"b", {"route"}, {1}, 1, 0}}); }),
            ErrorCode::invariant);
  EXPECT_EQ(code_of([] { Inventory({"route"}, {{"a", {"route"}, {1}, -1, 0}}); }), ErrorCode::invariant);
  EXPECT_EQ(code_of([] { Inventory({"route"}, {{"a", {"fly"}, {1}, 1, 0}}); }), ErrorCode::invariant);
}

TEST(Portfolio, ZeroStructureRejected) {
  EXPECT_EQ(code_of([] { Portfolio({{"A", {1.0}, {0.0, 0.0}}}); }), ErrorCode::invariant);
}

TEST(LayerStack, Invariants) {
  EXPECT_EQ(code_of([] { LayerStack({"f0", "f1"}, {{"phy", {}}}); }), ErrorCode::invariant);
  EXPECT_EQ(code_of([] { LayerStack({"f0", "f1"}, {{"phy", {{"e", {1}, std::nullopt}}}}); }), ErrorCode::invariant);
  EXPECT_EQ(code_of([] { LayerStack({"f0"}, {{"phy", {{"e", {2}, std::nullopt}}}}); }), ErrorCode::invariant);
  EXPECT_EQ(code_of([] {
              parse_document(R"({"functions":["f"],"layers":[{"id":"l","elements":[{"id":"e","f":[3]}]}]})");
            }),
            ErrorCode::invariant);
}

TEST(MetricConfig, RangesEnforced) {
  EXPECT_NO_THROW(MetricConfig::checked({}));
  MetricConfig c;
  c.sigma = 0;
  EXPECT_EQ(code_of([&] { MetricConfig::checked(c); }), ErrorCode::domain);
  c = {};
  c.gamma_weight = 1.5;
  EXPECT_EQ(code_of([&] { MetricConfig::checked(c); }), ErrorCode::domain);
  c = {};
  c.max_hops = 0;
  EXPECT_EQ(code_of([&] { MetricConfig::checked(c); }), ErrorCode::domain);
  EXPECT_EQ(code_of([] { config_from_json(Json{{"bogus", 1}}); }), ErrorCode::schema);
}

TEST(ErrorCodes, ReasonStringsAreStable) {
  EXPECT_EQ(Error(ErrorCode::unknown_id, "x").reason(), "unknown_id");
  EXPECT_EQ(to_string(ErrorCode::limit_exceeded), "limit_exceeded");
}

// parse(emit(x)) == x over randomly generated documents of every kind.
TEST(DocumentRoundTrip, RandomDocumentsRoundTrip) {
  oracle::Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    std::vector<Document> docs;
    auto net = oracle::random_connected_network(rng, 2 + t % 6, 1 + t % 3);
    docs.emplace_back(Network(net.nodes(), net.edges(), {{"site", "lab-" + std::to_string(t)}}));
    auto elems = oracle::random_elements(rng, 1 + t % 5, 3);
    docs.emplace_back(Inventory({"route", "compress"}, elems));
    docs.emplace_back(Portfolio(oracle::random_algorithms(rng, 1 + t % 4, 2, 3)));
    docs.emplace_back(oracle::random_stack(rng, 1 + t % 3, 3, t % 2 == 0));
    for (const auto& d : docs) {
      EXPECT_EQ(parse_document(emit_document(d)), d) << document_kind(d);
    }
  }
}

TEST(MetricConfig, JsonRoundTrip) {
  MetricConfig c;
  c.theta = -std::numeric_limits<double>::infinity();
  c.log_base = LogBase::e;
  c.structure_distance = DistanceKind::braycurtis;
  EXPECT_EQ(config_from_json(to_json(c)), c);
}
