#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "degenet/error.hpp"
#include "degenet/scenario.hpp"
#include "fixture.hpp"

using namespace degenet;

namespace {

const std::string kData = DEGENET_DATA_DIR;

const MetricValue& metric(const StepResult& step, const std::string& name) {
  const auto it = std::find_if(step.metrics.begin(), step.metrics.end(),
                               [&](const MetricValue& m) { return m.name == name; });
  if (it == step.metrics.end()) throw std::runtime_error("missing metric " + name);
  return *it;
}

Scenario fixture_scenario(std::vector<FailureStep> failures) {
  Scenario sc;
  sc.name = "fixture";
  sc.metrics = {MetricKind::dwpr, MetricKind::dwpr_star};
  sc.config.theta = 2.0;
  sc.config.lambda_max = 6.0;
  sc.config.beta_min = 8.0;
  sc.endpoints = {{"s", "d"}};
  sc.failures = std::move(failures);
  return sc;
}

ScenarioInputs fixture_inputs() {
  ScenarioInputs in;
  in.network = fixtures::fixture_network();
  return in;
}

}  // namespace

TEST(Scenario, EmptyFailureListGivesBaselineOnly) {
  const auto r = run_scenario(fixture_inputs(), fixture_scenario({}));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.steps[0].label, "baseline");
  EXPECT_EQ(*metric(r.steps[0], "dwpr[s->d]").value, 1.0);
  EXPECT_NEAR(*metric(r.steps[0], "dwpr_star[s->d]").value, 1.4750240544016, 1e-11);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Scenario, RemovingRelayKeepsDwprAtOne) {
  FailureStep lose_a;
  lose_a.nodes = {"a"};
  const auto r = run_scenario(fixture_inputs(), fixture_scenario({lose_a}));
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[1].label, "step 1");
  EXPECT_EQ(*metric(r.steps[0], "dwpr[s->d]").value, 1.0);
  const auto& after = metric(r.steps[1], "dwpr[s->d]");
  EXPECT_EQ(*after.value, 1.0);
  EXPECT_EQ(*after.delta, 0.0);
  // The surviving s-b-d path is optical only: no mode entropy left.
  EXPECT_NEAR(*metric(r.steps[1], "dwpr_star[s->d]").value, 0.0, 1e-12);
}

TEST(Scenario, MissingInputIsSchemaError) {
  auto sc = fixture_scenario({});
  sc.metrics = {MetricKind::fss};
  sc.function = "route";
  try {
    run_scenario(fixture_inputs(), sc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::schema);
  }
}

TEST(Scenario, UnknownFailureTargetIsRejected) {
  FailureStep bad;
  bad.nodes = {"zz"};
  try {
    run_scenario(fixture_inputs(), fixture_scenario({bad}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_id);
  }
}

TEST(Scenario, UndefinedMetricIsNullWithReason) {
  ScenarioInputs in;
  in.inventory = Inventory({"route"}, {{"solo", {"route"}, {0.0}, 1.0, 0.0}});
  Scenario sc;
  sc.metrics = {MetricKind::fss, MetricKind::degeneracy_score};
  sc.function = "route";
  const auto r = run_scenario(in, sc);
  const auto& f = metric(r.steps[0], "fss");
  EXPECT_FALSE(f.value);
  EXPECT_FALSE(f.reason.empty());
  EXPECT_EQ(*metric(r.steps[0], "degeneracy_score").value, 0.0);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0].code, "undefined_metric");
  EXPECT_FALSE(r.baseline_undefined());

  const auto j = to_json(r);
  EXPECT_TRUE(j["steps"][0]["metrics"]["fss"].is_null());
  EXPECT_TRUE(j["steps"][0]["reasons"].contains("fss"));
}

TEST(Scenario, NoValidPathsWarns) {
  auto sc = fixture_scenario({});
  sc.config.lambda_max = 0.5;
  const auto r = run_scenario(fixture_inputs(), sc);
  EXPECT_EQ(*metric(r.steps[0], "dwpr[s->d]").value, 0.0);
  EXPECT_FALSE(metric(r.steps[0], "dwpr_star[s->d]").value);
  EXPECT_TRUE(std::any_of(r.warnings.begin(), r.warnings.end(),
                          [](const Warning& w) { return w.code == "no_valid_paths"; }));
}

TEST(Scenario, JsonRoundTrip) {
  const auto loaded = load_scenario(kData + "/fixture_scenario.json");
  const auto r = run_scenario(loaded.inputs, loaded.scenario);
  EXPECT_EQ(report_from_json(to_json(r)), r);
  const auto text = emit_report(r, ReportFormat::json);
  EXPECT_EQ(emit_report(report_from_json(parse_json(text)), ReportFormat::json), text);
}

TEST(Scenario, FixtureFileSteps) {
  const auto loaded = load_scenario(kData + "/fixture_scenario.json");
  const auto r = run_scenario(loaded.inputs, loaded.scenario);
  ASSERT_EQ(r.steps.size(), 3u);
  EXPECT_EQ(r.steps[2].label, "lose bs1 and aodv");
  // Cumulative: node a is still removed at step 2.
  EXPECT_EQ(r.steps[2].applied.nodes, (std::set<NodeId>{"a"}));
  EXPECT_EQ(r.steps[2].applied.elements, (std::set<ElementId>{"bs1"}));
  for (const auto& step : r.steps) {
    EXPECT_TRUE(std::is_sorted(step.metrics.begin(), step.metrics.end(),
                               [](const auto& a, const auto& b) { return a.name < b.name; }));
    EXPECT_EQ(step.metrics.size(), loaded.scenario.metrics.size());
  }
}

TEST(Scenario, IndependentModeDoesNotAccumulate) {
  auto loaded = load_scenario(kData + "/fixture_scenario.json");
  loaded.scenario.cumulative = false;
  const auto r = run_scenario(loaded.inputs, loaded.scenario);
  EXPECT_FALSE(r.cumulative);
  EXPECT_TRUE(r.steps[2].applied.nodes.empty());
  // Only the element and algorithm failures apply, so path metrics match the baseline.
  EXPECT_EQ(metric(r.steps[2], "dwpr_star[s->d]").value, metric(r.steps[0], "dwpr_star[s->d]").value);
}

TEST(Scenario, OutputIsByteIdentical) {
  const auto loaded = load_scenario(kData + "/fixture_scenario.json");
  const auto a = emit_report(run_scenario(loaded.inputs, loaded.scenario), ReportFormat::json);
  const auto b = emit_report(run_scenario(loaded.inputs, loaded.scenario), ReportFormat::json);
  EXPECT_EQ(a, b);
  const auto c = emit_report(run_scenario(loaded.inputs, loaded.scenario), ReportFormat::csv);
  const auto d = emit_report(run_scenario(loaded.inputs, loaded.scenario), ReportFormat::csv);
  EXPECT_EQ(c, d);
}

TEST(Scenario, CsvHasOneRowPerMetric) {
  const auto r = run_scenario(fixture_inputs(), fixture_scenario({}));
  const auto csv = emit_report(r, ReportFormat::csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "step,label,metric,value,delta");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  EXPECT_EQ(rows, 2u);
}

TEST(Scenario, ParseErrors) {
  EXPECT_THROW(scenario_from_json(parse_json(R"({"metrics": []})")), Error);
  EXPECT_THROW(scenario_from_json(parse_json(R"({"metrics": ["speed"]})")), Error);
  EXPECT_THROW(scenario_from_json(parse_json(R"({"metrics": ["dwpr"], "mode": "random"})")), Error);
  const auto ok = scenario_from_json(parse_json(
      R"({"metrics": ["dwpr"], "endpoints": [{"src": "s", "dst": "d"}], "mode": "independent"})"));
  EXPECT_FALSE(ok.scenario.cumulative);
  EXPECT_EQ(ok.scenario.endpoints.front(), (std::pair<NodeId, NodeId>{"s", "d"}));
}
