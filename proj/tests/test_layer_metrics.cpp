#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "degenet/error.hpp"
#include "degenet/layer_metrics.hpp"
#include "oracle/oracles.hpp"

using namespace degenet;

namespace {

LayerElement le(std::string id, std::vector<std::uint8_t> f,
                std::optional<std::vector<double>> emb = std::nullopt) {
  return {std::move(id), std::move(f), std::move(emb)};
}

}  // namespace

TEST(DegenerateSubset, IdentityBasis) {
  const Layer l{"mac", {le("a", {1, 0}), le("b", {1, 0}), le("c", {0, 1})}};
  EXPECT_EQ(diversity_basis(l), DiversityBasis::identity);
  EXPECT_EQ(degenerate_subset(l, 0.5), (std::set<ElementId>{"a", "b"}));
  const Layer idle{"x", {le("a", {0, 0}), le("b", {0, 0})}};
  EXPECT_TRUE(degenerate_subset(idle, 0.5).empty());
}

TEST(DegenerateSubset, EmbeddingBasis) {
  const Layer close{"phy", {le("a", {1, 0}, std::vector<double>{0, 0}), le("b", {1, 0}, std::vector<double>{0.1, 0})}};
  EXPECT_EQ(diversity_basis(close), DiversityBasis::embedding);
  EXPECT_TRUE(degenerate_subset(close, 0.5).empty());
  EXPECT_EQ(degenerate_subset(close, 0.05).size(), 2u);
}

TEST(Mldi, Examples) {
  const std::vector<FunctionId> fs{"f0", "f1"};
  const Layer full{"L0", {le("a", {1, 0}), le("b", {1, 0})}};
  const Layer none{"L1", {le("c", {1, 0}), le("d", {0, 1})}};
  const Layer half{"L2", {le("e", {1, 1}), le("f", {1, 1}), le("g", {1, 0}), le("h", {0, 1})}};
  EXPECT_DOUBLE_EQ(mldi(LayerStack(fs, {full}), 0.5), 1.0);
  EXPECT_DOUBLE_EQ(mldi(LayerStack(fs, {none}), 0.5), 0.0);
  EXPECT_DOUBLE_EQ(mldi(LayerStack(fs, {full, half}), 0.5), 0.75);
  EXPECT_THROW(mldi(LayerStack(fs, {}), 0.5), Error);
}

TEST(LayerFunctionDistribution, Examples) {
  const Layer a{"a", {le("x", {1, 0}), le("y", {0, 1})}};
  const auto da = layer_function_distribution(a);
  EXPECT_EQ(da.coverage, (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(da.distribution.probs(), (std::vector<double>{0.5, 0.5}));
  EXPECT_NEAR(layer_entropy(a), 1.0, 1e-15);

  const Layer b{"b", {le("x", {1, 1, 0}), le("y", {1, 1, 0})}};
  EXPECT_EQ(layer_function_distribution(b).distribution.probs(), (std::vector<double>{0.5, 0.5, 0.0}));
  const Layer idle{"c", {le("x", {0, 0})}};
  EXPECT_THROW(layer_function_distribution(idle), Error);
}

TEST(ConditionalLayerEntropy, Examples) {
  const Layer uniform{"u", {le("x", {1, 0}), le("y", {0, 1})}};
  const Layer single{"s", {le("x", {1, 0})}};
  EXPECT_NEAR(conditional_layer_entropy(uniform, single), 1.0, 1e-12);
  EXPECT_NEAR(conditional_layer_entropy(single, uniform), 0.0, 1e-12);
  EXPECT_NEAR(conditional_layer_entropy(uniform, uniform), 1.0, 1e-12);
  const auto joint = cross_layer_joint(uniform, single);
  EXPECT_EQ(joint, (std::vector<double>{0.5, 0.0, 0.5, 0.0}));
}

// Pairing every lower element with every upper element makes the joint a
// product of the two coverage distributions, so conditioning removes nothing.
TEST(ConditionalLayerEntropy, AllPairsJointFactorizes) {
  oracle::Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const auto stack = oracle::random_stack(rng, 2, 2 + rng() % 4, false);
    const auto& ls = stack.layers();
    const double h = conditional_layer_entropy(ls[0], ls[1]);
    EXPECT_NEAR(h, layer_entropy(ls[0]), 1e-9);
    EXPECT_GE(h, 0.0);
  }
}

TEST(MldiStar, Examples) {
  const std::vector<FunctionId> fs{"f0", "f1"};
  const Layer uniform{"u", {le("x", {1, 0}), le("y", {0, 1})}};
  const Layer single{"s", {le("x", {1, 0}), le("y", {1, 0})}};
  const Layer single2{"s2", single.elements};
  EXPECT_NEAR(mldi_star(LayerStack(fs, {uniform}), 0.5), 1.0, 1e-12);
  EXPECT_NEAR(mldi_star(LayerStack(fs, {single, single2}), 0.5), 0.0, 1e-12);
  // (H(u) + 0.5 H(u|s) + H(s)) / 2 = (1 + 0.5) / 2.
  EXPECT_NEAR(mldi_star(LayerStack(fs, {uniform, single}), 0.5), 0.75, 1e-12);
  EXPECT_THROW(mldi_star(LayerStack({"f0"}, {Layer{"a", {le("x", {1})}}}), 0.5), Error);
  EXPECT_THROW(mldi_star(LayerStack(fs, {uniform}), 1.5), Error);
  EXPECT_NEAR(mldi_star(LayerStack(fs, {uniform}), 0.5, LogBase::e), 1.0, 1e-12);
}

TEST(MldiStar, GammaZeroIsMeanNormalizedEntropy) {
  oracle::Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 2 + rng() % 4;
    const auto stack = oracle::random_stack(rng, 1 + rng() % 4, m, rng() % 2 == 0);
    double mean = 0.0;
    for (const auto& l : stack.layers()) mean += layer_entropy(l) / std::log2(static_cast<double>(m));
    mean /= static_cast<double>(stack.layers().size());
    EXPECT_NEAR(mldi_star(stack, 0.0), mean, 1e-12);
  }
}

TEST(LayerMetrics, BoundsAndReorderInvariance) {
  oracle::Rng rng(63);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 2 + rng() % 4;
    const auto stack = oracle::random_stack(rng, 1 + rng() % 4, m, rng() % 2 == 0);
    const double delta = 0.1 * static_cast<double>(rng() % 8);
    const double g = 0.25 * static_cast<double>(rng() % 5);
    const double v = mldi(stack, delta);
    const double s = mldi_star(stack, g);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0 + g + 1e-12);
    for (const auto& l : stack.layers()) {
      EXPECT_LE(layer_entropy(l), std::log2(static_cast<double>(m)) + 1e-9);
      auto shuffled = l;
      std::reverse(shuffled.elements.begin(), shuffled.elements.end());
      EXPECT_EQ(degenerate_subset(shuffled, delta), degenerate_subset(l, delta));
      EXPECT_NEAR(layer_entropy(shuffled), layer_entropy(l), 1e-12);
    }
    const auto r = mldi_report(stack, delta, g);
    EXPECT_DOUBLE_EQ(r.mldi, v);
    ASSERT_TRUE(r.mldi_star);
    EXPECT_DOUBLE_EQ(*r.mldi_star, s);
    EXPECT_FALSE(r.per_layer.back().normalized_conditional);
  }
}
