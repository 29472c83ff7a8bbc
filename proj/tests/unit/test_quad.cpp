// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace lisscheb;

TEST(Integrate, Examples) {
  const auto nodes = build_node_set(NodeSpec::standard({5, 3}));
  EXPECT_NEAR(integrate(SampleVector(nodes, std::vector<double>(nodes->size(), 1.0))), 1.0, 1e-15);
  const auto t53 = SampleVector(nodes, chi_values(*nodes, std::vector<Index>{5, 3}));
  EXPECT_NEAR(integrate(t53), 1.0, 1e-14);

  const auto line = build_node_set(NodeSpec::standard({4}));
  const auto sq = SampleVector::from_function(line, [](std::span<const double> x) { return x[0] * x[0]; });
  EXPECT_NEAR(integrate(sq), 0.5, 1e-14);
}

TEST(Integrate, CglWeightsInOneDimension) {
  for (Index n = 4; n <= 16; ++n) {
    const auto nodes = build_node_set(NodeSpec::standard({n}));
    ASSERT_EQ(nodes->size(), static_cast<std::size_t>(n + 1));
    for (std::size_t k = 0; k < nodes->size(); ++k) {
      const bool end = k == 0 || k + 1 == nodes->size();
      EXPECT_EQ(nodes->weight(k), end ? 1.0 / (2.0 * static_cast<double>(n)) : 1.0 / static_cast<double>(n));
    }
  }
}

TEST(ExactnessTable, StandardBoxAllPass) {
  const auto spec = NodeSpec::standard({5, 3});
  const auto rows = exactness_table(spec, std::vector<Index>{9, 5}, 1e-12);
  EXPECT_EQ(rows.size(), 60u);
  EXPECT_EQ(rows.front().gamma, SpectralIndex({0, 0}));
  EXPECT_NEAR(rows.front().rule, 1.0, 1e-14);
  EXPECT_EQ(rows.front().truth, 1.0);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.pass) << to_string(r.gamma);
    if (!r.is_alias) EXPECT_NEAR(r.rule, r.truth, 1e-12);
  }
}

TEST(ExactnessTable, ShiftedSignedAlias) {
  const auto spec = NodeSpec::shifted({5, 3}, {0, 1});
  const auto rows = exactness_table(spec, std::vector<Index>{10, 6}, 1e-12);
  const auto& last = rows.back();
  EXPECT_EQ(last.gamma, SpectralIndex({10, 6}));
  EXPECT_NEAR(last.rule, -1.0, 1e-12);
  EXPECT_TRUE(last.is_alias);
  EXPECT_TRUE(last.pass);
}

TEST(ExactnessTable, RejectsBadBox) {
  const auto spec = NodeSpec::standard({5, 3});
  EXPECT_THROW((void)exactness_table(spec, std::vector<Index>{1}, 1e-12), ValidationError);
  EXPECT_THROW((void)exactness_table(spec, std::vector<Index>{1, -1}, 1e-12), InvalidRange);
}

class QuadSpecs : public ::testing::TestWithParam<oracle::Spec> {};

TEST_P(QuadSpecs, RuleMatchesAliasOverDoubleBox) {
  const auto& os = GetParam();
  const auto spec = testutil::to_spec(os);
  std::vector<Index> box(os.dim());
  for (std::size_t j = 0; j < os.dim(); ++j) box[j] = 2 * os.m(j) - 1;
  for (const auto& r : exactness_table(spec, box, 1e-12)) {
    EXPECT_TRUE(r.pass) << to_string(r.gamma);
    EXPECT_NEAR(r.rule, oracle::chi_integral(os, testutil::to_vector(r.gamma.values())), 1e-12);
  }
}

TEST_P(QuadSpecs, ExactForPolynomialsInTheSpace) {
  const auto& os = GetParam();
  const auto spec = testutil::to_spec(os);
  const auto nodes = build_node_set(spec);
  const auto gamma = build_gamma(spec);
  oracle::Random rng(40);
  // every element of the space integrates exactly
  for (int t = 0; t < 10; ++t) {
    const auto pc = rng.vector(gamma->size());
    const auto p = ChebExpansion(gamma, pc);
    const auto h =
        SampleVector::from_function(nodes, [&](std::span<const double> x) { return expansion_eval(p, x); });
    EXPECT_NEAR(integrate(h), pc[0], 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(AllSpecs, QuadSpecs, ::testing::ValuesIn(oracle::test_specs()),
                         [](const auto& info) { return "Spec" + std::to_string(info.index); });
