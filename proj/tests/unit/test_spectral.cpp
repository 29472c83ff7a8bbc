// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace lisscheb;

TEST(GammaSetTest, KnownSets) {
  const auto g = build_gamma(NodeSpec::standard({5, 3}));
  EXPECT_EQ(g->size(), 12u);
  EXPECT_FALSE(g->find(std::vector<Index>{2, 2}).has_value());
  EXPECT_EQ(g->spectral_index(g->special_position()), SpectralIndex({0, 3}));

  const auto one = build_gamma(NodeSpec::standard({4}));
  ASSERT_EQ(one->size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(one->element(k)[0], static_cast<Index>(k));

  const auto s = build_gamma(NodeSpec::shifted({5, 3}, {0, 1}));
  const auto s0 = build_gamma(NodeSpec::shifted({5, 3}, {0, 0}));
  EXPECT_EQ(s->size(), 38u);
  std::set<std::vector<Index>> a, b;
  for (std::size_t k = 0; k < s->size(); ++k) a.insert(testutil::to_vector(s->element(k)));
  for (std::size_t k = 0; k < s0->size(); ++k) b.insert(testutil::to_vector(s0->element(k)));
  b.erase({5, 3});
  EXPECT_EQ(a, b);
}

TEST(GammaSetTest, NormExamples) {
  const auto st = NodeSpec::standard({5, 3});
  EXPECT_EQ(norm_sq(st, SpectralIndex({0, 3})), 1.0);
  EXPECT_EQ(norm_sq(st, SpectralIndex({2, 1})), 0.25);
  EXPECT_THROW((void)norm_sq(st, SpectralIndex({2, 2})), NotInGammaSet);
  EXPECT_EQ(norm_sq(NodeSpec::shifted({5, 3}, {0, 0}), SpectralIndex({5, 3})), 0.5);
}

TEST(Involution, Examples) {
  const std::vector<Index> m{5, 3};
  EXPECT_EQ(involution(m, SpectralIndex({0, 0})), SpectralIndex({0, 3}));
  EXPECT_EQ(involution(m, SpectralIndex({2, 1})), SpectralIndex({3, 1}));
}

class GammaSpecs : public ::testing::TestWithParam<oracle::Spec> {};

TEST_P(GammaSpecs, MatchesDefinitionInOrder) {
  const auto& os = GetParam();
  const auto g = build_gamma(testutil::to_spec(os));
  const auto ref = oracle::gamma_set(os);
  ASSERT_EQ(g->size(), ref.size());
  for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_EQ(testutil::to_vector(g->element(k)), ref[k]);
}

TEST_P(GammaSpecs, CardinalityEqualsNodeCount) {
  const auto spec = testutil::to_spec(GetParam());
  EXPECT_EQ(build_gamma(spec)->size(), build_node_set(spec)->size());
}

TEST_P(GammaSpecs, NormsFollowExponentCounts) {
  const auto& os = GetParam();
  const auto spec = testutil::to_spec(os);
  const auto g = build_gamma(spec);
  std::size_t specials = 0;
  for (std::size_t k = 0; k < g->size(); ++k) {
    const auto v = testutil::to_vector(g->element(k));
    int e = 0;
    int eq = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      e += v[j] > 0 ? 1 : 0;
      eq += v[j] == os.n[j] ? 1 : 0;
    }
    const int f = os.shifted && eq > 0 ? eq - 1 : 0;
    bool special = v.back() == os.m(os.dim() - 1);
    for (std::size_t j = 0; j + 1 < v.size(); ++j) special = special && v[j] == 0;
    specials += special ? 1 : 0;
    EXPECT_EQ(g->is_special(k), special);
    const double expect = special ? 1.0 : std::pow(2.0, -e + f);
    EXPECT_EQ(g->norm_sq(k), expect);
    EXPECT_GT(g->norm_sq(k), 0.0);
    if (!os.shifted) {
      bool zero = true;
      for (auto x : v) zero = zero && x == 0;
      EXPECT_EQ(g->norm_sq(k) == 1.0, zero || special);
    }
  }
  EXPECT_EQ(specials, 1u);
}

TEST_P(GammaSpecs, InvolutionBijection) {
  const auto& os = GetParam();
  const auto spec = testutil::to_spec(os);
  const auto g = build_gamma(spec);
  const std::size_t d = os.dim();
  std::vector<Index> m(d);
  for (std::size_t j = 0; j < d; ++j) m[j] = os.m(j);
  auto in_class = [&](const std::vector<Index>& v, int r) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!os.shifted) {
        if (r == 0 ? !(2 * v[j] <= os.n[j]) : !(2 * v[j] < os.n[j])) return false;
      } else {
        const bool loose = oracle::mod(os.kappa[j], 2) == r;
        if (loose ? !(v[j] <= os.n[j]) : !(v[j] < os.n[j])) return false;
      }
    }
    return true;
  };
  std::set<std::vector<Index>> all, zero, one;
  for (std::size_t k = 0; k < g->size(); ++k) {
    const auto v = testutil::to_vector(g->element(k));
    all.insert(v);
    if (in_class(v, 0)) zero.insert(v);
    if (in_class(v, 1)) one.insert(v);
  }
  std::set<std::vector<Index>> image;
  for (const auto& v : one) {
    const auto w = involution(m, SpectralIndex(v));
    EXPECT_EQ(involution(m, w), SpectralIndex(v));
    image.insert(testutil::to_vector(w.values()));
  }
  std::set<std::vector<Index>> complement;
  for (const auto& v : all) {
    if (!zero.count(v)) complement.insert(v);
  }
  EXPECT_EQ(image.size(), one.size());
  EXPECT_EQ(image, complement);
  const auto nodes = build_node_set(spec);
  EXPECT_EQ(zero.size(), nodes->count_parity(0));
  EXPECT_EQ(one.size(), nodes->count_parity(1));
}

TEST_P(GammaSpecs, LookupIsConsistent) {
  const auto g = build_gamma(testutil::to_spec(GetParam()));
  for (std::size_t k = 0; k < g->size(); ++k) {
    EXPECT_EQ(g->position(g->element(k)), k);
    EXPECT_TRUE(in_gamma(g->spec(), g->element(k)));
  }
}

INSTANTIATE_TEST_SUITE_P(AllSpecs, GammaSpecs, ::testing::ValuesIn(oracle::test_specs()),
                         [](const auto& info) { return "Spec" + std::to_string(info.index); });
