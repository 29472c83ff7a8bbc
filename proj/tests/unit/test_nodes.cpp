// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace lisscheb;

TEST(CglPoint, ExactValues) {
  EXPECT_EQ(cgl_point(4, 0), 1.0);
  EXPECT_EQ(cgl_point(4, 2), 0.0);
  EXPECT_EQ(cgl_point(4, 4), -1.0);
  EXPECT_NEAR(cgl_point(3, 1), 0.5, 1e-16);
  EXPECT_THROW((void)cgl_point(4, 5), IndexOutOfRange);
  EXPECT_THROW((void)cgl_point(4, -1), IndexOutOfRange);
}

TEST(CglPoint, MatchesStdCos) {
  for (Index m = 1; m <= 64; ++m) {
    for (Index i = 0; i <= m; ++i) EXPECT_NEAR(cgl_point(m, i), oracle::cosk(i, m), 4e-16) << m << " " << i;
  }
}

TEST(CosPiRatio, PeriodicAndSymmetric) {
  for (Index m = 1; m <= 30; ++m) {
    for (Index k = -70; k <= 70; ++k) {
      EXPECT_EQ(cos_pi_ratio(k, m), cos_pi_ratio(-k, m));
      EXPECT_EQ(cos_pi_ratio(k, m), cos_pi_ratio(k + 2 * m, m));
      EXPECT_NEAR(cos_pi_ratio(k, m), oracle::cosk(k, m), 1e-15);
    }
  }
}

TEST(NodeSpecTest, DefaultsAndForcedG) {
  const auto s = NodeSpec::shifted({5, 3}, {0, 1});
  EXPECT_EQ(s.g_index(), 0u);
  EXPECT_EQ(s.extent(0), 10);
  EXPECT_EQ(s.extent(1), 6);
  const auto t = NodeSpec::shifted({3, 1, 2}, {0, 0, 0});
  EXPECT_EQ(t.g_index(), 2u);
  EXPECT_THROW((void)NodeSpec::shifted(validate_pairwise_coprime({3, 2}), {0, 0}, 0), ValidationError);
  EXPECT_THROW((void)NodeSpec::shifted({3, 2}, {0}), ValidationError);
  const auto u = NodeSpec::standard({5, 3});
  EXPECT_EQ(u.extent(0), 5);
  EXPECT_FALSE(u.is_shifted());
}

TEST(NodeSetTest, KnownCounts) {
  const auto a = build_node_set(NodeSpec::standard({5, 3}));
  EXPECT_EQ(a->size(), 12u);
  EXPECT_EQ(a->count_parity(0), 6u);
  EXPECT_EQ(a->count_parity(1), 6u);
  EXPECT_EQ(build_node_set(NodeSpec::standard({5, 3, 2}))->size(), 18u);
  const auto b = build_node_set(NodeSpec::shifted({5, 3}, {0, 1}));
  EXPECT_EQ(b->size(), 38u);
  EXPECT_EQ(b->count_parity(0), 18u);
  EXPECT_EQ(b->count_parity(1), 20u);
}

class NodeSpecs : public ::testing::TestWithParam<oracle::Spec> {};

TEST_P(NodeSpecs, EnumerationMatchesDefinition) {
  const auto& os = GetParam();
  const auto nodes = build_node_set(testutil::to_spec(os));
  const auto ref = oracle::index_set(os);
  ASSERT_EQ(nodes->size(), ref.size());
  for (std::size_t k = 0; k < ref.size(); ++k) {
    EXPECT_EQ(testutil::to_vector(nodes->index(k)), ref[k]);
    EXPECT_EQ(nodes->parity(k), oracle::parity_of(os, ref[k]));
    EXPECT_EQ(static_cast<int>(nodes->face(k).size()), oracle::face_size(os, ref[k]));
    EXPECT_NEAR(nodes->weight(k), oracle::weight(os, ref[k]), 1e-17);
    const auto x = oracle::point(os, ref[k]);
    for (std::size_t j = 0; j < os.dim(); ++j) EXPECT_NEAR(nodes->point(k)[j], x[j], 4e-16);
    EXPECT_EQ(nodes->position(ref[k]), k);
  }
}

TEST_P(NodeSpecs, CardinalityClosedForm) {
  const auto& os = GetParam();
  const auto nodes = build_node_set(testutil::to_spec(os));
  for (int r = 0; r < 2; ++r) {
    oracle::Int expect = 1;
    if (os.shifted) {
      for (std::size_t j = 0; j < os.dim(); ++j)
        expect *= oracle::mod(os.kappa[j] + r, 2) == 0 ? os.n[j] + 1 : os.n[j];
    } else {
      // parameter count per parity class: sum over faces of #I_{M,r} 2^#M equals P
      oracle::Int acc = 0;
      for (std::size_t k = 0; k < nodes->size(); ++k) {
        if (nodes->parity(k) == r) acc += oracle::Int{1} << nodes->face(k).size();
      }
      EXPECT_EQ(acc, oracle::product(os.n));
      continue;
    }
    EXPECT_EQ(static_cast<oracle::Int>(nodes->count_parity(r)), expect);
  }
  if (!os.shifted) {
    std::vector<oracle::Int> n1;
    for (auto v : os.n) n1.push_back(v + 1);
    EXPECT_EQ(static_cast<oracle::Int>(nodes->size()) << (os.dim() - 1), oracle::product(n1));
  }
}

TEST(NodeSetTest, FaceCountsMatchIntersectionFormula) {
  for (const auto& os : oracle::test_specs()) {
    if (os.shifted) continue;
    const auto spec = testutil::to_spec(os);
    const auto nodes = build_node_set(spec);
    std::map<FaceSet, Index> seen;
    for (std::size_t k = 0; k < nodes->size(); ++k) ++seen[nodes->face(k)];
    for (const auto& [face, count] : self_intersection_counts(spec.n())) {
      Index expect = 2;
      for (std::size_t j = 0; j < os.dim(); ++j) {
        if (face.contains(j)) expect *= os.n[j] - 1;
      }
      expect >>= face.size();
      EXPECT_EQ(count, expect);
      EXPECT_EQ(seen[face], count) << to_string(face);
    }
  }
}

TEST_P(NodeSpecs, WeightsSumToOne) {
  const auto nodes = build_node_set(testutil::to_spec(GetParam()));
  double s = 0.0;
  for (double w : nodes->weights()) {
    EXPECT_GT(w, 0.0);
    s += w;
  }
  EXPECT_NEAR(s, 1.0, 1e-14);
}

TEST_P(NodeSpecs, PointsAreDistinctAndOnVariety) {
  const auto& os = GetParam();
  const auto spec = testutil::to_spec(os);
  const auto nodes = build_node_set(spec);
  std::vector<std::vector<double>> pts;
  for (std::size_t k = 0; k < nodes->size(); ++k) {
    pts.push_back(testutil::to_vector(nodes->point(k)));
    EXPECT_TRUE(variety_membership(spec, nodes->point(k), 1e-12));
  }
  for (auto s : oracle::group_sizes(pts, 1e-12)) EXPECT_EQ(s, 1u);
}

TEST(NodeSetTest, ShiftedReflectionSymmetry) {
  for (const auto& os : oracle::test_specs()) {
    if (!os.shifted) continue;
    const auto nodes = build_node_set(testutil::to_spec(os));
    std::vector<std::vector<double>> pts;
    for (std::size_t k = 0; k < nodes->size(); ++k) pts.push_back(testutil::to_vector(nodes->point(k)));
    for (std::size_t j = 0; j < os.dim(); ++j) {
      auto flipped = pts;
      for (auto& p : flipped) p[j] = -p[j];
      EXPECT_TRUE(oracle::same_point_set(pts, flipped, 1e-12)) << os.name << " dimension " << j;
    }
  }
}

TEST_P(NodeSpecs, CurveSamplesReproduceNodes) {
  const auto& os = GetParam();
  const auto spec = testutil::to_spec(os);
  const auto nodes = build_node_set(spec);
  const oracle::Int p = oracle::product(os.n);
  for (int r = 0; r < 2; ++r) {
    std::vector<std::vector<double>> expect;
    for (std::size_t k = 0; k < nodes->size(); ++k) {
      if (nodes->parity(k) == r) expect.push_back(testutil::to_vector(nodes->point(k)));
    }
    std::vector<std::vector<double>> got;
    if (!os.shifted) {
      const LCCurve c(spec.n(), 1, std::vector<Index>(os.dim(), 0));
      for (oracle::Int l = r; l < 2 * p; l += 2) {
        got.push_back(lc_eval(c, grid_time(c, l)));
      }
    } else {
      const std::size_t g = spec.g_index();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << os.dim()); ++mask) {
        if ((mask >> g) & 1U) continue;
        std::vector<int> u(os.dim());
        for (std::size_t j = 0; j < os.dim(); ++j) u[j] = ((mask >> j) & 1U) ? -1 : 1;
        const LCCurve c(spec.n(), 2, os.kappa, u);
        for (oracle::Int l = r; l < 4 * p; l += 2) got.push_back(lc_eval(c, grid_time(c, l)));
      }
    }
    EXPECT_TRUE(oracle::same_point_set(expect, got, 1e-9)) << "parity " << r;
  }
}

INSTANTIATE_TEST_SUITE_P(AllSpecs, NodeSpecs, ::testing::ValuesIn(oracle::test_specs()),
                         [](const auto& info) { return "Spec" + std::to_string(info.index); });

TEST(NodeSetTest, LookupRejectsForeignIndex) {
  const auto nodes = build_node_set(NodeSpec::standard({5, 3}));
  EXPECT_FALSE(nodes->find(std::vector<Index>{1, 0}).has_value());
  EXPECT_THROW((void)nodes->position(std::vector<Index>{1, 0}), IndexOutOfRange);
  EXPECT_THROW((void)nodes->position(std::vector<Index>{6, 0}), IndexOutOfRange);
  EXPECT_THROW((void)nodes->position(std::vector<Index>{1}), IndexOutOfRange);
}

TEST(ClassMap, StandardExamples) {
  const auto n = validate_pairwise_coprime({5, 3});
  EXPECT_EQ(class_map_standard(n, 0), MultiIndex({0, 0}));
  EXPECT_EQ(class_map_standard(n, 7), MultiIndex({3, 1}));
  EXPECT_EQ(class_map_standard(n, 15), MultiIndex({5, 3}));
  EXPECT_THROW((void)class_map_standard(n, 30), IndexOutOfRange);
  EXPECT_THROW((void)class_map_standard(n, -1), IndexOutOfRange);
}

TEST(ClassMap, StandardFibersAndParity) {
  for (const auto& os : oracle::test_specs()) {
    if (os.shifted) continue;
    const auto spec = testutil::to_spec(os);
    const auto nodes = build_node_set(spec);
    std::vector<Index> hits(nodes->size(), 0);
    for (Index l = 0; l < 2 * spec.n().product(); ++l) {
      const auto i = class_map_standard(spec.n(), l);
      for (std::size_t j = 0; j < os.dim(); ++j) {
        const Index a = oracle::mod(l, 2 * os.n[j]);
        EXPECT_TRUE(a == i[j] || a == oracle::mod(-i[j], 2 * os.n[j]));
      }
      const auto k = nodes->position(i);
      EXPECT_EQ(nodes->parity(k), l % 2);
      ++hits[k];
    }
    for (std::size_t k = 0; k < nodes->size(); ++k) {
      EXPECT_EQ(hits[k], Index{1} << nodes->face(k).size());
    }
  }
}

TEST(ClassMap, ShiftedExamplesAndFibers) {
  const auto spec = NodeSpec::shifted({5, 3}, {0, 1});
  const std::vector<int> zero{0};
  EXPECT_EQ(class_map_shifted(spec, 1, zero), MultiIndex({1, 0}));
  const auto s0 = NodeSpec::shifted({5, 3}, {0, 0});
  EXPECT_EQ(class_map_shifted(s0, 0, zero), MultiIndex({0, 0}));
  EXPECT_THROW((void)class_map_shifted(spec, 60, zero), IndexOutOfRange);
  EXPECT_THROW((void)class_map_shifted(spec, 0, std::vector<int>{2}), IndexOutOfRange);
  EXPECT_THROW((void)class_map_shifted(spec, 0, std::vector<int>{}), IndexOutOfRange);

  for (const auto& os : oracle::test_specs()) {
    if (!os.shifted) continue;
    const auto sp = testutil::to_spec(os);
    const auto nodes = build_node_set(sp);
    std::vector<Index> hits(nodes->size(), 0);
    const std::size_t d = os.dim();
    Index total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d - 1)); ++mask) {
      std::vector<int> rho(d - 1);
      for (std::size_t b = 0; b + 1 < d; ++b) rho[b] = static_cast<int>((mask >> b) & 1U);
      for (Index l = 0; l < 4 * sp.n().product(); ++l) {
        const auto i = class_map_shifted(sp, l, rho);
        const auto k = nodes->position(i);
        EXPECT_EQ(nodes->parity(k), l % 2);
        ++hits[k];
        ++total;
      }
    }
    EXPECT_EQ(total, 4 * sp.n().product() * (Index{1} << (d - 1)));
    for (std::size_t k = 0; k < nodes->size(); ++k) {
      EXPECT_EQ(hits[k], Index{1} << nodes->face(k).size()) << os.name << " node " << k;
    }
  }
}

TEST(Variety, Examples) {
  const auto spec = NodeSpec::standard({5, 3});
  EXPECT_TRUE(variety_membership(spec, std::vector<double>{1.0, 1.0}, 1e-12));
  EXPECT_FALSE(variety_membership(spec, std::vector<double>{std::cos(oracle::kPi / 10.0), 1.0}, 1e-12));
}

TEST(ChebyshevT, RecurrenceMatchesArccos) {
  oracle::Random rng(3);
  for (int t = 0; t < 200; ++t) {
    const double x = rng.uniform(-1.0, 1.0);
    const Index k = rng.integer(0, 40);
    EXPECT_NEAR(chebyshev_t(k, x), std::cos(static_cast<double>(k) * std::acos(x)), 1e-12);
  }
}
