// Copyright 2026 The intorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "intorder/sensitivity.hpp"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "intorder/errors.hpp"
#include "intorder/ordering.hpp"
#include "intorder/stats.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace intorder {
namespace {

Dag Chain(int d) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < d; ++i) e.push_back({i, i + 1});
  return Dag::FromEdges(d, e);
}

Dag Star(int d) {
  std::vector<Edge> e;
  for (int i = 1; i < d; ++i) e.push_back({0, i});
  return Dag::FromEdges(d, e);
}

FlipSetup MakeSetup(FaithfulnessMode mode) {
  FlipSetup s;
  s.oracle.mode = mode;
  return s;
}

// f over every intervention mask, straight from the enumeration oracle.
std::vector<int> FTable(const Dag& g, FaithfulnessMode mode) {
  const int d = g.size();
  std::vector<int> f(1u << d);
  OracleParams p;
  p.mode = mode;
  for (std::uint32_t m = 0; m < f.size(); ++m) {
    const auto iv = InterventionVector::FromMask(d, m);
    const auto best = testing::BruteForceBest(BuildOracle(g, iv, p), iv, 0.6);
    f[m] = testing::PairwiseDTop(g, best.position);
  }
  return f;
}

TEST(BoundsReport, ChainOfFour) {
  const LipschitzReport r = BoundsReport(Chain(4));
  EXPECT_EQ(r.bound_ad, (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(r.bound_io, (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(r.max_ad, 3);
}

TEST(BoundsReport, Star) {
  const LipschitzReport r = BoundsReport(Star(6));
  EXPECT_EQ(r.bound_ad[0], 5);
  for (int k = 1; k < 6; ++k) EXPECT_EQ(r.bound_ad[k], 1);
  ASSERT_EQ(r.edge_bound.size(), 5u);
  for (const auto& eb : r.edge_bound) EXPECT_EQ(eb.in_deg_child, 1);
}

TEST(BoundsReport, SumSquaresMatchesDirectSum) {
  const Dag g = GenerateEr(30, 0.2, 3);
  const LipschitzReport r = BoundsReport(g);
  const GraphStats st = ComputeStats(g);
  double ad = 0.0, io = 0.0;
  for (int k = 0; k < 30; ++k) {
    const double a = st.anc_sizes[k] + st.desc_sizes[k];
    const double b = st.in_deg[k] + st.out_deg[k];
    ad += a * a;
    io += b * b;
  }
  EXPECT_DOUBLE_EQ(r.SumSquares(FaithfulnessMode::kAncestral), ad);
  EXPECT_DOUBLE_EQ(r.SumSquares(FaithfulnessMode::kRestricted), io);
}

TEST(BoundsReport, BaDegreeBoundWithEstimatedC) {
  // C_hat is the 99th percentile of max_total_deg / d^beta over seeds.
  const int d = 200;
  const double beta = GammaOf(3, 3.0).beta;
  std::vector<double> ratio;
  for (int s = 0; s < 200; ++s) {
    ratio.push_back(MaxTotalDegree(GenerateBa(d, 3, 3.0, s)) / std::pow(d, beta));
  }
  const double c_hat = Quantile(ratio, 0.99);
  int within = 0;
  for (int s = 1000; s < 1100; ++s) {
    within += BoundsReport(GenerateBa(d, 3, 3.0, s)).max_io <=
              3 + c_hat * std::pow(d, beta);
  }
  EXPECT_GE(within, 95);
}

TEST(ReportJson, KeyedByNodeAndEdge) {
  const auto j = nlohmann::json::parse(ReportJson(BoundsReport(Chain(3))));
  EXPECT_EQ(j["nodes"]["1"]["bound_ad"], 2);
  EXPECT_EQ(j["nodes"]["1"]["bound_io"], 2);
  EXPECT_EQ(j["edges"]["0->1"], 1);
  EXPECT_EQ(j["max_ad"], 2);
}

TEST(ExactCk, IsolatedNodeIsZero) {
  // Node 3 touches nothing.
  const Dag g = Dag::FromEdges(4, {{0, 1}, {1, 2}});
  for (auto mode : {FaithfulnessMode::kAncestral, FaithfulnessMode::kRestricted}) {
    const CkResult r = ExactCk(g, MakeSetup(mode), 3);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.contexts, 8);
    EXPECT_EQ(r.value, 0);
  }
}

TEST(ExactCk, StarHubRestricted) {
  const Dag g = Star(6);
  const CkResult r = ExactCk(g, MakeSetup(FaithfulnessMode::kRestricted), 0);
  EXPECT_LE(r.value, 5);
  EXPECT_LE(r.value, BoundsReport(g).bound_io[0]);
}

TEST(ExactCk, MatchesEnumerationTable) {
  for (int s = 0; s < 12; ++s) {
    const int d = 4 + s % 3;
    const Dag g = GenerateEr(d, 0.5, s);
    for (auto mode : {FaithfulnessMode::kAncestral, FaithfulnessMode::kRestricted}) {
      const auto f = FTable(g, mode);
      const auto all = ExactCkAll(g, MakeSetup(mode));
      for (int k = 0; k < d; ++k) {
        int want = 0;
        for (std::uint32_t m = 0; m < f.size(); ++m) {
          want = std::max(want, std::abs(f[m] - f[m ^ (1u << k)]));
        }
        EXPECT_EQ(all[k], want);
        EXPECT_EQ(ExactCk(g, MakeSetup(mode), k).value, want);
      }
    }
  }
}

TEST(ExactCk, SampledContextsAreLabeledLowerBound) {
  const Dag g = GenerateEr(7, 0.4, 2);
  ContextOptions opts;
  opts.max_exhaustive_d = 5;
  opts.samples = 16;
  const CkResult sampled = ExactCk(g, MakeSetup(FaithfulnessMode::kAncestral), 2, opts);
  EXPECT_FALSE(sampled.exhaustive);
  EXPECT_EQ(sampled.contexts, 16);
  EXPECT_LE(sampled.value, ExactCk(g, MakeSetup(FaithfulnessMode::kAncestral), 2).value);
}

TEST(ExactCk, RefusesLargeGraphs) {
  EXPECT_THROW(ExactCk(GenerateEr(11, 0.3, 1), FlipSetup{}, 0), InfeasibleError);
}

TEST(ExactCk, TieBreakCanExceedStructuralBound) {
  // With I empty every order ties and the identity misorients all four
  // edges; intervening on 3 pins 3 before 0 and 2 and the tie-break also
  // moves 1, so f drops by 3 although |AN_3| + |DE_3| = 2.
  const Dag g = Dag::FromEdges(4, {{1, 0}, {1, 2}, {2, 0}, {3, 0}, {3, 2}});
  const FlipSetup setup = MakeSetup(FaithfulnessMode::kAncestral);
  EXPECT_EQ(MisorientationCount(g, InterventionVector::FromMask(4, 0), setup), 4);
  EXPECT_EQ(MisorientationCount(g, InterventionVector::FromMask(4, 8), setup), 1);
  EXPECT_EQ(BoundsReport(g).bound_ad[3], 2);
  EXPECT_EQ(ExactCk(g, setup, 3).value, 3);
}

TEST(EdgeFlipSet, NoParents) {
  EXPECT_TRUE(EdgeFlipSet(Chain(3), 1, 0).empty());
}

TEST(EdgeFlipSet, Collider) {
  // a=0 -> j=2 <- b=1; a is not a parent of b.
  const Dag g = Dag::FromEdges(3, {{0, 2}, {1, 2}});
  EXPECT_EQ(EdgeFlipSet(g, 0, 2), (std::vector<Edge>{{0, 2}, {1, 2}}));
  // With 0 -> 1 added, (1, 2) leaves the set.
  const Dag g2 = Dag::FromEdges(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(EdgeFlipSet(g2, 0, 2), (std::vector<Edge>{{0, 2}}));
}

TEST(EdgeFlipSet, BoundedByInDegree) {
  for (int s = 0; s < 20; ++s) {
    const Dag g = GenerateEr(8, 0.5, s);
    const auto adj = testing::Adjacency(g);
    const GraphStats st = ComputeStats(g);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const auto a = EdgeFlipSet(g, i, j);
        EXPECT_LE(static_cast<int>(a.size()), st.in_deg[j]);
        std::vector<Edge> want;
        for (int k = 0; k < 8; ++k) {
          if (adj[k][j] && !adj[i][k]) want.push_back({k, j});
        }
        EXPECT_EQ(a, want);
      }
    }
  }
}

}  // namespace
}  // namespace intorder
