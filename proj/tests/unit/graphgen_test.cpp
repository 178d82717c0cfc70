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


#include "intorder/graphgen.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "gtest/gtest.h"
#include "intorder/errors.hpp"
#include "intorder/harness.hpp"
#include "intorder/rng.hpp"
#include "intorder/stats.hpp"
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

void ExpectAcyclicWitness(const Dag& g) {
  for (const Edge& e : g.edges()) {
    EXPECT_LT(g.arrival_rank(e.from), g.arrival_rank(e.to));
    EXPECT_NE(e.from, e.to);
  }
  for (int k = 1; k < g.edge_count(); ++k) {
    EXPECT_NE(g.edges()[k - 1], g.edges()[k]);
  }
}

TEST(GenerateEr, ZeroAndOneProbability) {
  EXPECT_EQ(GenerateEr(5, 0.0, 1).edge_count(), 0);
  const Dag full = GenerateEr(5, 1.0, 1);
  EXPECT_EQ(full.edge_count(), 10);
  ExpectAcyclicWitness(full);
}

TEST(GenerateEr, RejectsBadProbability) {
  EXPECT_THROW(GenerateEr(5, 1.5, 0), ParameterError);
  EXPECT_THROW(GenerateEr(5, -0.1, 0), ParameterError);
  EXPECT_THROW(GenerateEr(0, 0.5, 0), ParameterError);
}

TEST(GenerateEr, MeanEdgeCount) {
  const int n = 10000;
  double sum = 0.0;
  for (int s = 0; s < n; ++s) sum += GenerateEr(100, 0.2, s).edge_count();
  const double mu = 0.2 * 100 * 99 / 2.0;  // 990
  const double se = std::sqrt(mu * 0.8 / n);
  EXPECT_NEAR(sum / n, mu, 4.0 * se);
}

TEST(GenerateEr, PerPairFrequency) {
  // Pair (a, b) is an edge in either direction with probability p_e.
  const int n = 4000, d = 6;
  const double p = 0.3;
  std::vector<int> hits(d * d, 0);
  for (int s = 0; s < n; ++s) {
    const Dag g = GenerateEr(d, p, s);
    for (const Edge& e : g.edges()) {
      ++hits[std::min(e.from, e.to) * d + std::max(e.from, e.to)];
    }
  }
  const double tol = 4.0 * std::sqrt(p * (1 - p) / n);
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      EXPECT_NEAR(hits[a * d + b] / static_cast<double>(n), p, tol);
    }
  }
}

TEST(GenerateEr, AcyclicAndDeterministic) {
  for (int s = 0; s < 50; ++s) {
    const Dag g = GenerateEr(20, 0.4, s);
    ExpectAcyclicWitness(g);
    EXPECT_TRUE(g == GenerateEr(20, 0.4, s));
  }
  EXPECT_FALSE(GenerateEr(20, 0.4, 1) == GenerateEr(20, 0.4, 2));
}

TEST(GenerateSparseEr, Examples) {
  EXPECT_EQ(GenerateSparseEr(2, 2.0, 5).edge_count(), 1);
  EXPECT_THROW(GenerateSparseEr(2, 3.0, 5), ParameterError);
  EXPECT_THROW(GenerateSparseEr(10, 0.0, 5), ParameterError);
  const Dag g = GenerateSparseEr(100, 2.0, 3);
  EXPECT_EQ(g.meta().ensemble, Ensemble::kSparseEr);
  EXPECT_DOUBLE_EQ(g.meta().c, 2.0);
  EXPECT_DOUBLE_EQ(g.meta().p_e, 0.02);
}

TEST(GenerateSparseEr, MeanEdgeCount) {
  const int n = 10000;
  double sum = 0.0;
  for (int s = 0; s < n; ++s) sum += GenerateSparseEr(100, 2.0, s).edge_count();
  const double mu = 2.0 * 99 / 2.0;
  EXPECT_NEAR(sum / n, mu, 4.0 * std::sqrt(mu / n));
}

TEST(GenerateSparseEr, MeanDegreeNearC) {
  double deg = 0.0;
  const int n = 50;
  for (int s = 0; s < n; ++s) {
    deg += 2.0 * GenerateSparseEr(1000, 3.0, s).edge_count() / 1000.0;
  }
  EXPECT_NEAR(deg / n, 3.0 * 999 / 1000, 0.05);
}

TEST(GenerateBa, SingleNodeIsEmpty) {
  EXPECT_EQ(GenerateBa(1, 3, 1.0, 0).edge_count(), 0);
}

TEST(GenerateBa, RejectsBadParameters) {
  EXPECT_THROW(GenerateBa(10, 3, 0.0, 0), ParameterError);
  EXPECT_THROW(GenerateBa(10, 0, 1.0, 0), ParameterError);
}

TEST(GenerateBa, EdgeCountAndInDegree) {
  for (int d : {1, 2, 3, 4, 10, 100}) {
    const Dag g = GenerateBa(d, 3, 9.0, d);
    EXPECT_EQ(g.edge_count(), BaEdgeCount(d, 3));
    // m*d - m(m+1)/2 once d > m
    if (d > 3) {
      EXPECT_EQ(g.edge_count(), 3 * d - 6);
    }
    ExpectAcyclicWitness(g);
    const GraphStats st = ComputeStats(g);
    for (int v = 0; v < d; ++v) {
      const int step = g.arrival_rank(v);
      EXPECT_EQ(st.in_deg[v], std::min(3, step));
    }
  }
}

TEST(GenerateBa, Deterministic) {
  EXPECT_TRUE(GenerateBa(300, 3, 3.0, 11) == GenerateBa(300, 3, 3.0, 11));
  EXPECT_FALSE(GenerateBa(300, 3, 3.0, 11) == GenerateBa(300, 3, 3.0, 12));
}

TEST(GenerateBa, LabelsAreNotArrivalOrder) {
  // The label permutation is random, so identity is a rare witness.
  int identity = 0;
  for (int s = 0; s < 20; ++s) {
    const Dag g = GenerateBa(30, 3, 1.0, s);
    std::vector<int> iota(30);
    std::iota(iota.begin(), iota.end(), 0);
    identity += std::equal(iota.begin(), iota.end(), g.arrival().begin());
  }
  EXPECT_EQ(identity, 0);
}

TEST(GenerateBa, HubsGrowLikeBeta) {
  // Max degree scales like d^beta; kappa = 1 gives the heaviest tail.
  const double g1 = FitBaMaxDegree(3, 1.0, {100, 400, 1600}, 5, 1).beta_hat;
  const double g9 = FitBaMaxDegree(3, 9.0, {100, 400, 1600}, 5, 1).beta_hat;
  EXPECT_GT(g1, g9);
  EXPECT_NEAR(g1, GammaOf(3, 1.0).beta, 0.15);
}

TEST(GenerateBa, DegreeBoundFractionDecreasesInC) {
  const int n = 200, d = 200;
  const double beta = GammaOf(3, 3.0).beta;
  std::vector<double> ratio;
  std::vector<int> maxdeg;
  for (int s = 0; s < n; ++s) {
    maxdeg.push_back(MaxTotalDegree(GenerateBa(d, 3, 3.0, s)));
    ratio.push_back(maxdeg.back() / std::pow(d, beta));
  }
  double prev = 1.0;
  for (double c : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    int over = 0;
    for (int md : maxdeg) over += md > 3 + c * std::pow(d, beta);
    const double frac = over / static_cast<double>(n);
    EXPECT_LE(frac, prev);
    prev = frac;
  }
  // The 99th percentile estimate of C leaves about 1% of graphs above it.
  const double c99 = Quantile(ratio, 0.99);
  int above = 0;
  for (double r : ratio) above += r > c99;
  EXPECT_LE(above, 2);
}

TEST(GammaOf, Examples) {
  EXPECT_DOUBLE_EQ(GammaOf(3, 3).gamma, 3.0);
  EXPECT_DOUBLE_EQ(GammaOf(3, 3).beta, 0.5);
  EXPECT_DOUBLE_EQ(GammaOf(3, 9).gamma, 5.0);
  EXPECT_DOUBLE_EQ(GammaOf(3, 9).beta, 0.25);
  EXPECT_DOUBLE_EQ(GammaOf(1, 1).gamma, 3.0);
  EXPECT_DOUBLE_EQ(GammaOf(1, 1).beta, 0.5);
  EXPECT_NEAR(GammaOf(3, 1).gamma, 7.0 / 3.0, 1e-15);
  EXPECT_THROW(GammaOf(3, 0), ParameterError);
}

TEST(Dag, RejectsInvalidInput) {
  EXPECT_THROW(Dag::FromEdges(3, {{0, 0}}), ParameterError);
  EXPECT_THROW(Dag::FromEdges(3, {{0, 1}, {0, 1}}), ParameterError);
  EXPECT_THROW(Dag::FromEdges(3, {{0, 1}, {1, 2}, {2, 0}}), ParameterError);
  EXPECT_THROW(Dag::FromEdges(3, {{0, 3}}), ParameterError);
  EXPECT_THROW(Dag(2, {1, 0}, {{0, 1}}), ParameterError);
}

TEST(Dag, FromEdgesUsesSmallestLabelTopologicalOrder) {
  const Dag g = Dag::FromEdges(4, {{3, 0}, {2, 1}});
  const std::vector<NodeId> want = {2, 1, 3, 0};
  EXPECT_TRUE(std::equal(want.begin(), want.end(), g.arrival().begin()));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(0, 3));
}

TEST(Reachability, Chain) {
  const Reachability r(Chain(3));
  EXPECT_TRUE(r.Reaches(0, 1));
  EXPECT_TRUE(r.Reaches(0, 2));
  EXPECT_TRUE(r.Reaches(1, 2));
  EXPECT_EQ(r.PairCount(), 3u);
  EXPECT_FALSE(r.Reaches(0, 0));
  EXPECT_FALSE(r.Reaches(2, 0));
}

TEST(Reachability, EmptyGraph) {
  const Reachability r(GenerateEr(6, 0.0, 0));
  EXPECT_EQ(r.PairCount(), 0u);
}

TEST(Reachability, MatchesMatrixPowerClosure) {
  for (int s = 0; s < 40; ++s) {
    for (int d : {8, 70}) {
      const Dag g = GenerateEr(d, s % 2 ? 0.2 : 0.5, s);
      const Reachability r(g);
      const auto closure = testing::ClosureByMatrixPower(g);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          ASSERT_EQ(r.Reaches(i, j), closure[i][j]) << i << " " << j;
        }
        EXPECT_FALSE(r.Reaches(i, i));
      }
    }
  }
}

TEST(ComputeStats, StarAndChain) {
  const GraphStats star = ComputeStats(Star(6));
  EXPECT_EQ(star.desc_sizes[0], 5);
  EXPECT_EQ(star.anc_sizes[0], 0);
  EXPECT_EQ(star.max_total_deg, 5);
  const GraphStats chain = ComputeStats(Chain(4));
  EXPECT_EQ(chain.anc_sizes, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(chain.desc_sizes, (std::vector<int>{3, 2, 1, 0}));
}

TEST(ComputeStats, MatchesClosureSums) {
  for (int s = 0; s < 30; ++s) {
    const Dag g = GenerateEr(8, 0.4, s);
    const GraphStats st = ComputeStats(g);
    const auto closure = testing::ClosureByMatrixPower(g);
    int in_sum = 0, out_sum = 0, maxdeg = 0;
    for (int v = 0; v < 8; ++v) {
      int anc = 0, desc = 0;
      for (int u = 0; u < 8; ++u) {
        anc += closure[u][v];
        desc += closure[v][u];
      }
      EXPECT_EQ(st.anc_sizes[v], anc);
      EXPECT_EQ(st.desc_sizes[v], desc);
      in_sum += st.in_deg[v];
      out_sum += st.out_deg[v];
      maxdeg = std::max(maxdeg, st.in_deg[v] + st.out_deg[v]);
    }
    EXPECT_EQ(in_sum, st.edge_count);
    EXPECT_EQ(out_sum, st.edge_count);
    EXPECT_EQ(st.max_total_deg, maxdeg);
  }
}

TEST(EdgeList, RoundTrip) {
  for (const Dag& g : {GenerateEr(30, 0.3, 7), GenerateSparseEr(40, 3, 2),
                       GenerateBa(50, 3, 3.0, 9)}) {
    std::istringstream in(EdgeListString(g));
    const Dag back = ReadEdgeList(in);
    EXPECT_EQ(back.size(), g.size());
    EXPECT_TRUE(std::equal(back.edges().begin(), back.edges().end(),
                           g.edges().begin(), g.edges().end()));
    EXPECT_EQ(back.meta().ensemble, g.meta().ensemble);
    EXPECT_EQ(back.meta().seed, g.meta().seed);
    // Second trip is byte-identical.
    EXPECT_EQ(EdgeListString(back), EdgeListString(g));
  }
}

TEST(EdgeList, HeaderFormat) {
  const std::string s = EdgeListString(GenerateEr(50, 0.4, 7));
  EXPECT_EQ(s.substr(0, s.find('\n')), "d=50 model=er p_e=0.4 seed=7");
  const std::string b = EdgeListString(GenerateBa(10, 3, 3.0, 1));
  EXPECT_EQ(b.substr(0, b.find('\n')), "d=10 model=ba m=3 kappa=3 seed=1");
}

TEST(EdgeList, ErrorsNameTheLine) {
  std::istringstream bad("d=3 model=custom seed=0\n0 1\n1 x\n");
  try {
    ReadEdgeList(bad);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream cyc("d=2 model=custom seed=0\n0 1\n1 0\n");
  EXPECT_THROW(ReadEdgeList(cyc), FormatError);
  std::istringstream none("");
  EXPECT_THROW(ReadEdgeList(none), FormatError);
}

}  // namespace
}  // namespace intorder
