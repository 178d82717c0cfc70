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


#include "intorder/ordering.hpp"

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"
#include "intorder/errors.hpp"
#include "intorder/rng.hpp"
#include "oracles.hpp"

namespace intorder {
namespace {

using testing::BruteForceBest;
using testing::DirectScore;

Dag Chain3() { return Dag::FromEdges(3, {{0, 1}, {1, 2}}); }

struct Instance {
  Dag dag;
  InterventionVector iv;
  DistanceOracle oracle;
};

Instance Random(int d, double p_e, double p_int, std::uint64_t seed,
                FaithfulnessMode mode = FaithfulnessMode::kAncestral,
                double noise = 0.0) {
  Dag g = GenerateEr(d, p_e, seed);
  InterventionVector iv = SampleInterventions(d, p_int, seed);
  OracleParams p;
  p.mode = mode;
  p.noise = noise;
  p.noise_seed = seed;
  DistanceOracle o = BuildOracle(g, iv, p);
  return {std::move(g), std::move(iv), std::move(o)};
}

TEST(DTop, ChainExamples) {
  const Dag g = Chain3();
  EXPECT_EQ(DTop(g, CausalOrder::Identity(3)), 0);
  EXPECT_EQ(DTop(g, CausalOrder::FromSequence(std::vector<int>{2, 1, 0})), 2);
}

TEST(DTop, MatchesPairwiseCount) {
  Rng rng(1);
  for (int s = 0; s < 100; ++s) {
    const Dag g = GenerateEr(8, 0.4, s);
    std::vector<int> seq(8);
    std::iota(seq.begin(), seq.end(), 0);
    rng.Shuffle(seq.begin(), seq.end());
    const CausalOrder o = CausalOrder::FromSequence(seq);
    EXPECT_EQ(DTop(g, o), testing::PairwiseDTop(g, o.position));
  }
}

TEST(Score, ChainExamples) {
  const auto iv = InterventionVector::FromTargets(3, {0});
  const DistanceOracle o = BuildOracle(Chain3(), iv, OracleParams{});
  // (0.4 + 0.6 * 3) twice
  EXPECT_NEAR(Score(CausalOrder::Identity(3), o, iv, 0.6), 4.4, 1e-12);
  EXPECT_NEAR(Score(CausalOrder::FromSequence(std::vector<int>{2, 1, 0}), o,
                    iv, 0.6),
              0.0, 1e-12);
  const auto none = InterventionVector::FromTargets(3, {});
  const DistanceOracle o0 = BuildOracle(Chain3(), none, OracleParams{});
  EXPECT_EQ(Score(CausalOrder::FromSequence(std::vector<int>{1, 2, 0}), o0,
                  none, 0.6),
            0.0);
}

TEST(Score, RequiresCAboveEpsilon) {
  const auto iv = InterventionVector::FromTargets(3, {0});
  const DistanceOracle o = BuildOracle(Chain3(), iv, OracleParams{});
  EXPECT_THROW(Score(CausalOrder::Identity(3), o, iv, 0.1), ParameterError);
  EXPECT_THROW(PairWeights(o, iv, 0.05), ParameterError);
}

TEST(Score, MatchesDirectSum) {
  Rng rng(2);
  for (int s = 0; s < 60; ++s) {
    const Instance in = Random(7, 0.4, 0.5, s, FaithfulnessMode::kAncestral,
                               s % 2 ? 0.5 : 0.0);
    std::vector<int> seq(7);
    std::iota(seq.begin(), seq.end(), 0);
    rng.Shuffle(seq.begin(), seq.end());
    const CausalOrder o = CausalOrder::FromSequence(seq);
    EXPECT_NEAR(Score(o, in.oracle, in.iv, 0.6),
                DirectScore(o.position, in.oracle, in.iv, 0.6), 1e-9);
  }
}

TEST(OptExact, ChainWithFirstIntervened) {
  const auto iv = InterventionVector::FromTargets(3, {0});
  const DistanceOracle o = BuildOracle(Chain3(), iv, OracleParams{});
  const CausalOrder best = OptExact(o, iv, 0.6);
  EXPECT_LT(best.position[0], best.position[1]);
  EXPECT_LT(best.position[0], best.position[2]);
  EXPECT_EQ(best.position, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(best.provenance, Provenance::kExact);
}

TEST(OptExact, EmptyInterventionGivesIdentity) {
  const Dag g = GenerateEr(7, 0.5, 3);
  const auto iv = InterventionVector::FromTargets(7, {});
  const DistanceOracle o = BuildOracle(g, iv, OracleParams{});
  EXPECT_EQ(OptExact(o, iv, 0.6).position, CausalOrder::Identity(7).position);
}

TEST(OptExact, MatchesEnumeration) {
  int checked = 0;
  for (int s = 0; s < 300; ++s) {
    const int d = 3 + s % 5;  // 3..7
    const auto mode = s % 3 == 0 ? FaithfulnessMode::kRestricted
                                 : FaithfulnessMode::kAncestral;
    const Instance in =
        Random(d, s % 2 ? 0.3 : 0.6, 0.25 + 0.25 * (s % 3), s, mode,
               s % 4 == 3 ? 0.6 : 0.0);
    const auto brute = BruteForceBest(in.oracle, in.iv, 0.6);
    const CausalOrder got = OptExact(in.oracle, in.iv, 0.6);
    ASSERT_TRUE(got.IsPermutation());
    EXPECT_NEAR(DirectScore(got.position, in.oracle, in.iv, 0.6), brute.score,
                1e-9);
    EXPECT_EQ(got.position, brute.position) << "seed " << s;
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

TEST(OptExact, RefusesAboveLimit) {
  const Instance in = Random(11, 0.3, 0.5, 1);
  EXPECT_THROW(OptExact(in.oracle, in.iv, 0.6), InfeasibleError);
  EXPECT_NO_THROW(OptExact(in.oracle, in.iv, 0.6, 11));
  // Limits above the hard cap are clamped to it.
  const Instance big = Random(kExactHardLimit + 1, 0.3, 0.5, 1);
  EXPECT_THROW(OptExact(big.oracle, big.iv, 0.6, kExactHardLimit + 5),
               InfeasibleError);
}

TEST(OptExact, MaximizerRespectsPrecedence) {
  for (int s = 0; s < 150; ++s) {
    const Instance in = Random(4 + s % 5, 0.5, 0.5, s);
    const CausalOrder best = OptExact(in.oracle, in.iv, 0.6);
    for (int i = 0; i < in.dag.size(); ++i) {
      for (int j = 0; j < in.dag.size(); ++j) {
        if (in.oracle.Supra(i, j)) {
          EXPECT_LT(best.position[i], best.position[j]);
        }
      }
    }
  }
}

TEST(OptExact, DTopInvariantUnderConsistentRelabeling) {
  Rng rng(4);
  for (int s = 0; s < 60; ++s) {
    const int d = 4 + s % 4;
    const Instance in = Random(d, 0.4, 0.5, s);
    std::vector<int> sigma(d);
    std::iota(sigma.begin(), sigma.end(), 0);
    rng.Shuffle(sigma.begin(), sigma.end());
    std::vector<Edge> edges;
    for (const Edge& e : in.dag.edges()) edges.push_back({sigma[e.from], sigma[e.to]});
    const Dag g2 = Dag::FromEdges(d, edges);
    std::vector<NodeId> t2;
    for (NodeId k : in.iv.targets()) t2.push_back(sigma[k]);
    const auto iv2 = InterventionVector::FromTargets(d, t2);
    const DistanceOracle o2 = BuildOracle(g2, iv2, OracleParams{});
    const int relabeled = DTop(g2, OptExact(o2, iv2, 0.6));
    // Same tie-break expressed on the original labels.
    const auto brute = BruteForceBest(in.oracle, in.iv, 0.6, sigma);
    EXPECT_EQ(relabeled, testing::PairwiseDTop(in.dag, brute.position));
  }
}

TEST(Evaluate, FnrBounds) {
  for (int s = 0; s < 50; ++s) {
    const Instance in = Random(8, 0.3, 0.5, s);
    const OrderEval ev =
        Evaluate(in.dag, OptExact(in.oracle, in.iv, 0.6), in.oracle, in.iv, 0.6);
    EXPECT_LE(ev.d_top, in.dag.edge_count());
    if (in.dag.edge_count() == 0) {
      EXPECT_FALSE(ev.fnr.has_value());
    } else {
      ASSERT_TRUE(ev.fnr.has_value());
      EXPECT_DOUBLE_EQ(*ev.fnr, ev.d_top / double(in.dag.edge_count()));
      EXPECT_GE(*ev.fnr, 0.0);
      EXPECT_LE(*ev.fnr, 1.0);
    }
  }
}

TEST(LinearExtension, ChainFirstPlacedFirst) {
  const auto iv = InterventionVector::FromTargets(3, {0});
  const DistanceOracle o = BuildOracle(Chain3(), iv, OracleParams{});
  EXPECT_EQ(LinearExtension(o, iv).position[0], 0);
}

TEST(LinearExtension, SmallestAvailableLabel) {
  // 2 -> 0 forced; 1 is free and emitted as soon as it is the smallest.
  const Dag g = Dag::FromEdges(3, {{2, 0}});
  const auto iv = InterventionVector::FromTargets(3, {2});
  const DistanceOracle o = BuildOracle(g, iv, OracleParams{});
  EXPECT_EQ(LinearExtension(o, iv).Sequence(), (std::vector<NodeId>{1, 2, 0}));
}

TEST(OptHeuristic, EmptyInterventionGivesIdentity) {
  const Dag g = GenerateEr(12, 0.4, 1);
  const auto iv = InterventionVector::FromTargets(12, {});
  const DistanceOracle o = BuildOracle(g, iv, OracleParams{});
  EXPECT_EQ(OptHeuristic(o, iv, 0.6, 9).position,
            CausalOrder::Identity(12).position);
}

TEST(OptHeuristic, NeverBelowStageOneNorAboveExact) {
  int agree = 0;
  const int n = 500;
  for (int s = 0; s < n; ++s) {
    const Instance in = Random(4 + s % 5, s % 2 ? 0.3 : 0.6, 0.5, s);
    HeuristicTrace trace;
    const CausalOrder h = OptHeuristic(in.oracle, in.iv, 0.6, s, &trace);
    ASSERT_TRUE(h.IsPermutation());
    EXPECT_EQ(h.provenance, Provenance::kHeuristic);
    const double stage1 =
        DirectScore(LinearExtension(in.oracle, in.iv).position, in.oracle, in.iv, 0.6);
    const double hs = DirectScore(h.position, in.oracle, in.iv, 0.6);
    const double ex = testing::BruteForceBest(in.oracle, in.iv, 0.6).score;
    EXPECT_GE(hs, stage1 - 1e-9);
    EXPECT_NEAR(trace.stage1_score, stage1, 1e-9);
    EXPECT_LE(hs, ex + 1e-9);
    agree += std::abs(hs - ex) <= 1e-9;
  }
  EXPECT_GE(agree, 0.95 * n);
}

TEST(OptHeuristic, DeterministicGivenSeed) {
  const Instance in = Random(60, 0.2, 0.5, 3);
  EXPECT_EQ(OptHeuristic(in.oracle, in.iv, 0.6, 5).position,
            OptHeuristic(in.oracle, in.iv, 0.6, 5).position);
}

TEST(CheckOrientationLemma, Examples) {
  const Dag g = Chain3();
  const auto all = InterventionVector::FromTargets(3, {0, 1, 2});
  const auto rev = CausalOrder::FromSequence(std::vector<int>{2, 1, 0});
  for (auto mode : {FaithfulnessMode::kAncestral, FaithfulnessMode::kRestricted}) {
    EXPECT_EQ(CheckOrientationLemma(g, all, rev, mode).size(), 2u);
    const auto none = InterventionVector::FromTargets(3, {});
    EXPECT_TRUE(CheckOrientationLemma(g, none, rev, mode).empty());
  }
}

TEST(CheckOrientationLemma, ConditionMatchesSetDefinition) {
  // Violations are exactly the reversed edges whose evidence set is hit.
  Rng rng(8);
  for (int s = 0; s < 80; ++s) {
    const Dag g = GenerateEr(7, 0.4, s);
    const auto iv = SampleInterventions(7, 0.5, s);
    std::vector<int> seq(7);
    std::iota(seq.begin(), seq.end(), 0);
    rng.Shuffle(seq.begin(), seq.end());
    const CausalOrder o = CausalOrder::FromSequence(seq);
    const auto closure = testing::ClosureByMatrixPower(g);
    const auto adj = testing::Adjacency(g);
    for (auto mode : {FaithfulnessMode::kAncestral, FaithfulnessMode::kRestricted}) {
      std::vector<Edge> want;
      for (const Edge& e : g.edges()) {
        bool hit = iv.contains(e.to);
        for (int k = 0; k < 7; ++k) {
          const bool in_j = mode == FaithfulnessMode::kAncestral
                                ? closure[k][e.to]
                                : adj[k][e.to];
          const bool in_i = mode == FaithfulnessMode::kAncestral
                                ? closure[k][e.from]
                                : adj[k][e.from];
          hit = hit || (in_j && !in_i && iv.contains(k));
        }
        if (hit && o.position[e.from] > o.position[e.to]) want.push_back(e);
      }
      auto got = CheckOrientationLemma(g, iv, o, mode);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want);
    }
  }
}

TEST(CheckOrientationLemma, AncestralHoldsForExactMaximizer) {
  for (int s = 0; s < 300; ++s) {
    const Instance in = Random(4 + s % 4, s % 2 ? 0.3 : 0.6, 0.5, s);
    const CausalOrder best = OptExact(in.oracle, in.iv, 0.6);
    EXPECT_TRUE(CheckOrientationLemma(in.dag, in.iv, best,
                                      FaithfulnessMode::kAncestral)
                    .empty())
        << "seed " << s;
  }
}

}  // namespace
}  // namespace intorder
