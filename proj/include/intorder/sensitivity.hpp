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

#ifndef INTORDER_SENSITIVITY_HPP_
#define INTORDER_SENSITIVITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intorder/graphgen.hpp"
#include "intorder/oracle.hpp"

namespace intorder {

// Structural Lipschitz bounds plus, for small graphs, exact c_k values.
struct LipschitzReport {
  std::vector<int> bound_ad;  // |Anc(k)| + |Desc(k)|
  std::vector<int> bound_io;  // in_deg(k) + out_deg(k)
  struct EdgeBound {
    Edge edge;
    int in_deg_child;  // deg_in(j) for edge (i, j)
  };
  std::vector<EdgeBound> edge_bound;
  int max_ad = 0;
  int max_io = 0;
  std::optional<std::vector<int>> exact_ck;
  bool exact_is_lower_bound = false;

  int MaxFor(FaithfulnessMode mode) const {
    return mode == FaithfulnessMode::kAncestral ? max_ad : max_io;
  }
  // Sum of squared bounds, the McDiarmid denominator.
  double SumSquares(FaithfulnessMode mode) const;
};

LipschitzReport BoundsReport(const Dag& dag);

// JSON keyed by node and edge.
std::string ReportJson(const LipschitzReport& report);

// What f(I) = D_top(G, pi_opt(I)) is evaluated with.
struct FlipSetup {
  OracleParams oracle;
  double c = 0.6;  // score constant, must exceed oracle.epsilon
  int exact_limit = 10;
};

// f(I) with the exact optimizer.
int MisorientationCount(const Dag& dag, const InterventionVector& iv,
                        const FlipSetup& setup,
                        const Reachability* reach = nullptr);

// |f(I with k off) - f(I with k on)| holding the other bits at iv.
int FlipEffect(const Dag& dag, const InterventionVector& iv,
               const FlipSetup& setup, NodeId k,
               const Reachability* reach = nullptr);

struct ContextOptions {
  int max_exhaustive_d = 12;  // 2^(d-1) contexts up to this size
  int samples = 256;          // sampled contexts beyond it
  std::uint64_t seed = 0;
};

struct CkResult {
  int value = 0;
  bool exhaustive = true;  // false: sampled contexts, value is a lower bound
  long long contexts = 0;
};

// c_k = max over contexts of FlipEffect. The exact optimizer is always
// used; throws InfeasibleError when d exceeds setup.exact_limit.
CkResult ExactCk(const Dag& dag, const FlipSetup& setup, NodeId k,
                 const ContextOptions& options = {});

// All c_k at once from one table of f over every I in {0,1}^d.
// Requires d <= min(exact_limit, 20).
std::vector<int> ExactCkAll(const Dag& dag, const FlipSetup& setup);

// A_ij = {(k, j) in E : i not in Pa(k)}.
std::vector<Edge> EdgeFlipSet(const Dag& dag, NodeId i, NodeId j);

}  // namespace intorder

#endif  // INTORDER_SENSITIVITY_HPP_
