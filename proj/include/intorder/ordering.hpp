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

#ifndef INTORDER_ORDERING_HPP_
#define INTORDER_ORDERING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intorder/graphgen.hpp"
#include "intorder/oracle.hpp"

namespace intorder {

enum class Provenance { kExact, kHeuristic, kLinearExtension };
std::string ProvenanceName(Provenance p);

// A permutation stored as positions: position[v] is the slot of node v.
struct CausalOrder {
  std::vector<int> position;
  Provenance provenance = Provenance::kExact;

  int size() const { return static_cast<int>(position.size()); }
  // Nodes listed slot by slot.
  std::vector<NodeId> Sequence() const;
  static CausalOrder FromSequence(std::span<const NodeId> seq,
                                  Provenance p = Provenance::kExact);
  static CausalOrder Identity(int d, Provenance p = Provenance::kExact);
  bool IsPermutation() const;
};

struct OrderEval {
  double score = 0.0;
  int d_top = 0;
  std::optional<double> fnr;  // empty when the graph has no edges
};

// Dense table of the score contribution W(x, y) earned when x precedes y:
//   W(x, y) = (D_xy - eps) + c * d * [D_xy > eps]   if x is intervened,
//   W(x, y) = 0                                        otherwise.
class PairWeights {
 public:
  // Throws ParameterError unless c > eps.
  PairWeights(const DistanceOracle& oracle, const InterventionVector& iv,
              double c);

  int size() const { return d_; }
  double operator()(NodeId x, NodeId y) const {
    return w_[static_cast<std::size_t>(x) * d_ + y];
  }
  // Score differences below this are treated as ties.
  double tolerance() const { return tolerance_; }

 private:
  int d_;
  std::vector<double> w_;
  double tolerance_;
};

// Sum over ordered pairs (i in I, j) with position[i] < position[j].
double Score(std::span<const int> position, const PairWeights& weights);
double Score(const CausalOrder& order, const DistanceOracle& oracle,
             const InterventionVector& iv, double c);

// Number of edges (i, j) with position[i] > position[j].
int DTop(const Dag& dag, std::span<const int> position);
inline int DTop(const Dag& dag, const CausalOrder& order) {
  return DTop(dag, order.position);
}

OrderEval Evaluate(const Dag& dag, const CausalOrder& order,
                   const DistanceOracle& oracle, const InterventionVector& iv,
                   double c);

inline constexpr int kExactLimit = 10;
// Hard ceiling for callers raising the exact limit (memory is 2^d * d).
inline constexpr int kExactHardLimit = 16;

// Score maximizer with the lexicographic tie-break on position vectors.
// Exact dynamic program over prefix sets; throws InfeasibleError when
// d > limit.
CausalOrder OptExact(const DistanceOracle& oracle,
                     const InterventionVector& iv, double c,
                     int limit = kExactLimit);

// Precedence relation R = {(i, j) : i in I, D_ij > eps} extended to a total
// order by always emitting the smallest available label.
CausalOrder LinearExtension(const DistanceOracle& oracle,
                            const InterventionVector& iv);

struct HeuristicTrace {
  double stage1_score = 0.0;
  double final_score = 0.0;
  int passes = 0;
  int moves = 0;
};

// LinearExtension followed by first-improvement single-node insertion until
// a full pass finds no gain. The seed only fixes the node scan order.
CausalOrder OptHeuristic(const DistanceOracle& oracle,
                         const InterventionVector& iv, double c,
                         std::uint64_t seed, HeuristicTrace* trace = nullptr);

// Edges whose sufficient orientation condition holds under `iv` (child
// intervened, or an intervened node in AN_j \ AN_i, resp. Pa_j \ Pa_i) but
// which `order` still places child-first.
std::vector<Edge> CheckOrientationLemma(const Dag& dag,
                                        const InterventionVector& iv,
                                        const CausalOrder& order,
                                        FaithfulnessMode mode,
                                        const Reachability* reach = nullptr);

}  // namespace intorder

#endif  // INTORDER_ORDERING_HPP_
