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

#ifndef INTORDER_ORACLE_HPP_
#define INTORDER_ORACLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "intorder/graphgen.hpp"

namespace intorder {

// I in {0,1}^d, sampled i.i.d. Bernoulli(p_int).
struct InterventionVector {
  std::vector<std::uint8_t> bits;
  double p_int = 0.0;

  int size() const { return static_cast<int>(bits.size()); }
  bool contains(NodeId k) const { return bits[k] != 0; }
  int count() const;
  std::vector<NodeId> targets() const;

  static InterventionVector FromTargets(int d, const std::vector<NodeId>& t);
  static InterventionVector FromMask(int d, std::uint64_t mask);
  std::uint64_t Mask() const;  // d <= 64 only
};

InterventionVector SampleInterventions(int d, double p_int,
                                       std::uint64_t seed);

enum class FaithfulnessMode {
  kAncestral,   // D_ij > eps  <=>  path i ~> j
  kRestricted,  // D_ij > eps  <=>  edge i -> j
};

std::string ModeName(FaithfulnessMode mode);
FaithfulnessMode ParseMode(const std::string& name);

struct OracleParams {
  double epsilon = 0.1;
  double delta = 0.4;  // supra-threshold margin
  FaithfulnessMode mode = FaithfulnessMode::kAncestral;
  // Noise level eta in [0, 1). Zero gives D in {0, eps + delta}.
  double noise = 0.0;
  std::uint64_t noise_seed = 0;
};

// Distances D_ij for every intervened source i and every j != i. Rows of
// non-intervened sources are not materialized. Immutable once built.
class DistanceOracle {
 public:
  int size() const { return d_; }
  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }
  FaithfulnessMode mode() const { return mode_; }
  bool has_row(NodeId i) const { return row_of_[i] >= 0; }
  // Requires has_row(i). D_ii is reported as 0.
  double At(NodeId i, NodeId j) const {
    return values_[static_cast<std::size_t>(row_of_[i]) * d_ + j];
  }
  bool Supra(NodeId i, NodeId j) const {
    return has_row(i) && i != j && At(i, j) > epsilon_;
  }

 private:
  friend DistanceOracle BuildOracle(const Dag&, const InterventionVector&,
                                    const OracleParams&,
                                    const Reachability*);
  int d_ = 0;
  double epsilon_ = 0.0;
  double delta_ = 0.0;
  FaithfulnessMode mode_ = FaithfulnessMode::kAncestral;
  std::vector<int> row_of_;
  std::vector<double> values_;
};

// Noise for entry (i, j) depends only on (noise_seed, i, j), so oracles built
// for different intervention vectors on one graph agree on shared rows.
// `reach` may be passed to reuse a closure; required only for ancestral mode.
DistanceOracle BuildOracle(const Dag& dag, const InterventionVector& iv,
                           const OracleParams& params,
                           const Reachability* reach = nullptr);

// CSV: "# epsilon=<e> delta=<D> mode=<m>", "i,j,D_ij", then one row per
// materialized entry.
void WriteOracleCsv(const DistanceOracle& oracle, std::ostream& out);

}  // namespace intorder

#endif  // INTORDER_ORACLE_HPP_
