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

#include "intorder/oracle.hpp"

#include <optional>
#include <ostream>

#include "intorder/errors.hpp"
#include "intorder/rng.hpp"
#include "intorder/textio.hpp"

namespace intorder {

int InterventionVector::count() const {
  int n = 0;
  for (auto b : bits) n += b;
  return n;
}

std::vector<NodeId> InterventionVector::targets() const {
  std::vector<NodeId> out;
  for (int k = 0; k < size(); ++k) {
    if (bits[k]) out.push_back(k);
  }
  return out;
}

InterventionVector InterventionVector::FromTargets(
    int d, const std::vector<NodeId>& t) {
  InterventionVector iv;
  iv.bits.assign(d, 0);
  for (NodeId k : t) {
    if (k < 0 || k >= d) throw ParameterError("intervention target out of range");
    iv.bits[k] = 1;
  }
  iv.p_int = d > 0 ? static_cast<double>(iv.count()) / d : 0.0;
  return iv;
}

InterventionVector InterventionVector::FromMask(int d, std::uint64_t mask) {
  InterventionVector iv;
  iv.bits.resize(d);
  for (int k = 0; k < d; ++k) iv.bits[k] = (mask >> k) & 1U;
  iv.p_int = d > 0 ? static_cast<double>(iv.count()) / d : 0.0;
  return iv;
}

std::uint64_t InterventionVector::Mask() const {
  std::uint64_t mask = 0;
  for (int k = 0; k < size() && k < 64; ++k) {
    if (bits[k]) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

InterventionVector SampleInterventions(int d, double p_int,
                                       std::uint64_t seed) {
  if (!(p_int >= 0.0 && p_int <= 1.0)) {
    throw ParameterError("p_int must lie in [0, 1]");
  }
  Rng rng(StreamSeed(seed, Stream::kInterventions));
  InterventionVector iv;
  iv.p_int = p_int;
  iv.bits.resize(d);
  for (auto& b : iv.bits) b = rng.Bernoulli(p_int) ? 1 : 0;
  return iv;
}

std::string ModeName(FaithfulnessMode mode) {
  return mode == FaithfulnessMode::kAncestral ? "ancestral" : "restricted";
}

FaithfulnessMode ParseMode(const std::string& name) {
  if (name == "ancestral") return FaithfulnessMode::kAncestral;
  if (name == "restricted") return FaithfulnessMode::kRestricted;
  throw ParameterError("unknown mode '" + name + "'");
}

namespace {

// Two uniforms for entry (i, j), independent of everything but the seed.
std::pair<double, double> EntryUniforms(std::uint64_t seed, NodeId i,
                                        NodeId j) {
  const std::uint64_t h = MixSeed(MixSeed(seed, static_cast<std::uint64_t>(i)),
                                  static_cast<std::uint64_t>(j));
  const std::uint64_t h2 = MixSeed(h, 0x5eed);
  return {static_cast<double>(h >> 11) * 0x1.0p-53,
          static_cast<double>(h2 >> 11) * 0x1.0p-53};
}

}  // namespace

DistanceOracle BuildOracle(const Dag& dag, const InterventionVector& iv,
                           const OracleParams& params,
                           const Reachability* reach) {
  if (!(params.epsilon > 0.0)) throw ParameterError("epsilon must be > 0");
  if (!(params.delta > 0.0)) throw ParameterError("delta must be > 0");
  if (!(params.noise >= 0.0 && params.noise < 1.0)) {
    throw ParameterError("noise must lie in [0, 1)");
  }
  const int d = dag.size();
  if (iv.size() != d) throw ParameterError("intervention vector size != d");

  std::optional<Reachability> own;
  if (params.mode == FaithfulnessMode::kAncestral && reach == nullptr) {
    own.emplace(dag);
    reach = &*own;
  }

  DistanceOracle o;
  o.d_ = d;
  o.epsilon_ = params.epsilon;
  o.delta_ = params.delta;
  o.mode_ = params.mode;
  o.row_of_.assign(d, -1);
  int rows = 0;
  for (NodeId i = 0; i < d; ++i) {
    if (iv.contains(i)) o.row_of_[i] = rows++;
  }
  o.values_.assign(static_cast<std::size_t>(rows) * d, 0.0);

  const double eps = params.epsilon;
  const double high = params.epsilon + params.delta;
  const double eta = params.noise;
  for (NodeId i = 0; i < d; ++i) {
    if (!iv.contains(i)) continue;
    double* row = &o.values_[static_cast<std::size_t>(o.row_of_[i]) * d];
    for (NodeId j = 0; j < d; ++j) {
      if (j == i) continue;
      const bool linked = params.mode == FaithfulnessMode::kAncestral
                              ? reach->Reaches(i, j)
                              : dag.has_edge(i, j);
      if (eta == 0.0) {
        row[j] = linked ? high : 0.0;
        continue;
      }
      auto [u, v] = EntryUniforms(params.noise_seed, i, j);
      if (linked) {
        const double jitter = u * params.delta * eta;
        row[j] = v < 0.5 ? high - jitter : high + jitter;
      } else {
        row[j] = u * eps * (1.0 - eta);
      }
    }
  }
  return o;
}

void WriteOracleCsv(const DistanceOracle& oracle, std::ostream& out) {
  out << "# epsilon=" << FormatDouble(oracle.epsilon())
      << " delta=" << FormatDouble(oracle.delta())
      << " mode=" << ModeName(oracle.mode()) << "\n";
  out << "i,j,D_ij\n";
  for (NodeId i = 0; i < oracle.size(); ++i) {
    if (!oracle.has_row(i)) continue;
    for (NodeId j = 0; j < oracle.size(); ++j) {
      if (j == i) continue;
      out << i << ',' << j << ',' << FormatDouble(oracle.At(i, j)) << '\n';
    }
  }
}

}  // namespace intorder
