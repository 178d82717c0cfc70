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
#include <cstdlib>

#include "intorder/errors.hpp"
#include "intorder/ordering.hpp"
#include "intorder/rng.hpp"
#include "json.hpp"

namespace intorder {

double LipschitzReport::SumSquares(FaithfulnessMode mode) const {
  const auto& b = mode == FaithfulnessMode::kAncestral ? bound_ad : bound_io;
  double total = 0.0;
  for (int v : b) total += static_cast<double>(v) * v;
  return total;
}

LipschitzReport BoundsReport(const Dag& dag) {
  const GraphStats s = ComputeStats(dag);
  LipschitzReport r;
  const int d = dag.size();
  r.bound_ad.resize(d);
  r.bound_io.resize(d);
  for (NodeId k = 0; k < d; ++k) {
    r.bound_ad[k] = s.anc_sizes[k] + s.desc_sizes[k];
    r.bound_io[k] = s.in_deg[k] + s.out_deg[k];
    r.max_ad = std::max(r.max_ad, r.bound_ad[k]);
    r.max_io = std::max(r.max_io, r.bound_io[k]);
  }
  for (const Edge& e : dag.edges()) {
    r.edge_bound.push_back({e, s.in_deg[e.to]});
  }
  return r;
}

std::string ReportJson(const LipschitzReport& report) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json nodes = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < report.bound_ad.size(); ++k) {
    nlohmann::ordered_json node;
    node["bound_ad"] = report.bound_ad[k];
    node["bound_io"] = report.bound_io[k];
    if (report.exact_ck) node["exact_ck"] = (*report.exact_ck)[k];
    nodes[std::to_string(k)] = node;
  }
  j["nodes"] = nodes;
  nlohmann::ordered_json edges = nlohmann::ordered_json::object();
  for (const auto& eb : report.edge_bound) {
    edges[std::to_string(eb.edge.from) + "->" + std::to_string(eb.edge.to)] =
        eb.in_deg_child;
  }
  j["edges"] = edges;
  j["max_ad"] = report.max_ad;
  j["max_io"] = report.max_io;
  if (report.exact_ck) j["exact_is_lower_bound"] = report.exact_is_lower_bound;
  return j.dump(2);
}

int MisorientationCount(const Dag& dag, const InterventionVector& iv,
                        const FlipSetup& setup, const Reachability* reach) {
  const DistanceOracle oracle = BuildOracle(dag, iv, setup.oracle, reach);
  const CausalOrder best = OptExact(oracle, iv, setup.c, setup.exact_limit);
  return DTop(dag, best);
}

int FlipEffect(const Dag& dag, const InterventionVector& iv,
               const FlipSetup& setup, NodeId k, const Reachability* reach) {
  InterventionVector off = iv;
  InterventionVector on = iv;
  off.bits[k] = 0;
  on.bits[k] = 1;
  return std::abs(MisorientationCount(dag, off, setup, reach) -
                  MisorientationCount(dag, on, setup, reach));
}

CkResult ExactCk(const Dag& dag, const FlipSetup& setup, NodeId k,
                 const ContextOptions& options) {
  const int d = dag.size();
  if (d > std::min(setup.exact_limit, kExactHardLimit)) {
    throw InfeasibleError("exact c_k needs the exact optimizer (d <= " +
                          std::to_string(setup.exact_limit) + ")");
  }
  if (k < 0 || k >= d) throw ParameterError("node out of range");
  const Reachability reach(dag);
  CkResult r;
  if (d <= options.max_exhaustive_d) {
    const std::uint64_t contexts = std::uint64_t{1} << (d - 1);
    for (std::uint64_t ctx = 0; ctx < contexts; ++ctx) {
      // Spread the d-1 context bits over every node except k.
      const std::uint64_t low = ctx & ((std::uint64_t{1} << k) - 1);
      const std::uint64_t high = (ctx >> k) << (k + 1);
      const auto iv = InterventionVector::FromMask(d, low | high);
      r.value = std::max(r.value, FlipEffect(dag, iv, setup, k, &reach));
    }
    r.contexts = static_cast<long long>(contexts);
    r.exhaustive = true;
  } else {
    Rng rng(StreamSeed(options.seed, Stream::kContexts));
    for (int s = 0; s < options.samples; ++s) {
      InterventionVector iv;
      iv.bits.resize(d);
      for (auto& b : iv.bits) b = rng.Bernoulli(0.5) ? 1 : 0;
      r.value = std::max(r.value, FlipEffect(dag, iv, setup, k, &reach));
    }
    r.contexts = options.samples;
    r.exhaustive = false;
  }
  return r;
}

std::vector<int> ExactCkAll(const Dag& dag, const FlipSetup& setup) {
  const int d = dag.size();
  if (d > std::min({setup.exact_limit, kExactHardLimit, 20})) {
    throw InfeasibleError("exhaustive c_k table limited to small d");
  }
  const Reachability reach(dag);
  const std::uint64_t states = std::uint64_t{1} << d;
  std::vector<int> f(states);
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    f[mask] = MisorientationCount(dag, InterventionVector::FromMask(d, mask),
                                  setup, &reach);
  }
  std::vector<int> ck(d, 0);
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    for (NodeId k = 0; k < d; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (mask & bit) continue;
      ck[k] = std::max(ck[k], std::abs(f[mask] - f[mask | bit]));
    }
  }
  return ck;
}

std::vector<Edge> EdgeFlipSet(const Dag& dag, NodeId i, NodeId j) {
  if (i < 0 || i >= dag.size() || j < 0 || j >= dag.size()) {
    throw ParameterError("node out of range");
  }
  std::vector<Edge> out;
  for (NodeId k : dag.parents(j)) {
    if (!dag.has_edge(i, k)) out.push_back({k, j});
  }
  return out;
}

}  // namespace intorder
