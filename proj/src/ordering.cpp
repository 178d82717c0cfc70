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
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>

#include "intorder/errors.hpp"
#include "intorder/rng.hpp"

namespace intorder {

std::string ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kExact:
      return "exact";
    case Provenance::kHeuristic:
      return "heuristic";
    case Provenance::kLinearExtension:
      break;
  }
  return "linear-extension";
}

std::vector<NodeId> CausalOrder::Sequence() const {
  std::vector<NodeId> seq(position.size());
  for (NodeId v = 0; v < size(); ++v) seq[position[v]] = v;
  return seq;
}

CausalOrder CausalOrder::FromSequence(std::span<const NodeId> seq,
                                      Provenance p) {
  CausalOrder o;
  o.provenance = p;
  o.position.assign(seq.size(), 0);
  for (std::size_t slot = 0; slot < seq.size(); ++slot) {
    o.position[seq[slot]] = static_cast<int>(slot);
  }
  return o;
}

CausalOrder CausalOrder::Identity(int d, Provenance p) {
  CausalOrder o;
  o.provenance = p;
  o.position.resize(d);
  std::iota(o.position.begin(), o.position.end(), 0);
  return o;
}

bool CausalOrder::IsPermutation() const {
  std::vector<char> seen(position.size(), 0);
  for (int p : position) {
    if (p < 0 || p >= size() || seen[p]) return false;
    seen[p] = 1;
  }
  return true;
}

PairWeights::PairWeights(const DistanceOracle& oracle,
                         const InterventionVector& iv, double c)
    : d_(oracle.size()),
      w_(static_cast<std::size_t>(oracle.size()) * oracle.size(), 0.0) {
  if (!(c > oracle.epsilon())) {
    throw ParameterError("score constant c must exceed epsilon");
  }
  if (iv.size() != d_) throw ParameterError("intervention vector size != d");
  const double eps = oracle.epsilon();
  const double bonus = c * d_;
  double magnitude = 0.0;
  for (NodeId x = 0; x < d_; ++x) {
    if (!iv.contains(x)) continue;
    for (NodeId y = 0; y < d_; ++y) {
      if (y == x) continue;
      const double dist = oracle.At(x, y);
      const double w = (dist - eps) + (dist > eps ? bonus : 0.0);
      w_[static_cast<std::size_t>(x) * d_ + y] = w;
      magnitude += std::abs(w);
    }
  }
  tolerance_ = 1e-9 * (1.0 + magnitude);
}

double Score(std::span<const int> position, const PairWeights& weights) {
  const int d = weights.size();
  double total = 0.0;
  for (NodeId i = 0; i < d; ++i) {
    for (NodeId j = 0; j < d; ++j) {
      if (position[i] < position[j]) total += weights(i, j);
    }
  }
  return total;
}

double Score(const CausalOrder& order, const DistanceOracle& oracle,
             const InterventionVector& iv, double c) {
  return Score(order.position, PairWeights(oracle, iv, c));
}

int DTop(const Dag& dag, std::span<const int> position) {
  int misoriented = 0;
  for (const Edge& e : dag.edges()) {
    if (position[e.from] > position[e.to]) ++misoriented;
  }
  return misoriented;
}

OrderEval Evaluate(const Dag& dag, const CausalOrder& order,
                   const DistanceOracle& oracle, const InterventionVector& iv,
                   double c) {
  OrderEval ev;
  ev.score = Score(order, oracle, iv, c);
  ev.d_top = DTop(dag, order);
  if (dag.edge_count() > 0) {
    ev.fnr = static_cast<double>(ev.d_top) / dag.edge_count();
  }
  return ev;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Best score over orders that honor the slot pins in `pinned` (-1 = free).
// A node added to prefix set S takes slot |S| and earns G(S, v), the sum of
// W(x, v) over x in S; pairs within a prefix are settled when the later
// member is appended.
class PrefixProgram {
 public:
  explicit PrefixProgram(const PairWeights& w)
      : d_(w.size()),
        full_((std::uint32_t{1} << d_) - 1),
        gain_((static_cast<std::size_t>(full_) + 1) * d_, 0.0),
        best_(static_cast<std::size_t>(full_) + 1, kNegInf) {
    for (std::uint32_t s = 1; s <= full_; ++s) {
      const int low = std::countr_zero(s);
      const std::uint32_t prev = s & (s - 1);
      for (NodeId v = 0; v < d_; ++v) {
        gain_[Index(s, v)] = gain_[Index(prev, v)] + w(low, v);
      }
    }
  }

  double Solve(const std::vector<int>& pinned) {
    std::uint32_t reserved = 0;
    for (int p : pinned) {
      if (p >= 0) reserved |= std::uint32_t{1} << p;
    }
    std::fill(best_.begin(), best_.end(), kNegInf);
    best_[0] = 0.0;
    for (std::uint32_t s = 0; s < full_; ++s) {
      const double here = best_[s];
      if (here == kNegInf) continue;
      const int slot = std::popcount(s);
      const bool slot_reserved = (reserved >> slot) & 1U;
      for (NodeId v = 0; v < d_; ++v) {
        if ((s >> v) & 1U) continue;
        if (slot_reserved ? pinned[v] != slot : pinned[v] >= 0) continue;
        double& next = best_[s | (std::uint32_t{1} << v)];
        next = std::max(next, here + gain_[Index(s, v)]);
      }
    }
    return best_[full_];
  }

 private:
  std::size_t Index(std::uint32_t s, NodeId v) const {
    return static_cast<std::size_t>(s) * d_ + v;
  }
  int d_;
  std::uint32_t full_;
  std::vector<double> gain_;
  std::vector<double> best_;
};

}  // namespace

CausalOrder OptExact(const DistanceOracle& oracle,
                     const InterventionVector& iv, double c, int limit) {
  const int d = oracle.size();
  limit = std::min(limit, kExactHardLimit);
  if (d > limit) {
    throw InfeasibleError("exact search limited to d <= " +
                          std::to_string(limit) + " (got d = " +
                          std::to_string(d) + ")");
  }
  const PairWeights weights(oracle, iv, c);
  PrefixProgram program(weights);
  std::vector<int> pinned(d, -1);
  const double optimum = program.Solve(pinned);
  const double floor = optimum - weights.tolerance();

  // Pin node 0, then node 1, ... to the earliest slot that still admits an
  // optimal completion: this is the lexicographically smallest position
  // vector among the maximizers.
  std::vector<char> used(d, 0);
  for (NodeId v = 0; v < d; ++v) {
    bool placed = false;
    for (int slot = 0; slot < d && !placed; ++slot) {
      if (used[slot]) continue;
      pinned[v] = slot;
      if (v == d - 1 || program.Solve(pinned) >= floor) {
        used[slot] = 1;
        placed = true;
      }
    }
    if (!placed) {
      // Unreachable: the previous pin guaranteed a feasible completion.
      throw std::logic_error("exact search lost the optimum");
    }
  }
  CausalOrder out;
  out.position = std::move(pinned);
  out.provenance = Provenance::kExact;
  return out;
}

CausalOrder LinearExtension(const DistanceOracle& oracle,
                            const InterventionVector& iv) {
  const int d = oracle.size();
  if (iv.size() != d) throw ParameterError("intervention vector size != d");
  std::vector<int> indeg(d, 0);
  for (NodeId i = 0; i < d; ++i) {
    if (!iv.contains(i)) continue;
    for (NodeId j = 0; j < d; ++j) {
      if (oracle.Supra(i, j)) ++indeg[j];
    }
  }
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId v = 0; v < d; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<NodeId> seq;
  seq.reserve(d);
  while (!ready.empty()) {
    const NodeId v = ready.top();
    ready.pop();
    seq.push_back(v);
    if (!iv.contains(v)) continue;
    for (NodeId j = 0; j < d; ++j) {
      if (oracle.Supra(v, j) && --indeg[j] == 0) ready.push(j);
    }
  }
  if (static_cast<int>(seq.size()) != d) {
    // Only possible with an oracle violating faithfulness to a DAG.
    throw ParameterError("supra-threshold relation is cyclic");
  }
  return CausalOrder::FromSequence(seq, Provenance::kLinearExtension);
}

CausalOrder OptHeuristic(const DistanceOracle& oracle,
                         const InterventionVector& iv, double c,
                         std::uint64_t seed, HeuristicTrace* trace) {
  const int d = oracle.size();
  const PairWeights w(oracle, iv, c);
  CausalOrder start = LinearExtension(oracle, iv);
  std::vector<NodeId> seq = start.Sequence();
  std::vector<int> pos = start.position;

  HeuristicTrace local;
  local.stage1_score = Score(pos, w);
  const double tol = w.tolerance();

  Rng rng(StreamSeed(seed, Stream::kSearch));
  std::vector<NodeId> scan(d);
  std::iota(scan.begin(), scan.end(), 0);

  bool improved = true;
  while (improved) {
    improved = false;
    ++local.passes;
    rng.Shuffle(scan.begin(), scan.end());
    for (NodeId a : scan) {
      const int p = pos[a];
      // Best insertion slot for `a`, scanning outward from its slot.
      double best_gain = 0.0;
      int best_slot = p;
      double run = 0.0;
      for (int q = p - 1; q >= 0; --q) {
        const NodeId b = seq[q];
        run += w(a, b) - w(b, a);
        if (run > best_gain + tol) {
          best_gain = run;
          best_slot = q;
        }
      }
      run = 0.0;
      for (int q = p + 1; q < d; ++q) {
        const NodeId b = seq[q];
        run += w(b, a) - w(a, b);
        if (run > best_gain + tol) {
          best_gain = run;
          best_slot = q;
        }
      }
      if (best_slot == p) continue;
      if (best_slot < p) {
        std::rotate(seq.begin() + best_slot, seq.begin() + p,
                    seq.begin() + p + 1);
      } else {
        std::rotate(seq.begin() + p, seq.begin() + p + 1,
                    seq.begin() + best_slot + 1);
      }
      const int lo = std::min(p, best_slot);
      const int hi = std::max(p, best_slot);
      for (int q = lo; q <= hi; ++q) pos[seq[q]] = q;
      ++local.moves;
      improved = true;
    }
  }

  CausalOrder out;
  out.position = std::move(pos);
  out.provenance = Provenance::kHeuristic;
  local.final_score = Score(out.position, w);
  if (trace != nullptr) *trace = local;
  return out;
}

std::vector<Edge> CheckOrientationLemma(const Dag& dag,
                                        const InterventionVector& iv,
                                        const CausalOrder& order,
                                        FaithfulnessMode mode,
                                        const Reachability* reach) {
  std::optional<Reachability> own;
  if (mode == FaithfulnessMode::kAncestral && reach == nullptr) {
    own.emplace(dag);
    reach = &*own;
  }
  std::vector<Edge> violated;
  for (const Edge& e : dag.edges()) {
    const NodeId i = e.from;
    const NodeId j = e.to;
    bool secured = iv.contains(j);
    if (!secured && mode == FaithfulnessMode::kAncestral) {
      for (NodeId k = 0; k < dag.size() && !secured; ++k) {
        secured = iv.contains(k) && reach->Reaches(k, j) &&
                  !reach->Reaches(k, i);
      }
    } else if (!secured) {
      for (NodeId k : dag.parents(j)) {
        if (iv.contains(k) && !dag.has_edge(k, i)) {
          secured = true;
          break;
        }
      }
    }
    if (secured && order.position[i] > order.position[j]) {
      violated.push_back(e);
    }
  }
  return violated;
}

}  // namespace intorder
