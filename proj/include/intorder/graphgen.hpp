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

#ifndef INTORDER_GRAPHGEN_HPP_
#define INTORDER_GRAPHGEN_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace intorder {

using NodeId = int;

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Ensemble { kCustom, kErdosRenyi, kSparseEr, kBarabasiAlbert };

std::string EnsembleName(Ensemble e);
Ensemble ParseEnsemble(const std::string& name);

// Generator tag and parameters. Only the fields of the tagged ensemble are
// meaningful.
struct ModelMeta {
  Ensemble ensemble = Ensemble::kCustom;
  double p_e = 0.0;    // ER, and sparse ER (= c / d)
  double c = 0.0;      // sparse ER
  int m = 0;           // BA
  double kappa = 0.0;  // BA
  std::uint64_t seed = 0;
};

// A DAG over nodes 0..d-1. `arrival()` lists the nodes in generation order;
// every edge points forward in it. Edges are stored sorted.
class Dag {
 public:
  // Validates: labels in range, no self loops, no duplicates, every edge
  // forward in `arrival`. Throws ParameterError otherwise.
  Dag(int d, std::vector<NodeId> arrival, std::vector<Edge> edges,
      ModelMeta meta = {});

  // Builds a custom DAG; arrival is the smallest-label-first topological
  // order. Throws ParameterError on a cycle.
  static Dag FromEdges(int d, std::vector<Edge> edges);

  int size() const { return d_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodeId> arrival() const { return arrival_; }
  std::span<const NodeId> parents(NodeId j) const { return parents_[j]; }
  std::span<const NodeId> children(NodeId i) const { return children_[i]; }
  // Rank of node v in arrival order.
  int arrival_rank(NodeId v) const { return rank_[v]; }
  bool has_edge(NodeId i, NodeId j) const;
  const ModelMeta& meta() const { return meta_; }

  friend bool operator==(const Dag& a, const Dag& b) {
    return a.d_ == b.d_ && a.arrival_ == b.arrival_ && a.edges_ == b.edges_;
  }

 private:
  int d_;
  std::vector<NodeId> arrival_;
  std::vector<int> rank_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> parents_;
  std::vector<std::vector<NodeId>> children_;
  ModelMeta meta_;
};

// Uniform random topological order sigma, then each forward pair
// (sigma[a], sigma[b]), a < b, independently with probability p_e.
Dag GenerateEr(int d, double p_e, std::uint64_t seed);

// GenerateEr with p_e = c / d.
Dag GenerateSparseEr(int d, double c, std::uint64_t seed);

// Preferential attachment with initial attractiveness, grown from an empty
// nodes drawn without replacement with weight (links received + kappa);
// nodes drawn without replacement with weight (total degree + kappa);
// weights are frozen for the batch. Edges point old -> new. Node labels are
// a uniform relabeling of arrival steps (see README).
Dag GenerateBa(int d, int m, double kappa, std::uint64_t seed);

// Degree exponent gamma = 2 + kappa / m and beta = 1 / (gamma - 1).
struct BaExponents {
  double gamma;
  double beta;
};
BaExponents GammaOf(int m, double kappa);

// Exact edge count of GenerateBa: sum over steps t of min(m, t).
long long BaEdgeCount(int d, int m);

// Transitive closure as bit rows, computed in reverse arrival order.
class Reachability {
 public:
  explicit Reachability(const Dag& dag);

  int size() const { return d_; }
  // True iff a directed path i ~> j exists (irreflexive).
  bool Reaches(NodeId i, NodeId j) const {
    return (desc_[Word(i, j)] >> (j & 63)) & 1U;
  }
  int DescendantCount(NodeId i) const;
  int AncestorCount(NodeId j) const;
  std::vector<NodeId> Descendants(NodeId i) const;
  std::vector<NodeId> Ancestors(NodeId j) const;
  std::size_t PairCount() const;

 private:
  std::size_t Word(NodeId row, NodeId col) const {
    return static_cast<std::size_t>(row) * words_ + (col >> 6);
  }
  int d_;
  std::size_t words_;
  std::vector<std::uint64_t> desc_;
  std::vector<std::uint64_t> anc_;
};

struct GraphStats {
  std::vector<int> in_deg;
  std::vector<int> out_deg;
  int max_total_deg = 0;
  int edge_count = 0;
  std::vector<int> anc_sizes;
  std::vector<int> desc_sizes;
};

GraphStats ComputeStats(const Dag& dag);
GraphStats ComputeStats(const Dag& dag, const Reachability& reach);
// Degrees only; skips the closure (cheap for large d).
int MaxTotalDegree(const Dag& dag);

// Edge-list text: header "d=<n> model=<tag> <params> seed=<s>", then one
// "i j" line per edge in sorted order. Labels are 0-based.
void WriteEdgeList(const Dag& dag, std::ostream& out);
std::string EdgeListString(const Dag& dag);
// Throws FormatError naming the offending line.
Dag ReadEdgeList(std::istream& in);

}  // namespace intorder

#endif  // INTORDER_GRAPHGEN_HPP_
