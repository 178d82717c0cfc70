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

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "intorder/errors.hpp"
#include "intorder/rng.hpp"
#include "intorder/textio.hpp"

namespace intorder {

std::string EnsembleName(Ensemble e) {
  switch (e) {
    case Ensemble::kErdosRenyi:
      return "er";
    case Ensemble::kSparseEr:
      return "sparse_er";
    case Ensemble::kBarabasiAlbert:
      return "ba";
    case Ensemble::kCustom:
      break;
  }
  return "custom";
}

Ensemble ParseEnsemble(const std::string& name) {
  if (name == "er") return Ensemble::kErdosRenyi;
  if (name == "sparse_er") return Ensemble::kSparseEr;
  if (name == "ba") return Ensemble::kBarabasiAlbert;
  if (name == "custom") return Ensemble::kCustom;
  throw ParameterError("unknown ensemble '" + name + "'");
}

Dag::Dag(int d, std::vector<NodeId> arrival, std::vector<Edge> edges,
         ModelMeta meta)
    : d_(d),
      arrival_(std::move(arrival)),
      rank_(d > 0 ? d : 0, -1),
      edges_(std::move(edges)),
      parents_(d > 0 ? d : 0),
      children_(d > 0 ? d : 0),
      meta_(meta) {
  if (d < 1) throw ParameterError("node count must be >= 1");
  if (static_cast<int>(arrival_.size()) != d) {
    throw ParameterError("arrival order must list every node once");
  }
  for (int r = 0; r < d; ++r) {
    const NodeId v = arrival_[r];
    if (v < 0 || v >= d || rank_[v] != -1) {
      throw ParameterError("arrival order is not a permutation");
    }
    rank_[v] = r;
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.from < 0 || e.from >= d || e.to < 0 || e.to >= d) {
      throw ParameterError("edge endpoint out of range");
    }
    if (e.from == e.to) throw ParameterError("self loop");
    if (k > 0 && edges_[k - 1] == e) throw ParameterError("duplicate edge");
    if (rank_[e.from] >= rank_[e.to]) {
      throw ParameterError("edge " + std::to_string(e.from) + "->" +
                           std::to_string(e.to) +
                           " runs against the arrival order");
    }
    children_[e.from].push_back(e.to);
    parents_[e.to].push_back(e.from);
  }
  for (auto& p : parents_) std::sort(p.begin(), p.end());
}

Dag Dag::FromEdges(int d, std::vector<Edge> edges) {
  if (d < 1) throw ParameterError("node count must be >= 1");
  std::vector<int> indeg(d, 0);
  std::vector<std::vector<NodeId>> out(d);
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= d || e.to < 0 || e.to >= d) {
      throw ParameterError("edge endpoint out of range");
    }
    out[e.from].push_back(e.to);
    ++indeg[e.to];
  }
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId v = 0; v < d; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<NodeId> arrival;
  arrival.reserve(d);
  while (!ready.empty()) {
    const NodeId v = ready.top();
    ready.pop();
    arrival.push_back(v);
    for (NodeId w : out[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(arrival.size()) != d) {
    throw ParameterError("edge set contains a cycle");
  }
  return Dag(d, std::move(arrival), std::move(edges));
}

bool Dag::has_edge(NodeId i, NodeId j) const {
  const auto& p = parents_[j];
  return std::binary_search(p.begin(), p.end(), i);
}

Dag GenerateEr(int d, double p_e, std::uint64_t seed) {
  if (d < 1) throw ParameterError("d must be >= 1");
  if (!(p_e >= 0.0 && p_e <= 1.0)) {
    throw ParameterError("p_e must lie in [0, 1]");
  }
  Rng rng(StreamSeed(seed, Stream::kGraph));
  std::vector<NodeId> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  rng.Shuffle(sigma.begin(), sigma.end());
  std::vector<Edge> edges;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      if (rng.Bernoulli(p_e)) edges.push_back({sigma[a], sigma[b]});
    }
  }
  ModelMeta meta;
  meta.ensemble = Ensemble::kErdosRenyi;
  meta.p_e = p_e;
  meta.seed = seed;
  return Dag(d, std::move(sigma), std::move(edges), meta);
}

Dag GenerateSparseEr(int d, double c, std::uint64_t seed) {
  if (d < 1) throw ParameterError("d must be >= 1");
  if (!(c > 0.0)) throw ParameterError("c must be > 0");
  if (c / d > 1.0) throw ParameterError("c / d must not exceed 1");
  Dag er = GenerateEr(d, c / d, seed);
  ModelMeta meta = er.meta();
  meta.ensemble = Ensemble::kSparseEr;
  meta.c = c;
  return Dag(d, std::vector<NodeId>(er.arrival().begin(), er.arrival().end()),
             std::vector<Edge>(er.edges().begin(), er.edges().end()), meta);
}

namespace {

// Fenwick tree over nonnegative weights with prefix search.
class WeightTree {
 public:
  explicit WeightTree(int n) : n_(n), tree_(n + 1, 0.0) {}

  void Add(int i, double delta) {
    for (++i; i <= n_; i += i & -i) tree_[i] += delta;
  }

  // Smallest index whose inclusive prefix sum exceeds `target`, restricted to
  // [0, limit).
  int Find(double target, int limit) const {
    int pos = 0;
    for (int step = std::bit_floor(static_cast<unsigned>(n_)); step > 0;
         step >>= 1) {
      const int next = pos + step;
      if (next <= n_ && tree_[next] <= target) {
        pos = next;
        target -= tree_[next];
      }
    }
    return std::min(pos, limit - 1);
  }

 private:
  int n_;
  std::vector<double> tree_;
};

}  // namespace

Dag GenerateBa(int d, int m, double kappa, std::uint64_t seed) {
  if (d < 1) throw ParameterError("d must be >= 1");
  if (m < 1) throw ParameterError("m must be >= 1");
  if (!(kappa > 0.0)) throw ParameterError("kappa must be > 0");

  Rng rng(StreamSeed(seed, Stream::kGraph));
  // Growth runs on step indices; labels are applied at the end. A node's
  // weight counts the links it has received, not its own m incoming ones.
  std::vector<int> degree(d, 0);
  WeightTree weights(d);
  double total = 0.0;
  std::vector<std::pair<int, int>> step_edges;
  step_edges.reserve(static_cast<std::size_t>(BaEdgeCount(d, m)));
  std::vector<int> batch;
  std::vector<char> chosen(d, 0);

  for (int t = 0; t < d; ++t) {
    batch.clear();
    if (t <= m) {
      for (int s = 0; s < t; ++s) batch.push_back(s);
    } else {
      double remaining = total;
      while (static_cast<int>(batch.size()) < m) {
        int s = weights.Find(rng.Uniform() * remaining, t);
        if (chosen[s]) continue;  // rounding at a zeroed slot; redraw
        chosen[s] = 1;
        batch.push_back(s);
        const double w = degree[s] + kappa;
        weights.Add(s, -w);
        remaining -= w;
      }
      for (int s : batch) {
        chosen[s] = 0;
        weights.Add(s, degree[s] + kappa);
      }
    }
    for (int s : batch) {
      step_edges.emplace_back(s, t);
      ++degree[s];
      weights.Add(s, 1.0);
      total += 1.0;
    }
    weights.Add(t, kappa);
    total += kappa;
  }

  Rng label_rng(StreamSeed(seed, Stream::kLabels));
  std::vector<NodeId> label(d);
  std::iota(label.begin(), label.end(), 0);
  label_rng.Shuffle(label.begin(), label.end());
  std::vector<Edge> edges;
  edges.reserve(step_edges.size());
  for (auto [s, t] : step_edges) edges.push_back({label[s], label[t]});

  ModelMeta meta;
  meta.ensemble = Ensemble::kBarabasiAlbert;
  meta.m = m;
  meta.kappa = kappa;
  meta.seed = seed;
  return Dag(d, std::move(label), std::move(edges), meta);
}

BaExponents GammaOf(int m, double kappa) {
  if (m < 1) throw ParameterError("m must be >= 1");
  if (!(kappa > 0.0)) throw ParameterError("kappa must be > 0");
  const double gamma = 2.0 + kappa / m;
  return {gamma, 1.0 / (gamma - 1.0)};
}

long long BaEdgeCount(int d, int m) {
  long long total = 0;
  for (int t = 0; t < d; ++t) total += std::min(m, t);
  return total;
}

Reachability::Reachability(const Dag& dag)
    : d_(dag.size()),
      words_((static_cast<std::size_t>(dag.size()) + 63) / 64),
      desc_(static_cast<std::size_t>(dag.size()) * words_, 0),
      anc_(static_cast<std::size_t>(dag.size()) * words_, 0) {
  const auto arrival = dag.arrival();
  for (int r = d_ - 1; r >= 0; --r) {
    const NodeId v = arrival[r];
    std::uint64_t* row = &desc_[static_cast<std::size_t>(v) * words_];
    for (NodeId c : dag.children(v)) {
      row[c >> 6] |= std::uint64_t{1} << (c & 63);
      const std::uint64_t* crow = &desc_[static_cast<std::size_t>(c) * words_];
      for (std::size_t w = 0; w < words_; ++w) row[w] |= crow[w];
    }
  }
  for (NodeId i = 0; i < d_; ++i) {
    for (NodeId j = 0; j < d_; ++j) {
      if (Reaches(i, j)) anc_[Word(j, i)] |= std::uint64_t{1} << (i & 63);
    }
  }
}

int Reachability::DescendantCount(NodeId i) const {
  int n = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    n += std::popcount(desc_[static_cast<std::size_t>(i) * words_ + w]);
  }
  return n;
}

int Reachability::AncestorCount(NodeId j) const {
  int n = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    n += std::popcount(anc_[static_cast<std::size_t>(j) * words_ + w]);
  }
  return n;
}

std::vector<NodeId> Reachability::Descendants(NodeId i) const {
  std::vector<NodeId> out;
  for (NodeId j = 0; j < d_; ++j) {
    if (Reaches(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<NodeId> Reachability::Ancestors(NodeId j) const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < d_; ++i) {
    if ((anc_[Word(j, i)] >> (i & 63)) & 1U) out.push_back(i);
  }
  return out;
}

std::size_t Reachability::PairCount() const {
  std::size_t n = 0;
  for (std::uint64_t w : desc_) n += std::popcount(w);
  return n;
}

GraphStats ComputeStats(const Dag& dag) {
  return ComputeStats(dag, Reachability(dag));
}

GraphStats ComputeStats(const Dag& dag, const Reachability& reach) {
  const int d = dag.size();
  GraphStats s;
  s.in_deg.resize(d);
  s.out_deg.resize(d);
  s.anc_sizes.resize(d);
  s.desc_sizes.resize(d);
  s.edge_count = dag.edge_count();
  for (NodeId v = 0; v < d; ++v) {
    s.in_deg[v] = static_cast<int>(dag.parents(v).size());
    s.out_deg[v] = static_cast<int>(dag.children(v).size());
    s.max_total_deg = std::max(s.max_total_deg, s.in_deg[v] + s.out_deg[v]);
    s.anc_sizes[v] = reach.AncestorCount(v);
    s.desc_sizes[v] = reach.DescendantCount(v);
  }
  return s;
}

int MaxTotalDegree(const Dag& dag) {
  int best = 0;
  for (NodeId v = 0; v < dag.size(); ++v) {
    best = std::max(best, static_cast<int>(dag.parents(v).size() +
                                           dag.children(v).size()));
  }
  return best;
}

void WriteEdgeList(const Dag& dag, std::ostream& out) {
  const ModelMeta& meta = dag.meta();
  out << "d=" << dag.size() << " model=" << EnsembleName(meta.ensemble);
  switch (meta.ensemble) {
    case Ensemble::kErdosRenyi:
      out << " p_e=" << FormatDouble(meta.p_e);
      break;
    case Ensemble::kSparseEr:
      out << " c=" << FormatDouble(meta.c);
      break;
    case Ensemble::kBarabasiAlbert:
      out << " m=" << meta.m << " kappa=" << FormatDouble(meta.kappa);
      break;
    case Ensemble::kCustom:
      break;
  }
  out << " seed=" << meta.seed << "\n";
  for (const Edge& e : dag.edges()) out << e.from << ' ' << e.to << '\n';
}

std::string EdgeListString(const Dag& dag) {
  std::ostringstream os;
  WriteEdgeList(dag, os);
  return os.str();
}

Dag ReadEdgeList(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("line 1: missing header");
  int d = -1;
  ModelMeta meta;
  bool have_model = false;
  bool have_seed = false;
  try {
    std::istringstream hs(line);
    std::string token;
    while (hs >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) {
        throw FormatError("bad header token '" + token + "'");
      }
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "d") {
        d = static_cast<int>(ParseInt(value));
      } else if (key == "model") {
        meta.ensemble = ParseEnsemble(value);
        have_model = true;
      } else if (key == "p_e") {
        meta.p_e = ParseDouble(value);
      } else if (key == "c") {
        meta.c = ParseDouble(value);
      } else if (key == "m") {
        meta.m = static_cast<int>(ParseInt(value));
      } else if (key == "kappa") {
        meta.kappa = ParseDouble(value);
      } else if (key == "seed") {
        meta.seed = ParseUint(value);
        have_seed = true;
      } else {
        throw FormatError("unknown header key '" + key + "'");
      }
    }
  } catch (const std::exception& e) {
    throw FormatError(std::string("line 1: ") + e.what());
  }
  if (d < 1 || !have_model || !have_seed) {
    throw FormatError("line 1: header needs d=, model= and seed=");
  }
  if (meta.ensemble == Ensemble::kSparseEr) meta.p_e = meta.c / d;

  std::vector<Edge> edges;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty()) continue;
    std::istringstream ls(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra) || a < 0 || b < 0 || a >= d ||
        b >= d) {
      throw FormatError("line " + std::to_string(lineno) +
                        ": expected two node ids in [0, d)");
    }
    edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b)});
  }
  try {
    Dag plain = Dag::FromEdges(d, std::move(edges));
    return Dag(d,
               std::vector<NodeId>(plain.arrival().begin(),
                                   plain.arrival().end()),
               std::vector<Edge>(plain.edges().begin(), plain.edges().end()),
               meta);
  } catch (const ParameterError& e) {
    throw FormatError(std::string("invalid graph: ") + e.what());
  }
}

}  // namespace intorder
