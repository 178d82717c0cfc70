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

#include "intorder/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "intorder/errors.hpp"

namespace intorder {

namespace {

BoundValue Clamp(double v) {
  if (v > 1.0) return {1.0, true};
  return {std::max(v, 0.0), false};
}

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(std::string(name) + " must lie in [0, 1]");
  }
}

void CheckOpenUnit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw ParameterError(std::string(name) + " must lie in (0, 1)");
  }
}

}  // namespace

BoundValue McDiarmidTail(double t, double ck_squares) {
  if (!(t >= 0.0)) throw ParameterError("t must be >= 0");
  if (!(ck_squares > 0.0)) throw ParameterError("sum c_k^2 must be > 0");
  return Clamp(2.0 * std::exp(-2.0 * t * t / ck_squares));
}

BoundValue McDiarmidTailNormalized(double t, double ck_squares,
                                   double edge_count) {
  if (!(edge_count > 0.0)) throw ParameterError("|E| must be > 0");
  if (!(t >= 0.0)) throw ParameterError("t must be >= 0");
  if (!(ck_squares > 0.0)) throw ParameterError("sum c_k^2 must be > 0");
  return Clamp(2.0 *
               std::exp(-2.0 * t * t * edge_count * edge_count / ck_squares));
}

double ErMeanEdges(int d, double p_e) {
  return p_e * static_cast<double>(d) * (d - 1) / 2.0;
}

double DefaultSlack(int d) { return 1.0 / std::sqrt(static_cast<double>(d)); }

double ErExpectationFnr(int d, double p_e, double p_int, double delta) {
  if (d < 2) throw ParameterError("d must be >= 2");
  CheckOpenUnit(delta, "delta");
  if (!(p_e > 0.0 && p_e <= 1.0)) throw ParameterError("p_e must lie in (0, 1]");
  if (!(p_int > 0.0 && p_int <= 1.0)) {
    throw ParameterError("p_int must lie in (0, 1]");
  }
  const double q = 1.0 - p_int;
  const double mu = ErMeanEdges(d, p_e);
  return 2.0 * q * q / ((1.0 - delta) * p_e * p_int) / (d - 1) +
         std::exp(-mu * delta * delta / 2.0);
}

BoundValue ErDenseGTail(double t, int d, double p_e, double p_int,
                        double delta) {
  if (!(t > 0.0)) throw ParameterError("t must be > 0");
  return Clamp(ErExpectationFnr(d, p_e, p_int, delta) / (t * t));
}

SparseExpectation SparseErExpectationFnr(int d, double c, double p_int,
                                         double delta) {
  if (d < 2) throw ParameterError("d must be >= 2");
  if (!(c > 0.0)) throw ParameterError("c must be > 0");
  if (!(p_int > 0.0 && p_int <= 1.0)) {
    throw ParameterError("p_int must lie in (0, 1]");
  }
  CheckOpenUnit(delta, "delta");
  const double q = 1.0 - p_int;
  const double mu = ErMeanEdges(d, c / d);
  SparseExpectation out;
  out.finite = 2.0 * q * q / ((1.0 - delta) * c * p_int) *
                   (static_cast<double>(d) / (d - 1)) +
               std::exp(-mu * delta * delta / 2.0);
  const double x = p_int * c;
  out.limit = 2.0 * q * q / (c * p_int) * (1.0 - (1.0 - std::exp(-x)) / x);
  return out;
}

BoundValue SparseErProbFnr(double c_e, int d, double c, double p_int,
                           double delta) {
  CheckOpenUnit(c_e, "c_e");
  CheckOpenUnit(delta, "delta");
  if (d < 1) throw ParameterError("d must be >= 1");
  if (!(c > 0.0)) throw ParameterError("c must be > 0");
  if (!(p_int > 0.0 && p_int <= 1.0)) {
    throw ParameterError("p_int must lie in (0, 1]");
  }
  const double q = 1.0 - p_int;
  return Clamp(2.0 * q * q / ((1.0 - delta) * c_e * c * p_int) +
               std::exp(-delta * delta * c * d / 4.0));
}

BoundValue BaExpectation::Tail(double c_e) const {
  CheckOpenUnit(c_e, "c_e");
  const double q = 1.0 - p_int;
  return Clamp(q * q / c_e);
}

BaExpectation BaExpectationBounds(int d, int m, double p_int) {
  if (m < 1) throw ParameterError("m must be >= 1");
  if (d < 1) throw ParameterError("d must be >= 1");
  CheckProbability(p_int, "p_int");
  const double q = 1.0 - p_int;
  BaExpectation out;
  out.p_int = p_int;
  out.f_mean = q * q * m * d;
  out.g_mean = q * q;
  return out;
}

double BaMcDiarmidDenominator(int d, int m, double beta, double c_hat,
                              bool normalized) {
  if (d < 1) throw ParameterError("d must be >= 1");
  if (m < 1) throw ParameterError("m must be >= 1");
  if (!(c_hat > 0.0)) throw ParameterError("C estimate must be > 0");
  double per_node = m + c_hat * std::pow(static_cast<double>(d), beta);
  if (normalized) per_node /= static_cast<double>(m) * d;
  return d * per_node * per_node;
}

BoundValue BaMcDiarmidTail(double t, int d, int m, double beta, double c_hat,
                           bool normalized) {
  if (!(t >= 0.0)) throw ParameterError("t must be >= 0");
  const double denom = BaMcDiarmidDenominator(d, m, beta, c_hat, normalized);
  return Clamp(2.0 * std::exp(-2.0 * t * t / denom));
}

double ChernoffEdgeLower(int d, double p_e, double delta) {
  CheckOpenUnit(delta, "delta");
  CheckProbability(p_e, "p_e");
  return std::exp(-delta * delta * ErMeanEdges(d, p_e) / 2.0);
}

std::optional<double> FixedGraphExpectationFnr(const Dag& dag, double p_int,
                                               FaithfulnessMode mode) {
  CheckProbability(p_int, "p_int");
  if (dag.edge_count() == 0) return std::nullopt;
  const double q = 1.0 - p_int;
  std::optional<Reachability> reach;
  if (mode == FaithfulnessMode::kAncestral) reach.emplace(dag);
  double total = 0.0;
  for (const Edge& e : dag.edges()) {
    const NodeId i = e.from;
    const NodeId j = e.to;
    int size = 1;  // j itself; j is never an ancestor of its parent i
    if (mode == FaithfulnessMode::kAncestral) {
      for (NodeId k = 0; k < dag.size(); ++k) {
        if (reach->Reaches(k, j) && !reach->Reaches(k, i)) ++size;
      }
    } else {
      for (NodeId k : dag.parents(j)) {
        if (!dag.has_edge(k, i)) ++size;
      }
    }
    total += std::pow(q, size);
  }
  return total / dag.edge_count();
}

WarnkeBound WarnkeTail(double t, std::span<const double> c_list,
                       std::span<const double> d_list,
                       std::span<const double> gamma_list,
                       std::span<const double> p_list, double bad_prob) {
  const std::size_t n = c_list.size();
  if (d_list.size() != n || gamma_list.size() != n || p_list.size() != n) {
    throw ParameterError("coefficient lists must have equal length");
  }
  if (!(t >= 0.0)) throw ParameterError("t must be >= 0");
  CheckProbability(bad_prob, "bad-event probability");
  WarnkeBound out;
  double bad = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(gamma_list[k] > 0.0 && gamma_list[k] <= 1.0)) {
      throw ParameterError("gamma_k must lie in (0, 1]");
    }
    CheckProbability(p_list[k], "p_k");
    const double e = gamma_list[k] * (d_list[k] - c_list[k]);
    const double s = c_list[k] + e;
    out.range = std::max(out.range, s);
    out.variance_proxy += (1.0 - p_list[k]) * p_list[k] * s * s;
    bad += bad_prob / gamma_list[k];
  }
  const double denom = 2.0 * out.variance_proxy + 2.0 * out.range * t / 3.0;
  out.tail = denom > 0.0 ? Clamp(std::exp(-t * t / denom))
                         : BoundValue{t > 0.0 ? 0.0 : 1.0, false};
  out.bad_event = Clamp(bad);
  return out;
}

}  // namespace intorder
