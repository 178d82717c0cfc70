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

#ifndef INTORDER_BOUNDS_HPP_
#define INTORDER_BOUNDS_HPP_

#include <optional>
#include <span>
#include <utility>

#include "intorder/graphgen.hpp"
#include "intorder/oracle.hpp"

namespace intorder {

// Every evaluator clamps to [0, 1] where the quantity is a probability and
// reports whether the clamp was active (the bound is then vacuous).
struct BoundValue {
  double value = 0.0;
  bool clamped = false;
};

// min(1, 2 exp(-2 t^2 / sum c_k^2)).
BoundValue McDiarmidTail(double t, double ck_squares);

// Same with the |E|^2 factor for the normalized error g = f / |E|.
BoundValue McDiarmidTailNormalized(double t, double ck_squares,
                                   double edge_count);

// Expected edge count p_e d (d - 1) / 2.
double ErMeanEdges(int d, double p_e);

// Default Chernoff slack d^{-1/2}.
double DefaultSlack(int d);

// Dense ER: bound on P(|g - E g| >= t),
//   (1/t^2) [2 (1-p)^2 / ((1-delta) p_e p) / (d-1) + exp(-mu delta^2 / 2)].
BoundValue ErDenseGTail(double t, int d, double p_e, double p_int,
                        double delta);

// Dense ER: bound on E[g], the bracketed expression above.
double ErExpectationFnr(int d, double p_e, double p_int, double delta);

// Sparse ER (p_e = c / d): finite-d bound on E[g] and its d -> infinity
// corollary value 2 (1-p)^2 / (c p) [1 - (1 - e^{-pc}) / (pc)].
struct SparseExpectation {
  double finite = 0.0;
  double limit = 0.0;
};
SparseExpectation SparseErExpectationFnr(int d, double c, double p_int,
                                         double delta);

// Sparse ER: bound on P(g >= c_e).
BoundValue SparseErProbFnr(double c_e, int d, double c, double p_int,
                           double delta);

// BA: E[f] <= (1-p)^2 m d, E[g] <= (1-p)^2, P(g >= c_e) <= (1-p)^2 / c_e.
struct BaExpectation {
  double f_mean = 0.0;
  double g_mean = 0.0;
  double p_int = 0.0;
  BoundValue Tail(double c_e) const;
};
BaExpectation BaExpectationBounds(int d, int m, double p_int);

// BA McDiarmid tail with per-node sensitivity m + C d^beta. The normalized
// form divides that sensitivity by m d.
BoundValue BaMcDiarmidTail(double t, int d, int m, double beta, double c_hat,
                           bool normalized);
// Denominator sum_k c_k^2 used by BaMcDiarmidTail.
double BaMcDiarmidDenominator(int d, int m, double beta, double c_hat,
                              bool normalized);

// P(|E| < (1 - delta) mu) <= exp(-delta^2 mu / 2).
double ChernoffEdgeLower(int d, double p_e, double delta);

// Fixed graph, random interventions:
//   E[g] <= (1/|E|) sum_{(i,j) in E} (1-p)^{|S_ij|}
// with S_ij = AN_j + {j} - AN_i (ancestral) or Pa_j + {j} - Pa_i
// (restricted). Empty when the graph has no edges.
std::optional<double> FixedGraphExpectationFnr(const Dag& dag, double p_int,
                                               FaithfulnessMode mode);

// Typical bounded differences for 0-1 variables. Computes
// e_k = gamma_k (d_k - c_k), C = max (c_k + e_k),
// V = sum (1 - p_k) p_k (c_k + e_k)^2, and returns
//   tail = exp(-t^2 / (2 V + 2 C t / 3)), bad = sum bad_prob / gamma_k.
struct WarnkeBound {
  BoundValue tail;
  BoundValue bad_event;
  double variance_proxy = 0.0;  // V
  double range = 0.0;           // C
};
WarnkeBound WarnkeTail(double t, std::span<const double> c_list,
                       std::span<const double> d_list,
                       std::span<const double> gamma_list,
                       std::span<const double> p_list, double bad_prob);

}  // namespace intorder

#endif  // INTORDER_BOUNDS_HPP_
