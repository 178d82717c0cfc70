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

#ifndef INTORDER_VERIFY_HPP_
#define INTORDER_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "intorder/graphgen.hpp"
#include "intorder/oracle.hpp"

namespace intorder {

// Small-instance oracle suites: random ER instances checked against the
// exhaustive optimizer.
struct SuiteOptions {
  int d_min = 4;
  int d_max = 8;
  int instances = 500;
  std::vector<double> p_e_grid = {0.3, 0.6};
  std::vector<double> p_int_grid = {0.25, 0.5, 0.75};
  FaithfulnessMode mode = FaithfulnessMode::kAncestral;
  OracleParams oracle;          // mode is taken from `mode`
  double c_score = 0.6;         // must exceed oracle.epsilon
  double min_agreement = 0.95;  // optimizer suite pass threshold
  std::uint64_t seed = 0;
  int workers = 1;
};

struct SuiteResult {
  std::string name;
  int instances = 0;
  int agreements = 0;  // optimizer suite: heuristic score == exact score
  int violations = 0;
  bool passed = false;
  std::vector<std::string> details;  // one line per violation (capped)
};

struct SuiteInstance {
  Dag dag;
  InterventionVector iv;
  double p_e = 0.0;
  std::uint64_t seed = 0;
};
// Instance n cycles d over [d_min, d_max], then p_e, then p_int.
SuiteInstance MakeSuiteInstance(const SuiteOptions& opts, int n);

// Heuristic vs exact: pass iff the heuristic never beats the exact score
// and matches it on at least min_agreement of instances.
SuiteResult OptimizerSuite(const SuiteOptions& opts);
// Orientation lemma on every exact maximizer; pass iff no violations.
SuiteResult LemmaSuite(const SuiteOptions& opts);
// Exact c_k (exhaustive contexts) against |Anc|+|Desc| (ancestral) or the
// total degree (restricted); pass iff no violations.
SuiteResult LipschitzSuite(const SuiteOptions& opts);

// CSV lines "suite,mode,instances,agreements,violations,status" plus detail
// lines prefixed with '#'.
std::string SuiteCsv(const std::vector<SuiteResult>& results);

}  // namespace intorder

#endif  // INTORDER_VERIFY_HPP_
