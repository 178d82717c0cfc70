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

#include "intorder/verify.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "intorder/errors.hpp"
#include "intorder/ordering.hpp"
#include "intorder/rng.hpp"
#include "intorder/sensitivity.hpp"
#include "intorder/stats.hpp"
#include "intorder/textio.hpp"

namespace intorder {

namespace {

constexpr std::size_t kMaxDetails = 20;

void CheckOptions(const SuiteOptions& opts) {
  if (opts.d_min < 1 || opts.d_max < opts.d_min) {
    throw ParameterError("need 1 <= d_min <= d_max");
  }
  if (opts.d_max > kExactLimit) {
    throw InfeasibleError("suites run the exact optimizer; d_max <= " +
                          std::to_string(kExactLimit));
  }
  if (opts.instances < 1) throw ParameterError("instances must be >= 1");
  if (opts.p_e_grid.empty() || opts.p_int_grid.empty()) {
    throw ParameterError("grids must be nonempty");
  }
}

std::string Describe(const SuiteInstance& inst) {
  std::ostringstream os;
  os << "seed=" << inst.seed << " d=" << inst.dag.size()
     << " p_e=" << FormatDouble(inst.p_e)
     << " p_int=" << FormatDouble(inst.iv.p_int);
  return os.str();
}

OracleParams ModeParams(const SuiteOptions& opts, const SuiteInstance& inst) {
  OracleParams p = opts.oracle;
  p.mode = opts.mode;
  p.noise_seed = StreamSeed(inst.seed, Stream::kNoise);
  return p;
}

}  // namespace

SuiteInstance MakeSuiteInstance(const SuiteOptions& opts, int n) {
  const int nd = opts.d_max - opts.d_min + 1;
  const int np = static_cast<int>(opts.p_e_grid.size());
  const int nq = static_cast<int>(opts.p_int_grid.size());
  const int d = opts.d_min + n % nd;
  const double p_e = opts.p_e_grid[(n / nd) % np];
  const double p_int = opts.p_int_grid[(n / (nd * np)) % nq];
  const std::uint64_t seed = MixSeed(opts.seed, static_cast<std::uint64_t>(n));
  return {GenerateEr(d, p_e, seed), SampleInterventions(d, p_int, seed), p_e,
          seed};
}

SuiteResult OptimizerSuite(const SuiteOptions& opts) {
  CheckOptions(opts);
  SuiteResult res;
  res.name = "optimizer-" + ModeName(opts.mode);
  res.instances = opts.instances;
  std::vector<int> agree(opts.instances, 0);
  std::vector<std::string> bad(opts.instances);
  ParallelFor(opts.instances, opts.workers, [&](std::size_t n) {
    const SuiteInstance inst = MakeSuiteInstance(opts, static_cast<int>(n));
    const DistanceOracle oracle =
        BuildOracle(inst.dag, inst.iv, ModeParams(opts, inst));
    const PairWeights w(oracle, inst.iv, opts.c_score);
    const double exact =
        Score(OptExact(oracle, inst.iv, opts.c_score).position, w);
    const double heur =
        Score(OptHeuristic(oracle, inst.iv, opts.c_score, inst.seed).position,
              w);
    if (heur > exact + w.tolerance()) {
      bad[n] = Describe(inst) + " heuristic " + FormatDouble(heur) +
               " exceeds exact " + FormatDouble(exact);
    }
    agree[n] = std::abs(heur - exact) <= w.tolerance() ? 1 : 0;
  });
  for (int n = 0; n < opts.instances; ++n) {
    res.agreements += agree[n];
    if (!bad[n].empty()) {
      ++res.violations;
      if (res.details.size() < kMaxDetails) res.details.push_back(bad[n]);
    }
  }
  res.passed = res.violations == 0 &&
               res.agreements >= std::ceil(opts.min_agreement * opts.instances);
  if (res.agreements < opts.instances) {
    res.details.push_back("heuristic matched exact on " +
                          std::to_string(res.agreements) + "/" +
                          std::to_string(opts.instances) + " instances");
  }
  return res;
}

SuiteResult LemmaSuite(const SuiteOptions& opts) {
  CheckOptions(opts);
  SuiteResult res;
  res.name = "lemma-" + ModeName(opts.mode);
  res.instances = opts.instances;
  std::vector<std::string> bad(opts.instances);
  ParallelFor(opts.instances, opts.workers, [&](std::size_t n) {
    const SuiteInstance inst = MakeSuiteInstance(opts, static_cast<int>(n));
    const DistanceOracle oracle =
        BuildOracle(inst.dag, inst.iv, ModeParams(opts, inst));
    const CausalOrder best = OptExact(oracle, inst.iv, opts.c_score);
    const auto violated =
        CheckOrientationLemma(inst.dag, inst.iv, best, opts.mode);
    if (!violated.empty()) {
      std::string s = Describe(inst) + " edges";
      for (const Edge& e : violated) {
        s += " " + std::to_string(e.from) + "->" + std::to_string(e.to);
      }
      bad[n] = s;
    }
  });
  for (const std::string& s : bad) {
    if (s.empty()) continue;
    ++res.violations;
    if (res.details.size() < kMaxDetails) res.details.push_back(s);
  }
  res.agreements = res.instances - res.violations;
  res.passed = res.violations == 0;
  return res;
}

SuiteResult LipschitzSuite(const SuiteOptions& opts) {
  CheckOptions(opts);
  SuiteResult res;
  res.name = "lipschitz-" + ModeName(opts.mode);
  res.instances = opts.instances;
  std::vector<std::string> bad(opts.instances);
  ParallelFor(opts.instances, opts.workers, [&](std::size_t n) {
    const SuiteInstance inst = MakeSuiteInstance(opts, static_cast<int>(n));
    FlipSetup setup;
    setup.oracle = ModeParams(opts, inst);
    setup.c = opts.c_score;
    const std::vector<int> ck = ExactCkAll(inst.dag, setup);
    const LipschitzReport report = BoundsReport(inst.dag);
    const auto& bound = opts.mode == FaithfulnessMode::kAncestral
                            ? report.bound_ad
                            : report.bound_io;
    std::string s;
    for (NodeId k = 0; k < inst.dag.size(); ++k) {
      if (ck[k] > bound[k]) {
        s += " node " + std::to_string(k) + ": c_k=" + std::to_string(ck[k]) +
             " > " + std::to_string(bound[k]);
      }
    }
    if (!s.empty()) bad[n] = Describe(inst) + s;
  });
  for (const std::string& s : bad) {
    if (s.empty()) continue;
    ++res.violations;
    if (res.details.size() < kMaxDetails) res.details.push_back(s);
  }
  res.agreements = res.instances - res.violations;
  res.passed = res.violations == 0;
  return res;
}

std::string SuiteCsv(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  os << "suite,instances,agreements,violations,status\n";
  for (const SuiteResult& r : results) {
    os << r.name << ',' << r.instances << ',' << r.agreements << ','
       << r.violations << ',' << (r.passed ? "pass" : "fail") << "\n";
  }
  for (const SuiteResult& r : results) {
    for (const std::string& d : r.details) os << "# " << r.name << ": " << d << "\n";
  }
  return os.str();
}

}  // namespace intorder
