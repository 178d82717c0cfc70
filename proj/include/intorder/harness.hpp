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

#ifndef INTORDER_HARNESS_HPP_
#define INTORDER_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intorder/graphgen.hpp"
#include "intorder/oracle.hpp"
#include "intorder/ordering.hpp"

namespace intorder {

enum class OptimizerChoice { kExact, kHeuristic, kAuto };
std::string OptimizerName(OptimizerChoice o);
OptimizerChoice ParseOptimizer(const std::string& name);

struct SweepConfig {
  Ensemble ensemble = Ensemble::kErdosRenyi;
  std::vector<int> d_grid = {30, 50, 100, 200, 400};
  // p_e (er), c (sparse_er) or kappa (ba).
  std::vector<double> density_grid = {0.4};
  int m = 3;
  std::vector<double> p_int_grid = {0.5};
  int runs_per_cell = 10;
  OptimizerChoice optimizer = OptimizerChoice::kAuto;
  int exact_limit = kExactLimit;
  OracleParams oracle;  // mode, epsilon, delta, noise (seed is per run)
  std::optional<double> c_score;  // default epsilon + delta + 0.1
  std::uint64_t master_seed = 0;
  int workers = 0;  // 0: DefaultWorkers()

  double ScoreConstant() const {
    return c_score ? *c_score : oracle.epsilon + oracle.delta + 0.1;
  }
};

// Applies one "key = value" setting; lists are comma separated. Throws
// ParameterError on unknown keys or bad values.
void ApplyConfigKey(SweepConfig& cfg, const std::string& key,
                    const std::string& value);
// Key-value text: one "key = value" per line, '#' starts a comment.
SweepConfig ParseConfig(std::istream& in, SweepConfig base = {});
std::string ConfigText(const SweepConfig& cfg);

// Throws ParameterError for empty grids or bad values and InfeasibleError
// when exact optimization is requested above the exact limit.
void ValidateConfig(const SweepConfig& cfg);

struct CellParams {
  Ensemble ensemble = Ensemble::kErdosRenyi;
  int d = 0;
  double density = 0.0;
  int m = 0;
  double p_int = 0.0;
  FaithfulnessMode mode = FaithfulnessMode::kAncestral;

  double kappa() const {
    return ensemble == Ensemble::kBarabasiAlbert ? density : 0.0;
  }
  friend bool operator==(const CellParams&, const CellParams&) = default;
};

struct RunRow {
  int run_index = 0;
  std::uint64_t seed = 0;
  int edge_count = 0;
  int f = 0;
  std::optional<double> g;
  double score = 0.0;
  Provenance optimizer = Provenance::kExact;
  friend bool operator==(const RunRow&, const RunRow&) = default;
};

struct Aggregate {
  int n = 0;
  double mean = 0.0;
  double std = 0.0;
  double iqr = 0.0;
  double min = 0.0;
  double max = 0.0;
  friend bool operator==(const Aggregate&, const Aggregate&) = default;
};
Aggregate Summarize(std::span<const double> xs);

struct CellBound {
  std::string name;
  double value = 0.0;
  bool clamped = false;
  friend bool operator==(const CellBound&, const CellBound&) = default;
};

struct ExperimentRecord {
  CellParams cell;
  std::vector<RunRow> runs;
  Aggregate f;
  Aggregate g;  // over runs with |E| > 0
  double g_se = 0.0;
  std::optional<CellBound> bound;  // bound on E[g] for the cell
  friend bool operator==(const ExperimentRecord&,
                         const ExperimentRecord&) = default;
};

// Fills f, g and g_se from the run rows.
void RecomputeAggregates(ExperimentRecord& rec);

// Bound on E[g] matching the cell's ensemble:
//   er: dense ER expectation bound with delta = d^{-1/2},
//   sparse_er: finite-d sparse bound with delta = d^{-1/2},
//   ba: (1 - p_int)^2.
std::optional<CellBound> CellExpectationBound(const CellParams& cell);

std::uint64_t RunSeed(std::uint64_t master, std::size_t cell_index,
                      int run_index);

// One Monte Carlo draw: graph -> interventions -> oracle -> optimizer.
RunRow RunOne(const SweepConfig& cfg, const CellParams& cell, int run_index,
              std::uint64_t seed);

std::vector<CellParams> EnumerateCells(const SweepConfig& cfg);
std::vector<ExperimentRecord> RunSweep(const SweepConfig& cfg);

enum class Metric { kF, kG };
enum class DeviationStat { kIqr, kStd };
Metric ParseMetric(const std::string& s);
DeviationStat ParseDeviationStat(const std::string& s);

// (d, stat) sorted by d. Records must share ensemble, density and p_int.
// IQR needs at least 4 runs per cell.
std::vector<std::pair<int, double>> DeviationProfile(
    const std::vector<ExperimentRecord>& records, Metric metric,
    DeviationStat stat);

struct ComparisonRow {
  CellParams cell;
  double mean = 0.0;
  double se = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound + 3 se - mean
  bool vacuous = false;
  bool pass = false;
};
// Mean g against the cell bound with 3 standard errors of slack. Records
// without a bound are skipped.
std::vector<ComparisonRow> BoundComparison(
    const std::vector<ExperimentRecord>& records);

// Max total degree of BA graphs over a grid of sizes, one graph per
// (d, seed index). The fit pools every point: log(max degree) on log d gives
// beta_hat, and gamma_hat = 1 + 1 / beta_hat.
struct MaxDegreePoint {
  int d = 0;
  int seed_index = 0;
  int max_degree = 0;
};
struct MaxDegreeFit {
  std::vector<MaxDegreePoint> points;
  double beta_hat = 0.0;
  double gamma_hat = 0.0;
  double gamma_theory = 0.0;
  double r2 = 0.0;
  // 99th percentile of max_degree / d^beta (theoretical beta) over all points.
  double c_hat = 0.0;
};
inline const std::vector<int> kMaxDegreeGrid = {30,  50,   100,  200,  400,
                                                800, 1500, 2000, 3000, 4000};
MaxDegreeFit FitBaMaxDegree(int m, double kappa, const std::vector<int>& d_grid,
                            int seeds, std::uint64_t master_seed,
                            int workers = 1);

inline constexpr const char* kResultsSchema = "# intorder-results v1";
void WriteResultsCsv(const std::vector<ExperimentRecord>& records,
                     std::ostream& out);
std::string ResultsCsvString(const std::vector<ExperimentRecord>& records);
// Throws FormatError naming the offending line.
std::vector<ExperimentRecord> ReadResultsCsv(std::istream& in);

}  // namespace intorder

#endif  // INTORDER_HARNESS_HPP_
