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

#include "intorder/harness.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "intorder/bounds.hpp"
#include "intorder/errors.hpp"
#include "intorder/rng.hpp"
#include "intorder/stats.hpp"
#include "intorder/textio.hpp"

namespace intorder {

std::string OptimizerName(OptimizerChoice o) {
  switch (o) {
    case OptimizerChoice::kExact:
      return "exact";
    case OptimizerChoice::kHeuristic:
      return "heuristic";
    case OptimizerChoice::kAuto:
      break;
  }
  return "auto";
}

OptimizerChoice ParseOptimizer(const std::string& name) {
  if (name == "exact") return OptimizerChoice::kExact;
  if (name == "heuristic") return OptimizerChoice::kHeuristic;
  if (name == "auto") return OptimizerChoice::kAuto;
  throw ParameterError("unknown optimizer '" + name + "'");
}

namespace {

template <typename T, typename Parse>
std::vector<T> ParseList(const std::string& value, Parse parse) {
  std::vector<T> out;
  for (const std::string& item : Split(value, ',')) {
    if (Trim(item).empty()) continue;
    out.push_back(static_cast<T>(parse(item)));
  }
  return out;
}

template <typename T, typename Fmt>
std::string JoinList(const std::vector<T>& xs, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += fmt(xs[i]);
  }
  return out;
}

}  // namespace

void ApplyConfigKey(SweepConfig& cfg, const std::string& key,
                    const std::string& raw) {
  const std::string value(Trim(raw));
  auto as_int = [](std::string_view s) { return ParseInt(s); };
  auto as_double = [](std::string_view s) { return ParseDouble(s); };
  try {
    if (key == "ensemble") {
      cfg.ensemble = ParseEnsemble(value);
    } else if (key == "d_grid") {
      cfg.d_grid = ParseList<int>(value, as_int);
    } else if (key == "density_grid") {
      cfg.density_grid = ParseList<double>(value, as_double);
    } else if (key == "m") {
      cfg.m = static_cast<int>(ParseInt(value));
    } else if (key == "p_int_grid") {
      cfg.p_int_grid = ParseList<double>(value, as_double);
    } else if (key == "runs_per_cell") {
      cfg.runs_per_cell = static_cast<int>(ParseInt(value));
    } else if (key == "optimizer") {
      cfg.optimizer = ParseOptimizer(value);
    } else if (key == "exact_limit") {
      cfg.exact_limit = static_cast<int>(ParseInt(value));
    } else if (key == "mode") {
      cfg.oracle.mode = ParseMode(value);
    } else if (key == "epsilon") {
      cfg.oracle.epsilon = ParseDouble(value);
    } else if (key == "delta") {
      cfg.oracle.delta = ParseDouble(value);
    } else if (key == "noise") {
      cfg.oracle.noise = ParseDouble(value);
    } else if (key == "c_score") {
      cfg.c_score = ParseDouble(value);
    } else if (key == "master_seed") {
      cfg.master_seed = ParseUint(value);
    } else if (key == "workers") {
      cfg.workers = static_cast<int>(ParseInt(value));
    } else {
      throw ParameterError("unknown config key '" + key + "'");
    }
  } catch (const FormatError& e) {
    throw ParameterError("config key '" + key + "': " + e.what());
  }
}

SweepConfig ParseConfig(std::istream& in, SweepConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string_view body = Trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("config line " + std::to_string(lineno) +
                           ": expected key = value");
    }
    try {
      ApplyConfigKey(base, std::string(Trim(body.substr(0, eq))),
                     std::string(body.substr(eq + 1)));
    } catch (const ParameterError& e) {
      throw ParameterError("config line " + std::to_string(lineno) + ": " +
                           e.what());
    }
  }
  return base;
}

std::string ConfigText(const SweepConfig& cfg) {
  std::ostringstream os;
  auto fmt_int = [](int v) { return std::to_string(v); };
  auto fmt_double = [](double v) { return FormatDouble(v); };
  os << "ensemble = " << EnsembleName(cfg.ensemble) << "\n"
     << "d_grid = " << JoinList(cfg.d_grid, fmt_int) << "\n"
     << "density_grid = " << JoinList(cfg.density_grid, fmt_double) << "\n"
     << "m = " << cfg.m << "\n"
     << "p_int_grid = " << JoinList(cfg.p_int_grid, fmt_double) << "\n"
     << "runs_per_cell = " << cfg.runs_per_cell << "\n"
     << "optimizer = " << OptimizerName(cfg.optimizer) << "\n"
     << "exact_limit = " << cfg.exact_limit << "\n"
     << "mode = " << ModeName(cfg.oracle.mode) << "\n"
     << "epsilon = " << FormatDouble(cfg.oracle.epsilon) << "\n"
     << "delta = " << FormatDouble(cfg.oracle.delta) << "\n"
     << "noise = " << FormatDouble(cfg.oracle.noise) << "\n"
     << "c_score = " << FormatDouble(cfg.ScoreConstant()) << "\n"
     << "master_seed = " << cfg.master_seed << "\n";
  return os.str();
}

void ValidateConfig(const SweepConfig& cfg) {
  if (cfg.d_grid.empty() || cfg.density_grid.empty() ||
      cfg.p_int_grid.empty()) {
    throw ParameterError("grids must be nonempty");
  }
  if (cfg.runs_per_cell < 1) throw ParameterError("runs_per_cell must be >= 1");
  if (cfg.ensemble == Ensemble::kCustom) {
    throw ParameterError("sweeps need a random ensemble");
  }
  if (cfg.exact_limit < 1 || cfg.exact_limit > kExactHardLimit) {
    throw ParameterError("exact_limit must lie in [1, " +
                         std::to_string(kExactHardLimit) + "]");
  }
  if (!(cfg.ScoreConstant() > cfg.oracle.epsilon)) {
    throw ParameterError("score constant c must exceed epsilon");
  }
  if (!(cfg.oracle.epsilon > 0.0) || !(cfg.oracle.delta > 0.0)) {
    throw ParameterError("epsilon and delta must be > 0");
  }
  if (!(cfg.oracle.noise >= 0.0 && cfg.oracle.noise < 1.0)) {
    throw ParameterError("noise must lie in [0, 1)");
  }
  for (double p : cfg.p_int_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p_int must lie in [0, 1]");
  }
  for (int d : cfg.d_grid) {
    if (d < 1) throw ParameterError("d must be >= 1");
    if (cfg.optimizer == OptimizerChoice::kExact && d > cfg.exact_limit) {
      throw InfeasibleError("exact optimizer requested for d = " +
                            std::to_string(d) + " above the exact limit " +
                            std::to_string(cfg.exact_limit));
    }
    for (double rho : cfg.density_grid) {
      switch (cfg.ensemble) {
        case Ensemble::kErdosRenyi:
          if (!(rho >= 0.0 && rho <= 1.0)) {
            throw ParameterError("p_e must lie in [0, 1]");
          }
          break;
        case Ensemble::kSparseEr:
          if (!(rho > 0.0) || rho / d > 1.0) {
            throw ParameterError("sparse ER needs 0 < c <= d");
          }
          break;
        case Ensemble::kBarabasiAlbert:
          if (!(rho > 0.0)) throw ParameterError("kappa must be > 0");
          if (cfg.m < 1) throw ParameterError("m must be >= 1");
          break;
        case Ensemble::kCustom:
          break;
      }
    }
  }
}

Aggregate Summarize(std::span<const double> xs) {
  Aggregate a;
  a.n = static_cast<int>(xs.size());
  if (xs.empty()) return a;
  a.mean = Mean(xs);
  a.std = SampleStd(xs);
  a.iqr = Iqr(xs);
  a.min = *std::min_element(xs.begin(), xs.end());
  a.max = *std::max_element(xs.begin(), xs.end());
  return a;
}

void RecomputeAggregates(ExperimentRecord& rec) {
  std::vector<double> fs;
  std::vector<double> gs;
  for (const RunRow& r : rec.runs) {
    fs.push_back(r.f);
    if (r.g) gs.push_back(*r.g);
  }
  rec.f = Summarize(fs);
  rec.g = Summarize(gs);
  rec.g_se = gs.empty() ? 0.0 : rec.g.std / std::sqrt(double(gs.size()));
}

std::optional<CellBound> CellExpectationBound(const CellParams& cell) {
  if (cell.d < 2) return std::nullopt;
  const double delta = DefaultSlack(cell.d);
  CellBound b;
  switch (cell.ensemble) {
    case Ensemble::kErdosRenyi:
      b.name = "er_expectation_fnr";
      if (cell.p_int <= 0.0 || cell.density <= 0.0) {
        b.value = 1.0;
        b.clamped = true;
        return b;
      }
      b.value = ErExpectationFnr(cell.d, cell.density, cell.p_int, delta);
      break;
    case Ensemble::kSparseEr:
      b.name = "sparse_er_expectation_fnr";
      if (cell.p_int <= 0.0) {
        b.value = 1.0;
        b.clamped = true;
        return b;
      }
      b.value =
          SparseErExpectationFnr(cell.d, cell.density, cell.p_int, delta)
              .finite;
      break;
    case Ensemble::kBarabasiAlbert:
      b.name = "ba_expectation_fnr";
      b.value = BaExpectationBounds(cell.d, std::max(cell.m, 1), cell.p_int)
                    .g_mean;
      break;
    case Ensemble::kCustom:
      return std::nullopt;
  }
  if (b.value > 1.0) {
    b.value = 1.0;
    b.clamped = true;
  }
  return b;
}

std::uint64_t RunSeed(std::uint64_t master, std::size_t cell_index,
                      int run_index) {
  return MixSeed(MixSeed(master, cell_index),
                 static_cast<std::uint64_t>(run_index));
}

RunRow RunOne(const SweepConfig& cfg, const CellParams& cell, int run_index,
              std::uint64_t seed) {
  const Dag dag = [&] {
    switch (cell.ensemble) {
      case Ensemble::kSparseEr:
        return GenerateSparseEr(cell.d, cell.density, seed);
      case Ensemble::kBarabasiAlbert:
        return GenerateBa(cell.d, cell.m, cell.density, seed);
      default:
        return GenerateEr(cell.d, cell.density, seed);
    }
  }();
  const InterventionVector iv = SampleInterventions(cell.d, cell.p_int, seed);
  OracleParams op = cfg.oracle;
  op.mode = cell.mode;
  op.noise_seed = StreamSeed(seed, Stream::kNoise);
  const DistanceOracle oracle = BuildOracle(dag, iv, op);
  const double c = cfg.ScoreConstant();

  const bool exact =
      cfg.optimizer == OptimizerChoice::kExact ||
      (cfg.optimizer == OptimizerChoice::kAuto && cell.d <= cfg.exact_limit);
  const CausalOrder order = exact
                                ? OptExact(oracle, iv, c, cfg.exact_limit)
                                : OptHeuristic(oracle, iv, c, seed);
  const OrderEval ev = Evaluate(dag, order, oracle, iv, c);

  RunRow row;
  row.run_index = run_index;
  row.seed = seed;
  row.edge_count = dag.edge_count();
  row.f = ev.d_top;
  row.g = ev.fnr;
  row.score = ev.score;
  row.optimizer = order.provenance;
  return row;
}

std::vector<CellParams> EnumerateCells(const SweepConfig& cfg) {
  std::vector<CellParams> cells;
  for (double rho : cfg.density_grid) {
    for (double p : cfg.p_int_grid) {
      for (int d : cfg.d_grid) {
        CellParams cell;
        cell.ensemble = cfg.ensemble;
        cell.d = d;
        cell.density = rho;
        cell.m = cfg.ensemble == Ensemble::kBarabasiAlbert ? cfg.m : 0;
        cell.p_int = p;
        cell.mode = cfg.oracle.mode;
        cells.push_back(cell);
      }
    }
  }
  return cells;
}

std::vector<ExperimentRecord> RunSweep(const SweepConfig& cfg) {
  ValidateConfig(cfg);
  const std::vector<CellParams> cells = EnumerateCells(cfg);
  const std::size_t runs = static_cast<std::size_t>(cfg.runs_per_cell);
  std::vector<RunRow> rows(cells.size() * runs);
  const int workers = cfg.workers > 0 ? cfg.workers : DefaultWorkers();
  ParallelFor(rows.size(), workers, [&](std::size_t job) {
    const std::size_t cell = job / runs;
    const int run = static_cast<int>(job % runs);
    rows[job] =
        RunOne(cfg, cells[cell], run, RunSeed(cfg.master_seed, cell, run));
  });

  std::vector<ExperimentRecord> records(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    ExperimentRecord& rec = records[c];
    rec.cell = cells[c];
    rec.runs.assign(rows.begin() + c * runs, rows.begin() + (c + 1) * runs);
    RecomputeAggregates(rec);
    rec.bound = CellExpectationBound(rec.cell);
  }
  return records;
}

Metric ParseMetric(const std::string& s) {
  if (s == "f") return Metric::kF;
  if (s == "g") return Metric::kG;
  throw ParameterError("metric must be f or g");
}

DeviationStat ParseDeviationStat(const std::string& s) {
  if (s == "iqr") return DeviationStat::kIqr;
  if (s == "std") return DeviationStat::kStd;
  throw ParameterError("stat must be iqr or std");
}

std::vector<std::pair<int, double>> DeviationProfile(
    const std::vector<ExperimentRecord>& records, Metric metric,
    DeviationStat stat) {
  std::vector<std::pair<int, double>> out;
  if (records.empty()) return out;
  const CellParams& first = records.front().cell;
  for (const ExperimentRecord& rec : records) {
    if (rec.cell.ensemble != first.ensemble ||
        rec.cell.density != first.density || rec.cell.p_int != first.p_int) {
      throw ParameterError(
          "deviation profile needs records sharing ensemble, density and "
          "p_int");
    }
    std::vector<double> xs;
    for (const RunRow& r : rec.runs) {
      if (metric == Metric::kF) {
        xs.push_back(r.f);
      } else if (r.g) {
        xs.push_back(*r.g);
      }
    }
    if (stat == DeviationStat::kIqr) {
      if (xs.size() < 4) {
        throw ParameterError("IQR needs at least 4 runs per cell");
      }
      out.emplace_back(rec.cell.d, Iqr(xs));
    } else {
      out.emplace_back(rec.cell.d, SampleStd(xs));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<ComparisonRow> BoundComparison(
    const std::vector<ExperimentRecord>& records) {
  std::vector<ComparisonRow> out;
  for (const ExperimentRecord& rec : records) {
    if (!rec.bound || rec.g.n == 0) continue;
    ComparisonRow row;
    row.cell = rec.cell;
    row.mean = rec.g.mean;
    row.se = rec.g_se;
    row.bound = rec.bound->value;
    row.vacuous = rec.bound->clamped;
    row.margin = row.bound + 3.0 * row.se - row.mean;
    row.pass = row.margin >= 0.0;
    out.push_back(row);
  }
  return out;
}

MaxDegreeFit FitBaMaxDegree(int m, double kappa, const std::vector<int>& d_grid,
                            int seeds, std::uint64_t master_seed,
                            int workers) {
  if (d_grid.size() < 2) throw ParameterError("need at least two sizes");
  if (seeds < 1) throw ParameterError("seeds must be >= 1");
  const BaExponents theory = GammaOf(m, kappa);
  MaxDegreeFit out;
  out.gamma_theory = theory.gamma;
  out.points.resize(d_grid.size() * seeds);
  ParallelFor(out.points.size(), workers, [&](std::size_t idx) {
    const std::size_t cell = idx / seeds;
    const int s = static_cast<int>(idx % seeds);
    const int d = d_grid[cell];
    const Dag g = GenerateBa(d, m, kappa, RunSeed(master_seed, cell, s));
    out.points[idx] = {d, s, MaxTotalDegree(g)};
  });
  std::vector<double> xs, ys, scaled;
  for (const MaxDegreePoint& p : out.points) {
    xs.push_back(p.d);
    ys.push_back(p.max_degree);
    scaled.push_back(p.max_degree / std::pow(p.d, theory.beta));
  }
  const PowerFit fit = FitScaling(xs, ys);
  out.beta_hat = fit.exponent;
  out.gamma_hat = 1.0 + 1.0 / fit.exponent;
  out.r2 = fit.r2;
  out.c_hat = Quantile(scaled, 0.99);
  return out;
}

namespace {

constexpr int kColumns = 31;
constexpr const char* kHeader =
    "ensemble,d,density_param,m,kappa,p_int,mode,aggregate,run_index,seed,"
    "edge_count,f,g,score,optimizer,n_runs,f_mean,f_std,f_iqr,f_min,f_max,"
    "g_n,g_mean,g_std,g_iqr,g_min,g_max,g_se,bound_name,bound_value,"
    "bound_clamped";

std::string CellPrefix(const CellParams& c) {
  const bool ba = c.ensemble == Ensemble::kBarabasiAlbert;
  std::string s = EnsembleName(c.ensemble) + "," + std::to_string(c.d) + "," +
                  FormatDouble(c.density) + ",";
  s += ba ? std::to_string(c.m) : "";
  s += ",";
  s += ba ? FormatDouble(c.density) : "";
  s += "," + FormatDouble(c.p_int) + "," + ModeName(c.mode);
  return s;
}

void AppendAggregate(std::string& s, const Aggregate& a) {
  s += "," + FormatDouble(a.mean) + "," + FormatDouble(a.std) + "," +
       FormatDouble(a.iqr) + "," + FormatDouble(a.min) + "," +
       FormatDouble(a.max);
}

Provenance ParseProvenance(const std::string& s) {
  if (s == "exact") return Provenance::kExact;
  if (s == "heuristic") return Provenance::kHeuristic;
  if (s == "linear-extension") return Provenance::kLinearExtension;
  throw FormatError("unknown optimizer '" + s + "'");
}

}  // namespace

void WriteResultsCsv(const std::vector<ExperimentRecord>& records,
                     std::ostream& out) {
  out << kResultsSchema << "\n" << kHeader << "\n";
  for (const ExperimentRecord& rec : records) {
    const std::string prefix = CellPrefix(rec.cell);
    for (const RunRow& r : rec.runs) {
      out << prefix << ",0," << r.run_index << ',' << r.seed << ','
          << r.edge_count << ',' << r.f << ','
          << (r.g ? FormatDouble(*r.g) : "") << ',' << FormatDouble(r.score)
          << ',' << ProvenanceName(r.optimizer)
          << ",,,,,,,,,,,,,,,," << "\n";
    }
    std::string agg = prefix + ",1,,,,,,,," + std::to_string(rec.f.n);
    AppendAggregate(agg, rec.f);
    agg += "," + std::to_string(rec.g.n);
    AppendAggregate(agg, rec.g);
    agg += "," + FormatDouble(rec.g_se);
    if (rec.bound) {
      agg += "," + rec.bound->name + "," + FormatDouble(rec.bound->value) +
             "," + (rec.bound->clamped ? "1" : "0");
    } else {
      agg += ",,,";
    }
    out << agg << "\n";
  }
}

std::string ResultsCsvString(const std::vector<ExperimentRecord>& records) {
  std::ostringstream os;
  WriteResultsCsv(records, os);
  return os.str();
}

std::vector<ExperimentRecord> ReadResultsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || Trim(line) != kResultsSchema) {
    throw FormatError("line 1: expected schema marker '" +
                      std::string(kResultsSchema) + "'");
  }
  if (!std::getline(in, line) || Trim(line) != kHeader) {
    throw FormatError("line 2: unexpected column header");
  }
  std::vector<ExperimentRecord> records;
  ExperimentRecord pending;
  bool open = false;
  int lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty()) continue;
    try {
      const std::vector<std::string> col = Split(line, ',');
      if (static_cast<int>(col.size()) != kColumns) {
        throw FormatError("expected " + std::to_string(kColumns) +
                          " columns, got " + std::to_string(col.size()));
      }
      CellParams cell;
      cell.ensemble = ParseEnsemble(col[0]);
      cell.d = static_cast<int>(ParseInt(col[1]));
      cell.density = ParseDouble(col[2]);
      cell.m = col[3].empty() ? 0 : static_cast<int>(ParseInt(col[3]));
      cell.p_int = ParseDouble(col[5]);
      cell.mode = ParseMode(col[6]);
      if (open && !(pending.cell == cell)) {
        throw FormatError("run row belongs to a different cell");
      }
      pending.cell = cell;
      open = true;
      if (col[7] == "0") {
        RunRow r;
        r.run_index = static_cast<int>(ParseInt(col[8]));
        r.seed = ParseUint(col[9]);
        r.edge_count = static_cast<int>(ParseInt(col[10]));
        r.f = static_cast<int>(ParseInt(col[11]));
        if (!col[12].empty()) r.g = ParseDouble(col[12]);
        r.score = ParseDouble(col[13]);
        r.optimizer = ParseProvenance(col[14]);
        pending.runs.push_back(r);
      } else if (col[7] == "1") {
        auto read_agg = [&](int base, int n) {
          Aggregate a;
          a.n = n;
          a.mean = ParseDouble(col[base]);
          a.std = ParseDouble(col[base + 1]);
          a.iqr = ParseDouble(col[base + 2]);
          a.min = ParseDouble(col[base + 3]);
          a.max = ParseDouble(col[base + 4]);
          return a;
        };
        pending.f = read_agg(16, static_cast<int>(ParseInt(col[15])));
        pending.g = read_agg(22, static_cast<int>(ParseInt(col[21])));
        pending.g_se = ParseDouble(col[27]);
        if (!col[28].empty()) {
          CellBound b;
          b.name = col[28];
          b.value = ParseDouble(col[29]);
          if (col[30] != "0" && col[30] != "1") {
            throw FormatError("bound_clamped must be 0 or 1");
          }
          b.clamped = col[30] == "1";
          pending.bound = b;
        }
        records.push_back(std::move(pending));
        pending = ExperimentRecord{};
        open = false;
      } else {
        throw FormatError("aggregate flag must be 0 or 1");
      }
    } catch (const std::exception& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (open) {
    throw FormatError("line " + std::to_string(lineno) +
                      ": run rows without a closing aggregate row");
  }
  return records;
}

}  // namespace intorder
