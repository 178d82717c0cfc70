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


#include "intorder/intorder.h"

#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "intorder/bounds.hpp"
#include "intorder/errors.hpp"
#include "intorder/graphgen.hpp"
#include "intorder/harness.hpp"
#include "intorder/oracle.hpp"
#include "intorder/ordering.hpp"
#include "intorder/rng.hpp"
#include "intorder/sensitivity.hpp"
#include "intorder/stats.hpp"
#include "intorder/textio.hpp"
#include "intorder/verify.hpp"
#include "json.hpp"

struct io_text {
  std::string data;
};

struct io_graph {
  intorder::Dag dag;
};

struct io_sweep {
  intorder::SweepConfig config;
};

namespace {

using namespace intorder;

thread_local std::string last_error;

template <typename Fn>
io_status Guard(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return IO_OK;
  } catch (const InfeasibleError& e) {
    last_error = e.what();
    return IO_ERR_INFEASIBLE;
  } catch (const FormatError& e) {
    last_error = e.what();
    return IO_ERR_FORMAT;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return IO_ERR_PARAM;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return IO_ERR_PARAM;
  } catch (const std::ios_base::failure& e) {
    last_error = e.what();
    return IO_ERR_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return IO_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return IO_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

io_text* NewText(std::string s) { return new io_text{std::move(s)}; }

std::string ReadFile(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure(std::string("cannot open ") + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const char* path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure(std::string("cannot write ") + path);
  out << data;
  out.flush();
  if (!out) throw std::ios_base::failure(std::string("cannot write ") + path);
}

FaithfulnessMode ToMode(io_mode m) {
  switch (m) {
    case IO_MODE_ANCESTRAL:
      return FaithfulnessMode::kAncestral;
    case IO_MODE_RESTRICTED:
      return FaithfulnessMode::kRestricted;
  }
  throw ParameterError("unknown mode");
}

// Everything one evaluation produces.
struct EvalRun {
  InterventionVector iv;
  DistanceOracle oracle;
  CausalOrder order;
  OrderEval eval;
  double c = 0.0;
};

InterventionVector MakeInterventions(const Dag& dag,
                                     const io_eval_options& o) {
  if (o.targets != nullptr) {
    std::vector<NodeId> t(o.targets, o.targets + o.n_targets);
    for (NodeId k : t) {
      Require(k >= 0 && k < dag.size(), "intervention target out of range");
    }
    return InterventionVector::FromTargets(dag.size(), t);
  }
  return SampleInterventions(dag.size(), o.p_int, o.seed);
}

OracleParams MakeOracleParams(const io_eval_options& o) {
  OracleParams p;
  p.mode = ToMode(o.mode);
  p.epsilon = o.epsilon;
  p.delta = o.delta;
  p.noise = o.noise;
  p.noise_seed = StreamSeed(o.seed, Stream::kNoise);
  return p;
}

EvalRun RunEval(const Dag& dag, const io_eval_options& o) {
  EvalRun r{MakeInterventions(dag, o), {}, {}, {}, 0.0};
  r.oracle = BuildOracle(dag, r.iv, MakeOracleParams(o));
  r.c = o.c_score > 0.0 ? o.c_score : o.epsilon + o.delta + 0.1;
  const bool exact =
      o.optimizer == IO_OPT_EXACT ||
      (o.optimizer == IO_OPT_AUTO && dag.size() <= o.exact_limit);
  if (o.optimizer != IO_OPT_EXACT && o.optimizer != IO_OPT_HEURISTIC &&
      o.optimizer != IO_OPT_AUTO) {
    throw ParameterError("unknown optimizer");
  }
  r.order = exact ? OptExact(r.oracle, r.iv, r.c, o.exact_limit)
                  : OptHeuristic(r.oracle, r.iv, r.c, o.seed);
  r.eval = Evaluate(dag, r.order, r.oracle, r.iv, r.c);
  return r;
}

int SupraPairs(const DistanceOracle& oracle) {
  int n = 0;
  for (NodeId i = 0; i < oracle.size(); ++i) {
    for (NodeId j = 0; j < oracle.size(); ++j) n += oracle.Supra(i, j);
  }
  return n;
}

template <typename T>
std::vector<T> View(const T* p, size_t n) {
  if (p == nullptr) return {};
  return std::vector<T>(p, p + n);
}

std::string Field(std::optional<double> v) {
  return v ? FormatDouble(*v) : std::string();
}

// One row of the bounds table.
struct BoundRow {
  std::string name;
  int d = 0;
  std::optional<double> p_e, c, m, kappa, p_int, delta, t, c_e;
  double value = 0.0;
  bool clamped = false;
};

std::string BoundRowText(const BoundRow& r) {
  std::string s = r.name + ',' + std::to_string(r.d);
  for (const auto& v : {r.p_e, r.c, r.m, r.kappa, r.p_int, r.delta, r.t, r.c_e}) {
    s += ',' + Field(v);
  }
  s += ',' + FormatDouble(r.value) + ',' + (r.clamped ? "1" : "0") + '\n';
  return s;
}

}  // namespace

extern "C" {

const char* io_version(void) { return "0.1.0"; }

const char* io_last_error(void) { return last_error.c_str(); }

const char* io_status_name(io_status status) {
  switch (status) {
    case IO_OK:
      return "ok";
    case IO_ERR_PARAM:
      return "parameter error";
    case IO_ERR_INFEASIBLE:
      return "infeasible";
    case IO_ERR_FORMAT:
      return "format error";
    case IO_ERR_IO:
      return "i/o error";
    case IO_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* io_text_data(const io_text* text) {
  return text ? text->data.c_str() : "";
}

size_t io_text_size(const io_text* text) { return text ? text->data.size() : 0; }

void io_text_free(io_text* text) { delete text; }

io_status io_text_save(const io_text* text, const char* path) {
  return Guard([&] {
    Require(text != nullptr && path != nullptr, "null argument");
    WriteFile(path, text->data);
  });
}

io_status io_graph_generate(const char* model, int d, double param, int m,
                            uint64_t seed, io_graph** out) {
  return Guard([&] {
    Require(model != nullptr && out != nullptr, "null argument");
    switch (ParseEnsemble(model)) {
      case Ensemble::kErdosRenyi:
        *out = new io_graph{GenerateEr(d, param, seed)};
        break;
      case Ensemble::kSparseEr:
        *out = new io_graph{GenerateSparseEr(d, param, seed)};
        break;
      case Ensemble::kBarabasiAlbert:
        *out = new io_graph{GenerateBa(d, m, param, seed)};
        break;
      default:
        throw ParameterError("model must be er, sparse_er or ba");
    }
  });
}

io_status io_graph_from_edges(int d, const int* from, const int* to,
                              size_t n_edges, io_graph** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    Require(n_edges == 0 || (from != nullptr && to != nullptr),
            "null edge arrays");
    std::vector<Edge> edges;
    for (size_t k = 0; k < n_edges; ++k) edges.push_back({from[k], to[k]});
    *out = new io_graph{Dag::FromEdges(d, std::move(edges))};
  });
}

io_status io_graph_load(const char* path, io_graph** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    std::istringstream in(ReadFile(path));
    *out = new io_graph{ReadEdgeList(in)};
  });
}

io_status io_graph_parse(const char* text, io_graph** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    std::istringstream in(text);
    *out = new io_graph{ReadEdgeList(in)};
  });
}

io_status io_graph_save(const io_graph* graph, const char* path) {
  return Guard([&] {
    Require(graph != nullptr && path != nullptr, "null argument");
    WriteFile(path, EdgeListString(graph->dag));
  });
}

io_status io_graph_text(const io_graph* graph, io_text** out) {
  return Guard([&] {
    Require(graph != nullptr && out != nullptr, "null argument");
    *out = NewText(EdgeListString(graph->dag));
  });
}

int io_graph_nodes(const io_graph* graph) {
  return graph ? graph->dag.size() : 0;
}

int io_graph_edge_count(const io_graph* graph) {
  return graph ? graph->dag.edge_count() : 0;
}

io_status io_graph_edge(const io_graph* graph, int index, int* from, int* to) {
  return Guard([&] {
    Require(graph != nullptr && from != nullptr && to != nullptr,
            "null argument");
    Require(index >= 0 && index < graph->dag.edge_count(),
            "edge index out of range");
    const Edge e = graph->dag.edges()[index];
    *from = e.from;
    *to = e.to;
  });
}

int io_graph_max_degree(const io_graph* graph) {
  return graph ? MaxTotalDegree(graph->dag) : 0;
}

io_status io_graph_lipschitz_json(const io_graph* graph, io_text** out) {
  return Guard([&] {
    Require(graph != nullptr && out != nullptr, "null argument");
    *out = NewText(ReportJson(BoundsReport(graph->dag)));
  });
}

void io_graph_free(io_graph* graph) { delete graph; }

void io_eval_options_init(io_eval_options* options) {
  if (options == nullptr) return;
  const OracleParams defaults;
  *options = io_eval_options{};
  options->mode = IO_MODE_ANCESTRAL;
  options->epsilon = defaults.epsilon;
  options->delta = defaults.delta;
  options->noise = 0.0;
  options->c_score = 0.0;
  options->optimizer = IO_OPT_AUTO;
  options->exact_limit = kExactLimit;
  options->p_int = 0.5;
  options->targets = nullptr;
  options->n_targets = 0;
  options->seed = 0;
}

io_status io_eval(const io_graph* graph, const io_eval_options* options,
                  io_eval_result* result) {
  return Guard([&] {
    Require(graph && options && result, "null argument");
    const EvalRun r = RunEval(graph->dag, *options);
    io_eval_result out{};
    out.d = graph->dag.size();
    out.edge_count = graph->dag.edge_count();
    out.intervened = r.iv.count();
    out.supra_pairs = SupraPairs(r.oracle);
    out.f = r.eval.d_top;
    out.has_g = r.eval.fnr.has_value();
    out.g = r.eval.fnr.value_or(NAN);
    out.score = r.eval.score;
    out.provenance = r.order.provenance == Provenance::kExact ? 0 : 1;
    *result = out;
  });
}

io_status io_eval_json(const io_graph* graph, const io_eval_options* options,
                       io_text** out) {
  return Guard([&] {
    Require(graph && options && out, "null argument");
    const Dag& dag = graph->dag;
    const EvalRun r = RunEval(dag, *options);
    nlohmann::ordered_json j;
    j["d"] = dag.size();
    j["edges"] = dag.edge_count();
    j["mode"] = ModeName(r.oracle.mode());
    j["c_score"] = r.c;
    j["targets"] = r.iv.targets();
    j["supra_pairs"] = SupraPairs(r.oracle);
    j["f"] = r.eval.d_top;
    if (r.eval.fnr) {
      j["g"] = *r.eval.fnr;
    } else {
      j["g"] = nullptr;
    }
    j["score"] = r.eval.score;
    j["provenance"] = ProvenanceName(r.order.provenance);
    j["order"] = r.order.Sequence();
    j["seed"] = options->seed;
    *out = NewText(j.dump(2) + "\n");
  });
}

io_status io_oracle_csv(const io_graph* graph, const io_eval_options* options,
                        io_text** out) {
  return Guard([&] {
    Require(graph && options && out, "null argument");
    const InterventionVector iv = MakeInterventions(graph->dag, *options);
    std::ostringstream os;
    WriteOracleCsv(BuildOracle(graph->dag, iv, MakeOracleParams(*options)),
                   os);
    *out = NewText(os.str());
  });
}

void io_bounds_options_init(io_bounds_options* options) {
  if (options == nullptr) return;
  *options = io_bounds_options{};
  options->m = 3;
  options->delta = 0.0;
  options->c_e = 0.5;
  options->c_hat = 0.0;
  options->graph = nullptr;
  options->mode = IO_MODE_ANCESTRAL;
}

io_status io_bounds_table(const io_bounds_options* options, io_text** out) {
  return Guard([&] {
    Require(options != nullptr && out != nullptr, "null argument");
    const io_bounds_options& o = *options;
    const auto ds = View(o.d, o.n_d);
    const auto p_es = View(o.p_e, o.n_p_e);
    const auto cs = View(o.c, o.n_c);
    const auto kappas = View(o.kappa, o.n_kappa);
    const auto p_ints = View(o.p_int, o.n_p_int);
    const auto ts = View(o.t, o.n_t);
    std::string s =
        "bound_name,d,p_e,c,m,kappa,p_int,delta,t,c_e,value,clamped\n";
    auto emit = [&](BoundRow r) { s += BoundRowText(r); };

    for (int d : ds) {
      const double delta = o.delta > 0.0 ? o.delta : DefaultSlack(d);
      for (double p_e : p_es) {
        emit({"chernoff_edge_lower", d, p_e, {}, {}, {}, {}, delta, {}, {},
              ChernoffEdgeLower(d, p_e, delta), false});
        for (double p : p_ints) {
          const double v = ErExpectationFnr(d, p_e, p, delta);
          emit({"er_expectation_fnr", d, p_e, {}, {}, {}, p, delta, {}, {},
                std::min(v, 1.0), v > 1.0});
          for (double t : ts) {
            const BoundValue b = ErDenseGTail(t, d, p_e, p, delta);
            emit({"er_dense_g_tail", d, p_e, {}, {}, {}, p, delta, t, {},
                  b.value, b.clamped});
          }
        }
      }
      for (double c : cs) {
        for (double p : p_ints) {
          const SparseExpectation e = SparseErExpectationFnr(d, c, p, delta);
          emit({"sparse_er_expectation_fnr", d, {}, c, {}, {}, p, delta, {},
                {}, std::min(e.finite, 1.0), e.finite > 1.0});
          emit({"sparse_er_expectation_limit", d, {}, c, {}, {}, p, {}, {},
                {}, std::min(e.limit, 1.0), e.limit > 1.0});
          const BoundValue b = SparseErProbFnr(o.c_e, d, c, p, delta);
          emit({"sparse_er_prob_fnr", d, {}, c, {}, {}, p, delta, {}, o.c_e,
                b.value, b.clamped});
        }
      }
      for (double p : p_ints) {
        const BaExpectation e = BaExpectationBounds(d, o.m, p);
        const double m = o.m;
        emit({"ba_expectation_g", d, {}, {}, m, {}, p, {}, {}, {}, e.g_mean,
              false});
        emit({"ba_expectation_f", d, {}, {}, m, {}, p, {}, {}, {}, e.f_mean,
              false});
        const BoundValue b = e.Tail(o.c_e);
        emit({"ba_prob_fnr", d, {}, {}, m, {}, p, {}, {}, o.c_e, b.value,
              b.clamped});
      }
      if (o.c_hat > 0.0) {
        for (double kappa : kappas) {
          const double beta = GammaOf(o.m, kappa).beta;
          const double m = o.m;
          for (double t : ts) {
            const BoundValue b =
                BaMcDiarmidTail(t, d, o.m, beta, o.c_hat, /*normalized=*/true);
            emit({"ba_mcdiarmid_g_tail", d, {}, {}, m, kappa, {}, {}, t, {},
                  b.value, b.clamped});
          }
        }
      }
    }

    if (o.graph != nullptr) {
      const Dag& dag = o.graph->dag;
      const FaithfulnessMode mode = ToMode(o.mode);
      for (double p : p_ints) {
        if (auto v = FixedGraphExpectationFnr(dag, p, mode)) {
          emit({"fixed_graph_expectation_fnr", dag.size(), {}, {}, {}, {}, p,
                {}, {}, {}, *v, false});
        }
      }
      const LipschitzReport rep = BoundsReport(dag);
      const double sq = rep.SumSquares(mode);
      if (sq > 0.0) {
        for (double t : ts) {
          const BoundValue b = McDiarmidTail(t, sq);
          emit({"mcdiarmid_f_tail", dag.size(), {}, {}, {}, {}, {}, {}, t, {},
                b.value, b.clamped});
          const BoundValue bn =
              McDiarmidTailNormalized(t, sq, dag.edge_count());
          emit({"mcdiarmid_g_tail", dag.size(), {}, {}, {}, {}, {}, {}, t, {},
                bn.value, bn.clamped});
        }
      }
    }
    *out = NewText(std::move(s));
  });
}

io_status io_sweep_new(io_sweep** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = new io_sweep{};
  });
}

io_status io_sweep_set(io_sweep* sweep, const char* key, const char* value) {
  return Guard([&] {
    Require(sweep && key && value, "null argument");
    ApplyConfigKey(sweep->config, key, value);
  });
}

io_status io_sweep_load_config(io_sweep* sweep, const char* path) {
  return Guard([&] {
    Require(sweep && path, "null argument");
    std::istringstream in(ReadFile(path));
    sweep->config = ParseConfig(in, sweep->config);
  });
}

io_status io_sweep_config_text(const io_sweep* sweep, io_text** out) {
  return Guard([&] {
    Require(sweep && out, "null argument");
    *out = NewText(ConfigText(sweep->config));
  });
}

io_status io_sweep_run(const io_sweep* sweep, io_text** csv) {
  return Guard([&] {
    Require(sweep && csv, "null argument");
    *csv = NewText(ResultsCsvString(RunSweep(sweep->config)));
  });
}

void io_sweep_free(io_sweep* sweep) { delete sweep; }

io_status io_results_bound_comparison(const char* csv_text, io_text** out,
                                      int* all_pass) {
  return Guard([&] {
    Require(csv_text && out && all_pass, "null argument");
    std::istringstream in(csv_text);
    const auto rows = BoundComparison(ReadResultsCsv(in));
    std::string s =
        "ensemble,d,density_param,m,p_int,mode,mean,se,bound,margin,vacuous,"
        "status\n";
    int ok = 1;
    for (const ComparisonRow& r : rows) {
      s += EnsembleName(r.cell.ensemble) + ',' + std::to_string(r.cell.d) +
           ',' + FormatDouble(r.cell.density) + ',' +
           std::to_string(r.cell.m) + ',' + FormatDouble(r.cell.p_int) + ',' +
           ModeName(r.cell.mode) + ',' + FormatDouble(r.mean) + ',' +
           FormatDouble(r.se) + ',' + FormatDouble(r.bound) + ',' +
           FormatDouble(r.margin) + ',' + (r.vacuous ? "1" : "0") + ',' +
           (r.pass ? "pass" : "fail") + '\n';
      if (!r.pass) ok = 0;
    }
    *out = NewText(std::move(s));
    *all_pass = ok;
  });
}

io_status io_fit_power(const double* xs, const double* ys, size_t n,
                       io_fit_result* result) {
  return Guard([&] {
    Require(xs && ys && result, "null argument");
    const PowerFit f = FitScaling(std::span<const double>(xs, n),
                                  std::span<const double>(ys, n));
    *result = {f.exponent, f.intercept, f.r2, f.used, f.filtered};
  });
}

io_status io_fit_ba_maxdeg(int m, double kappa, const int* d_grid, size_t n_d,
                           int seeds, uint64_t seed, int workers,
                           io_maxdeg_result* result, io_text** points) {
  return Guard([&] {
    Require(result != nullptr, "null argument");
    const std::vector<int> grid =
        d_grid ? std::vector<int>(d_grid, d_grid + n_d) : kMaxDegreeGrid;
    const MaxDegreeFit fit = FitBaMaxDegree(
        m, kappa, grid, seeds, seed, workers > 0 ? workers : DefaultWorkers());
    *result = {fit.beta_hat, fit.gamma_hat, fit.gamma_theory, fit.r2,
               fit.c_hat};
    if (points != nullptr) {
      std::string s = "d,seed_index,max_degree\n";
      for (const MaxDegreePoint& p : fit.points) {
        s += std::to_string(p.d) + ',' + std::to_string(p.seed_index) + ',' +
             std::to_string(p.max_degree) + '\n';
      }
      *points = NewText(std::move(s));
    }
  });
}

io_status io_fit_deviation(const char* csv_text, const char* metric,
                           const char* stat, io_text** report) {
  return Guard([&] {
    Require(csv_text && metric && stat && report, "null argument");
    const Metric mt = ParseMetric(metric);
    const DeviationStat st = ParseDeviationStat(stat);
    std::istringstream in(csv_text);
    const auto records = ReadResultsCsv(in);
    using Key = std::tuple<std::string, double, int, double, std::string>;
    std::map<Key, std::vector<ExperimentRecord>> groups;
    for (const ExperimentRecord& r : records) {
      groups[{EnsembleName(r.cell.ensemble), r.cell.density, r.cell.m,
              r.cell.p_int, ModeName(r.cell.mode)}]
          .push_back(r);
    }
    std::string s =
        "kind,ensemble,density_param,m,p_int,mode,d,value,exponent,r2\n";
    for (const auto& [key, recs] : groups) {
      const auto& [ens, density, m, p_int, mode] = key;
      const std::string prefix = ens + ',' + FormatDouble(density) + ',' +
                                 std::to_string(m) + ',' +
                                 FormatDouble(p_int) + ',' + mode + ',';
      const auto profile = DeviationProfile(recs, mt, st);
      std::vector<double> xs, ys;
      for (const auto& [d, v] : profile) {
        s += "point," + prefix + std::to_string(d) + ',' + FormatDouble(v) +
             ",,\n";
        if (v > 0.0) {
          xs.push_back(d);
          ys.push_back(v);
        }
      }
      if (xs.size() >= 3) {
        const PowerFit f = FitScaling(xs, ys);
        s += "fit," + prefix + ",," + FormatDouble(f.exponent) + ',' +
             FormatDouble(f.r2) + '\n';
      }
    }
    *report = NewText(std::move(s));
  });
}

void io_verify_options_init(io_verify_options* options) {
  if (options == nullptr) return;
  const SuiteOptions defaults;
  *options = io_verify_options{};
  options->suite = "all";
  options->mode = "both";
  options->d_min = defaults.d_min;
  options->d_max = defaults.d_max;
  options->instances = defaults.instances;
  options->min_agreement = defaults.min_agreement;
  options->seed = 0;
  options->workers = 0;
}

io_status io_verify(const io_verify_options* options, io_text** csv,
                    int* all_passed) {
  return Guard([&] {
    Require(options && csv && all_passed, "null argument");
    const std::string suite = options->suite ? options->suite : "all";
    const std::string mode = options->mode ? options->mode : "both";
    Require(suite == "all" || suite == "optimizer" || suite == "lemma" ||
                suite == "lipschitz",
            "suite must be optimizer, lemma, lipschitz or all");
    std::vector<FaithfulnessMode> modes;
    if (mode == "both") {
      modes = {FaithfulnessMode::kAncestral, FaithfulnessMode::kRestricted};
    } else {
      modes = {ParseMode(mode)};
    }
    SuiteOptions base;
    base.d_min = options->d_min;
    base.d_max = options->d_max;
    base.instances = options->instances;
    base.min_agreement = options->min_agreement;
    base.seed = options->seed;
    base.workers = options->workers > 0 ? options->workers : DefaultWorkers();
    std::vector<SuiteResult> results;
    for (FaithfulnessMode fm : modes) {
      SuiteOptions so = base;
      so.mode = fm;
      if (suite == "all" || suite == "optimizer") {
        results.push_back(OptimizerSuite(so));
      }
      if (suite == "all" || suite == "lemma") results.push_back(LemmaSuite(so));
      if (suite == "all" || suite == "lipschitz") {
        results.push_back(LipschitzSuite(so));
      }
    }
    int ok = 1;
    for (const SuiteResult& r : results) ok &= r.passed ? 1 : 0;
    *csv = NewText(SuiteCsv(results));
    *all_passed = ok;
  });
}

}  // extern "C"
