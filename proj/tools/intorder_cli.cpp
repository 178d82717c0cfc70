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


// intorder command-line tool. Links only the C interface.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "intorder/intorder.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Thrown to unwind with a library error already reported.
struct LibraryFailure {
  io_status status;
};

void Check(io_status s) {
  if (s != IO_OK) throw LibraryFailure{s};
}

// Owns an io_text.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { io_text_free(t_); }
  io_text** out() { return &t_; }
  const io_text* get() const { return t_; }
  std::string str() const {
    return std::string(io_text_data(t_), io_text_size(t_));
  }

 private:
  io_text* t_ = nullptr;
};

class Graph {
 public:
  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;
  ~Graph() { io_graph_free(g_); }
  io_graph** out() { return &g_; }
  const io_graph* get() const { return g_; }

 private:
  io_graph* g_ = nullptr;
};

// Writes to --out when given, stdout otherwise.
void Emit(const Text& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::fwrite(io_text_data(text.get()), 1, io_text_size(text.get()), stdout);
  } else {
    Check(io_text_save(text.get(), out.c_str()));
  }
}

io_mode ModeOf(const std::string& s) {
  return s == "restricted" ? IO_MODE_RESTRICTED : IO_MODE_ANCESTRAL;
}

io_optimizer OptimizerOf(const std::string& s) {
  if (s == "exact") return IO_OPT_EXACT;
  if (s == "heuristic") return IO_OPT_HEURISTIC;
  return IO_OPT_AUTO;
}

struct Common {
  std::uint64_t seed = 0;
  std::string out;
};

void AddCommon(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
}

struct GraphFlags {
  std::string model = "er";
  std::optional<int> d;
  double pe = 0.4;
  double c = 3.0;
  int m = 3;
  double kappa = 3.0;
};

void AddGraphFlags(CLI::App* cmd, GraphFlags& g) {
  cmd->add_option("--model", g.model, "er | sparse_er | ba")
      ->check(CLI::IsMember({"er", "sparse_er", "ba"}))
      ->capture_default_str();
  cmd->add_option("--d", g.d, "Number of nodes");
  cmd->add_option("--pe", g.pe, "ER edge probability")->capture_default_str();
  cmd->add_option("--c", g.c, "Sparse ER mean degree constant")
      ->capture_default_str();
  cmd->add_option("--m", g.m, "BA links per node")->capture_default_str();
  cmd->add_option("--kappa", g.kappa, "BA initial attractiveness")
      ->capture_default_str();
}

void Generate(const GraphFlags& g, std::uint64_t seed, Graph& graph) {
  const double param =
      g.model == "er" ? g.pe : g.model == "sparse_er" ? g.c : g.kappa;
  Check(io_graph_generate(g.model.c_str(), *g.d, param, g.m, seed,
                          graph.out()));
}

std::string Join(const std::vector<double>& xs) {
  std::string s;
  for (double x : xs) {
    if (!s.empty()) s += ',';
    s += CLI::detail::to_string(x);
  }
  return s;
}

std::string JoinInts(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal order recovery from interventional distances"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io_version()));

  // gen
  Common gen_c;
  GraphFlags gen_g;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random DAG edge list");
  AddCommon(gen, gen_c);
  AddGraphFlags(gen, gen_g);
  gen->get_option("--d")->required();

  // eval
  Common ev_c;
  GraphFlags ev_g;
  std::string ev_graph, ev_mode = "ancestral", ev_opt = "auto", ev_oracle;
  std::optional<std::vector<int>> ev_targets;
  io_eval_options ev_o;
  io_eval_options_init(&ev_o);
  CLI::App* ev = app.add_subcommand(
      "eval", "Run oracle, optimizer and metrics on one instance");
  AddCommon(ev, ev_c);
  AddGraphFlags(ev, ev_g);
  ev->add_option("--graph", ev_graph, "Edge-list file")
      ->check(CLI::ExistingFile);
  ev->add_option("--p-int", ev_o.p_int, "Intervention probability")
      ->capture_default_str();
  ev->add_option("--targets", ev_targets, "Explicit intervened nodes")
      ->delimiter(',');
  ev->add_option("--mode", ev_mode, "ancestral | restricted")
      ->check(CLI::IsMember({"ancestral", "restricted"}))
      ->capture_default_str();
  ev->add_option("--optimizer", ev_opt, "exact | heuristic | auto")
      ->check(CLI::IsMember({"exact", "heuristic", "auto"}))
      ->capture_default_str();
  ev->add_option("--exact-limit", ev_o.exact_limit, "Largest d for exact")
      ->capture_default_str();
  ev->add_option("--epsilon", ev_o.epsilon, "Faithfulness threshold")
      ->capture_default_str();
  ev->add_option("--delta", ev_o.delta, "Supra-threshold margin")
      ->capture_default_str();
  ev->add_option("--noise", ev_o.noise, "Oracle noise amplitude")
      ->capture_default_str();
  ev->add_option("--c-score", ev_o.c_score,
                 "Score constant (default epsilon + delta + 0.1)");
  ev->add_option("--oracle-out", ev_oracle, "Write the oracle CSV here");

  // bounds
  Common bd_c;
  std::vector<int> bd_d = {50, 100, 200, 400};
  std::vector<double> bd_pe = {0.2, 0.4, 0.6}, bd_cc = {2, 3, 5},
                      bd_pint = {0.25, 0.5, 0.75, 1.0}, bd_t, bd_kappa;
  std::string bd_graph, bd_mode = "ancestral";
  io_bounds_options bd_o;
  io_bounds_options_init(&bd_o);
  CLI::App* bd = app.add_subcommand("bounds", "Evaluate analytic bound tables");
  AddCommon(bd, bd_c);
  bd->add_option("--d", bd_d, "Node counts")->delimiter(',')
      ->capture_default_str();
  bd->add_option("--pe", bd_pe, "ER edge probabilities")->delimiter(',')
      ->capture_default_str();
  bd->add_option("--c", bd_cc, "Sparse ER constants")->delimiter(',')
      ->capture_default_str();
  bd->add_option("--kappa", bd_kappa, "BA kappas (with --c-hat)")
      ->delimiter(',');
  bd->add_option("--p-int", bd_pint, "Intervention probabilities")
      ->delimiter(',')->capture_default_str();
  bd->add_option("--t", bd_t, "Deviation thresholds")->delimiter(',');
  bd->add_option("--m", bd_o.m, "BA links per node")->capture_default_str();
  bd->add_option("--delta", bd_o.delta, "Chernoff slack (default d^-1/2)");
  bd->add_option("--c-e", bd_o.c_e, "FNR threshold")->capture_default_str();
  bd->add_option("--c-hat", bd_o.c_hat, "BA degree constant estimate");
  bd->add_option("--graph", bd_graph, "Fixed graph for per-graph rows")
      ->check(CLI::ExistingFile);
  bd->add_option("--mode", bd_mode, "ancestral | restricted")
      ->check(CLI::IsMember({"ancestral", "restricted"}))
      ->capture_default_str();

  // sweep
  Common sw_c;
  std::string sw_config, sw_compare;
  std::vector<std::string> sw_set;
  std::optional<std::string> sw_ensemble, sw_mode, sw_opt;
  std::optional<std::vector<int>> sw_d;
  std::optional<std::vector<double>> sw_density, sw_pint;
  std::optional<int> sw_runs, sw_m, sw_workers;
  bool sw_print_config = false;
  CLI::App* sw = app.add_subcommand("sweep", "Run a Monte Carlo sweep");
  AddCommon(sw, sw_c);
  sw->add_option("--config", sw_config, "Config file (key = value)")
      ->check(CLI::ExistingFile);
  sw->add_option("--set", sw_set, "Override a config key: key=value");
  sw->add_option("--ensemble", sw_ensemble, "er | sparse_er | ba")
      ->check(CLI::IsMember({"er", "sparse_er", "ba"}));
  sw->add_option("--d-grid", sw_d, "Node counts")->delimiter(',');
  sw->add_option("--density", sw_density, "p_e, c or kappa values")
      ->delimiter(',');
  sw->add_option("--p-int", sw_pint, "Intervention probabilities")
      ->delimiter(',');
  sw->add_option("--runs", sw_runs, "Runs per cell");
  sw->add_option("--m", sw_m, "BA links per node");
  sw->add_option("--mode", sw_mode, "ancestral | restricted")
      ->check(CLI::IsMember({"ancestral", "restricted"}));
  sw->add_option("--optimizer", sw_opt, "exact | heuristic | auto")
      ->check(CLI::IsMember({"exact", "heuristic", "auto"}));
  sw->add_option("--workers", sw_workers, "Worker threads");
  sw->add_option("--compare", sw_compare,
                 "Write the mean-vs-bound table here; exit 1 if a cell fails");
  sw->add_flag("--print-config", sw_print_config,
               "Print the effective config and exit");

  // fit
  Common ft_c;
  std::string ft_target = "ba-maxdeg", ft_results, ft_metric = "g",
              ft_stat = "iqr";
  int ft_m = 3, ft_seeds = 10, ft_workers = 0;
  double ft_kappa = 1.0;
  std::optional<std::vector<int>> ft_d;
  CLI::App* ft = app.add_subcommand("fit", "Fit scaling exponents");
  AddCommon(ft, ft_c);
  ft->add_option("--target", ft_target, "ba-maxdeg | deviation")
      ->check(CLI::IsMember({"ba-maxdeg", "deviation"}))
      ->capture_default_str();
  ft->add_option("--m", ft_m, "BA links per node")->capture_default_str();
  ft->add_option("--kappa", ft_kappa, "BA initial attractiveness")
      ->capture_default_str();
  ft->add_option("--d-grid", ft_d, "Node counts (default 30..4000)")
      ->delimiter(',');
  ft->add_option("--seeds", ft_seeds, "Graphs per size")->capture_default_str();
  ft->add_option("--workers", ft_workers, "Worker threads (0: default)");
  ft->add_option("--results", ft_results, "Results CSV for deviation fits")
      ->check(CLI::ExistingFile);
  ft->add_option("--metric", ft_metric, "f | g")
      ->check(CLI::IsMember({"f", "g"}))
      ->capture_default_str();
  ft->add_option("--stat", ft_stat, "iqr | std")
      ->check(CLI::IsMember({"iqr", "std"}))
      ->capture_default_str();

  // verify
  Common vf_c;
  std::string vf_suite = "all", vf_mode = "both";
  io_verify_options vf_o;
  io_verify_options_init(&vf_o);
  CLI::App* vf = app.add_subcommand("verify", "Run small-instance oracle suites");
  AddCommon(vf, vf_c);
  vf->add_option("--suite", vf_suite, "optimizer | lemma | lipschitz | all")
      ->check(CLI::IsMember({"optimizer", "lemma", "lipschitz", "all"}))
      ->capture_default_str();
  vf->add_option("--mode", vf_mode, "ancestral | restricted | both")
      ->check(CLI::IsMember({"ancestral", "restricted", "both"}))
      ->capture_default_str();
  vf->add_option("--d-min", vf_o.d_min, "Smallest d")->capture_default_str();
  vf->add_option("--d-max", vf_o.d_max, "Largest d")->capture_default_str();
  vf->add_option("--instances", vf_o.instances, "Instances per suite")
      ->capture_default_str();
  vf->add_option("--min-agreement", vf_o.min_agreement,
                 "Optimizer suite pass threshold")
      ->capture_default_str();
  vf->add_option("--workers", vf_o.workers, "Worker threads (0: default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      Graph g;
      Generate(gen_g, gen_c.seed, g);
      Text t;
      Check(io_graph_text(g.get(), t.out()));
      Emit(t, gen_c.out);
      return kExitOk;
    }

    if (*ev) {
      Graph g;
      if (!ev_graph.empty()) {
        Check(io_graph_load(ev_graph.c_str(), g.out()));
      } else if (ev_g.d) {
        Generate(ev_g, ev_c.seed, g);
      } else {
        std::cerr << "eval: need --graph or --d\n";
        return kExitUsage;
      }
      ev_o.mode = ModeOf(ev_mode);
      ev_o.optimizer = OptimizerOf(ev_opt);
      ev_o.seed = ev_c.seed;
      if (ev_targets) {
        ev_o.targets = ev_targets->data();
        ev_o.n_targets = ev_targets->size();
      }
      if (!ev_oracle.empty()) {
        Text o;
        Check(io_oracle_csv(g.get(), &ev_o, o.out()));
        Emit(o, ev_oracle);
      }
      Text t;
      Check(io_eval_json(g.get(), &ev_o, t.out()));
      Emit(t, ev_c.out);
      return kExitOk;
    }

    if (*bd) {
      Graph g;
      if (!bd_graph.empty()) {
        Check(io_graph_load(bd_graph.c_str(), g.out()));
        bd_o.graph = g.get();
      }
      bd_o.d = bd_d.data();
      bd_o.n_d = bd_d.size();
      bd_o.p_e = bd_pe.data();
      bd_o.n_p_e = bd_pe.size();
      bd_o.c = bd_cc.data();
      bd_o.n_c = bd_cc.size();
      bd_o.kappa = bd_kappa.data();
      bd_o.n_kappa = bd_kappa.size();
      bd_o.p_int = bd_pint.data();
      bd_o.n_p_int = bd_pint.size();
      bd_o.t = bd_t.data();
      bd_o.n_t = bd_t.size();
      bd_o.mode = ModeOf(bd_mode);
      Text t;
      Check(io_bounds_table(&bd_o, t.out()));
      Emit(t, bd_c.out);
      return kExitOk;
    }

    if (*sw) {
      io_sweep* raw = nullptr;
      Check(io_sweep_new(&raw));
      std::unique_ptr<io_sweep, void (*)(io_sweep*)> sweep(raw, io_sweep_free);
      if (!sw_config.empty()) {
        Check(io_sweep_load_config(sweep.get(), sw_config.c_str()));
      }
      auto set = [&](const char* key, const std::string& value) {
        Check(io_sweep_set(sweep.get(), key, value.c_str()));
      };
      if (sw->count("--seed") > 0 || sw_config.empty()) {
        set("master_seed", std::to_string(sw_c.seed));
      }
      if (sw_ensemble) set("ensemble", *sw_ensemble);
      if (sw_d) set("d_grid", JoinInts(*sw_d));
      if (sw_density) set("density_grid", Join(*sw_density));
      if (sw_pint) set("p_int_grid", Join(*sw_pint));
      if (sw_runs) set("runs_per_cell", std::to_string(*sw_runs));
      if (sw_m) set("m", std::to_string(*sw_m));
      if (sw_mode) set("mode", *sw_mode);
      if (sw_opt) set("optimizer", *sw_opt);
      if (sw_workers) set("workers", std::to_string(*sw_workers));
      for (const std::string& kv : sw_set) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
          std::cerr << "sweep: --set expects key=value, got '" << kv << "'\n";
          return kExitUsage;
        }
        set(kv.substr(0, eq).c_str(), kv.substr(eq + 1));
      }
      if (sw_print_config) {
        Text t;
        Check(io_sweep_config_text(sweep.get(), t.out()));
        Emit(t, sw_c.out);
        return kExitOk;
      }
      Text csv;
      Check(io_sweep_run(sweep.get(), csv.out()));
      Emit(csv, sw_c.out);
      if (!sw_compare.empty()) {
        Text cmp;
        int pass = 0;
        Check(io_results_bound_comparison(io_text_data(csv.get()), cmp.out(),
                                          &pass));
        Emit(cmp, sw_compare);
        if (!pass) {
          std::cerr << "sweep: some cells exceed their bound (see "
                    << sw_compare << ")\n";
          return kExitFailed;
        }
      }
      return kExitOk;
    }

    if (*ft) {
      if (ft_target == "deviation") {
        if (ft_results.empty()) {
          std::cerr << "fit: --target deviation needs --results\n";
          return kExitUsage;
        }
        std::FILE* f = std::fopen(ft_results.c_str(), "rb");
        std::string csv;
        if (f != nullptr) {
          char buf[65536];
          std::size_t n;
          while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) csv.append(buf, n);
          std::fclose(f);
        }
        Text report;
        Check(io_fit_deviation(csv.c_str(), ft_metric.c_str(),
                               ft_stat.c_str(), report.out()));
        Emit(report, ft_c.out);
        return kExitOk;
      }
      io_maxdeg_result r{};
      Text points;
      const int* grid = ft_d ? ft_d->data() : nullptr;
      const std::size_t n = ft_d ? ft_d->size() : 0;
      Check(io_fit_ba_maxdeg(ft_m, ft_kappa, grid, n, ft_seeds, ft_c.seed,
                             ft_workers, &r, points.out()));
      std::printf(
          "m=%d kappa=%g beta_hat=%.4f gamma_hat=%.4f gamma_theory=%.4f "
          "r2=%.4f c_hat=%.4f\n",
          ft_m, ft_kappa, r.beta_hat, r.gamma_hat, r.gamma_theory, r.r2,
          r.c_hat);
      if (!ft_c.out.empty()) Emit(points, ft_c.out);
      return kExitOk;
    }

    if (*vf) {
      vf_o.suite = vf_suite.c_str();
      vf_o.mode = vf_mode.c_str();
      vf_o.seed = vf_c.seed;
      Text csv;
      int passed = 0;
      Check(io_verify(&vf_o, csv.out(), &passed));
      Emit(csv, vf_c.out);
      if (!vf_c.out.empty()) std::cout << csv.str();
      return passed ? kExitOk : kExitFailed;
    }
  } catch (const LibraryFailure& f) {
    std::cerr << "error: " << io_status_name(f.status) << ": "
              << io_last_error() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
