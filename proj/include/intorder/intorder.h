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


// C interface to the intorder library. All objects are opaque handles owned
// by the caller and released with the matching *_free function. Functions
// return an io_status; on failure io_last_error() describes the problem for
// the calling thread until its next call into the library.

#ifndef INTORDER_INTORDER_H_
#define INTORDER_INTORDER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(INTORDER_BUILDING_LIBRARY)
#define INTORDER_API __attribute__((visibility("default")))
#else
#define INTORDER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum io_status {
  IO_OK = 0,
  IO_ERR_PARAM = 1,       // invalid argument or out-of-range parameter
  IO_ERR_INFEASIBLE = 2,  // exact optimizer requested above its size limit
  IO_ERR_FORMAT = 3,      // malformed graph, config or results file
  IO_ERR_IO = 4,          // file could not be opened or written
  IO_ERR_INTERNAL = 5
} io_status;

typedef enum io_mode { IO_MODE_ANCESTRAL = 0, IO_MODE_RESTRICTED = 1 } io_mode;

typedef enum io_optimizer {
  IO_OPT_EXACT = 0,
  IO_OPT_HEURISTIC = 1,
  IO_OPT_AUTO = 2
} io_optimizer;

INTORDER_API const char* io_version(void);
INTORDER_API const char* io_last_error(void);
INTORDER_API const char* io_status_name(io_status status);

// Owned text buffer (CSV, JSON, edge lists).
typedef struct io_text io_text;
INTORDER_API const char* io_text_data(const io_text* text);
INTORDER_API size_t io_text_size(const io_text* text);
INTORDER_API void io_text_free(io_text* text);
// Writes the buffer to `path`.
INTORDER_API io_status io_text_save(const io_text* text, const char* path);

// ---- Graphs ----

typedef struct io_graph io_graph;

// model: "er" (param = p_e), "sparse_er" (param = c) or "ba" (param = kappa,
// links per node m). m is ignored for the ER models.
INTORDER_API io_status io_graph_generate(const char* model, int d,
                                         double param, int m, uint64_t seed,
                                         io_graph** out);
INTORDER_API io_status io_graph_from_edges(int d, const int* from,
                                           const int* to, size_t n_edges,
                                           io_graph** out);
INTORDER_API io_status io_graph_load(const char* path, io_graph** out);
INTORDER_API io_status io_graph_parse(const char* text, io_graph** out);
INTORDER_API io_status io_graph_save(const io_graph* graph, const char* path);
INTORDER_API io_status io_graph_text(const io_graph* graph, io_text** out);
INTORDER_API int io_graph_nodes(const io_graph* graph);
INTORDER_API int io_graph_edge_count(const io_graph* graph);
INTORDER_API io_status io_graph_edge(const io_graph* graph, int index,
                                     int* from, int* to);
INTORDER_API int io_graph_max_degree(const io_graph* graph);
// Per-node Lipschitz bounds as JSON.
INTORDER_API io_status io_graph_lipschitz_json(const io_graph* graph,
                                               io_text** out);
INTORDER_API void io_graph_free(io_graph* graph);

// ---- Single-instance evaluation ----

typedef struct io_eval_options {
  io_mode mode;
  double epsilon;
  double delta;
  double noise;
  double c_score;  // <= 0: epsilon + delta + 0.1
  io_optimizer optimizer;
  int exact_limit;
  double p_int;         // used when targets is NULL
  const int* targets;   // explicit intervention set, or NULL
  size_t n_targets;
  uint64_t seed;        // interventions, noise and heuristic search
} io_eval_options;

typedef struct io_eval_result {
  int d;
  int edge_count;
  int intervened;
  int supra_pairs;  // oracle entries above epsilon
  int f;
  int has_g;        // 0 when the graph has no edges
  double g;
  double score;
  int provenance;   // 0 exact, 1 heuristic
} io_eval_result;

INTORDER_API void io_eval_options_init(io_eval_options* options);
INTORDER_API io_status io_eval(const io_graph* graph,
                               const io_eval_options* options,
                               io_eval_result* result);
// Same evaluation as a JSON object, including the order and targets.
INTORDER_API io_status io_eval_json(const io_graph* graph,
                                    const io_eval_options* options,
                                    io_text** out);
// The intervened rows of the distance oracle as CSV.
INTORDER_API io_status io_oracle_csv(const io_graph* graph,
                                     const io_eval_options* options,
                                     io_text** out);

// ---- Bound tables ----

typedef struct io_bounds_options {
  const int* d;
  size_t n_d;
  const double* p_e;     // ER rows
  size_t n_p_e;
  const double* c;       // sparse ER rows
  size_t n_c;
  const double* kappa;   // BA McDiarmid rows (need c_hat > 0)
  size_t n_kappa;
  const double* p_int;
  size_t n_p_int;
  const double* t;       // deviation thresholds for tail rows
  size_t n_t;
  int m;
  double delta;          // <= 0: d^(-1/2)
  double c_e;            // FNR threshold for probability rows
  double c_hat;          // BA degree constant estimate
  const io_graph* graph; // optional fixed graph rows
  io_mode mode;
} io_bounds_options;

INTORDER_API void io_bounds_options_init(io_bounds_options* options);
// CSV: bound_name,d,p_e,c,m,kappa,p_int,delta,t,c_e,value,clamped
INTORDER_API io_status io_bounds_table(const io_bounds_options* options,
                                       io_text** out);

// ---- Sweeps ----

typedef struct io_sweep io_sweep;

INTORDER_API io_status io_sweep_new(io_sweep** out);
// Config keys as in the sweep config file (see README).
INTORDER_API io_status io_sweep_set(io_sweep* sweep, const char* key,
                                    const char* value);
INTORDER_API io_status io_sweep_load_config(io_sweep* sweep, const char* path);
INTORDER_API io_status io_sweep_config_text(const io_sweep* sweep,
                                            io_text** out);
// Validates, runs every cell and returns the results CSV.
INTORDER_API io_status io_sweep_run(const io_sweep* sweep, io_text** csv);
INTORDER_API void io_sweep_free(io_sweep* sweep);

// Per-cell comparison of mean g with the cell bound, as CSV; *all_pass is 0
// when any cell fails.
INTORDER_API io_status io_results_bound_comparison(const char* csv_text,
                                                   io_text** out,
                                                   int* all_pass);

// ---- Fits ----

typedef struct io_fit_result {
  double exponent;
  double intercept;
  double r2;
  int used;
  int filtered;
} io_fit_result;

INTORDER_API io_status io_fit_power(const double* xs, const double* ys,
                                    size_t n, io_fit_result* result);

typedef struct io_maxdeg_result {
  double beta_hat;
  double gamma_hat;
  double gamma_theory;
  double r2;
  double c_hat;
} io_maxdeg_result;

// d_grid may be NULL for the default grid (30 .. 4000). *points receives a
// CSV of d,seed_index,max_degree when points is not NULL.
INTORDER_API io_status io_fit_ba_maxdeg(int m, double kappa,
                                        const int* d_grid, size_t n_d,
                                        int seeds, uint64_t seed, int workers,
                                        io_maxdeg_result* result,
                                        io_text** points);

// Fits the deviation profile of a results CSV. metric: "f" | "g";
// stat: "iqr" | "std". Cells are grouped by (ensemble, density, p_int,
// mode); *report receives one CSV row per group.
INTORDER_API io_status io_fit_deviation(const char* csv_text,
                                        const char* metric, const char* stat,
                                        io_text** report);

// ---- Verification suites ----

typedef struct io_verify_options {
  const char* suite;  // "optimizer" | "lemma" | "lipschitz" | "all"
  const char* mode;   // "ancestral" | "restricted" | "both"
  int d_min;
  int d_max;
  int instances;
  double min_agreement;
  uint64_t seed;
  int workers;
} io_verify_options;

INTORDER_API void io_verify_options_init(io_verify_options* options);
// *csv receives the suite summary; *all_passed is 1 when every suite passed.
INTORDER_API io_status io_verify(const io_verify_options* options,
                                 io_text** csv, int* all_passed);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // INTORDER_INTORDER_H_
