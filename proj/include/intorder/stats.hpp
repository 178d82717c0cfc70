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

#ifndef INTORDER_STATS_HPP_
#define INTORDER_STATS_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>

namespace intorder {

double Mean(std::span<const double> xs);
// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double SampleStd(std::span<const double> xs);
// Linear interpolation between order statistics: with sorted x_0..x_{n-1},
// h = (n - 1) p, Q(p) = x_floor(h) + (h - floor(h)) (x_ceil(h) - x_floor(h)).
double Quantile(std::span<const double> xs, double p);
double Iqr(std::span<const double> xs);

// Least squares on (log x, log y): log y = intercept + exponent log x.
// Points with y <= 0 (or x <= 0) are dropped and counted in `filtered`.
struct PowerFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int used = 0;
  int filtered = 0;
};
// Throws ParameterError when fewer than 3 usable points remain.
PowerFit FitScaling(std::span<const double> xs, std::span<const double> ys);

// Runs body(0..n-1) on `workers` threads; results must be written to
// per-index slots by the caller. workers <= 1 runs inline.
void ParallelFor(std::size_t n, int workers,
                 const std::function<void(std::size_t)>& body);

// INTORDER_WORKERS if set and positive, else hardware concurrency.
int DefaultWorkers();

}  // namespace intorder

#endif  // INTORDER_STATS_HPP_
