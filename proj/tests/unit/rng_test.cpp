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


#include "intorder/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace intorder {
namespace {

TEST(MixSeed, DeterministicAndSpreading) {
  EXPECT_EQ(MixSeed(1, 2), MixSeed(1, 2));
  std::set<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < 50; ++a) {
    for (std::uint64_t b = 0; b < 50; ++b) seen.insert(MixSeed(a, b));
  }
  EXPECT_EQ(seen.size(), 2500u);
  EXPECT_NE(StreamSeed(7, Stream::kGraph), StreamSeed(7, Stream::kLabels));
}

TEST(Rng, UniformRangeAndMean) {
  Rng r(3);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = r.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / n, 0.5, 4.0 * std::sqrt(1.0 / 12 / n));
}

TEST(Rng, BelowIsUnbiased) {
  Rng r(5);
  const int n = 60000;
  std::vector<int> counts(6, 0);
  for (int i = 0; i < n; ++i) ++counts[r.Below(6)];
  const double p = 1.0 / 6;
  for (int c : counts) {
    EXPECT_NEAR(c / static_cast<double>(n), p, 4.0 * std::sqrt(p * (1 - p) / n));
  }
}

TEST(Rng, BernoulliEdges) {
  Rng r(9);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_FALSE(r.Bernoulli(0.0));
    EXPECT_TRUE(r.Bernoulli(1.0));
  }
}

TEST(Rng, ShuffleIsPermutationAndReproducible) {
  std::vector<int> a(20), b(20);
  std::iota(a.begin(), a.end(), 0);
  b = a;
  Rng r1(11), r2(11);
  r1.Shuffle(a.begin(), a.end());
  r2.Shuffle(b.begin(), b.end());
  EXPECT_EQ(a, b);
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 20; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(Rng, ShuffleFirstSlotUniform) {
  const int n = 30000;
  std::vector<int> counts(4, 0);
  Rng r(13);
  for (int i = 0; i < n; ++i) {
    std::vector<int> v = {0, 1, 2, 3};
    r.Shuffle(v.begin(), v.end());
    ++counts[v[0]];
  }
  for (int c : counts) {
    EXPECT_NEAR(c / static_cast<double>(n), 0.25, 4.0 * std::sqrt(0.1875 / n));
  }
}

}  // namespace
}  // namespace intorder
