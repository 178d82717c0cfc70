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

#ifndef INTORDER_RNG_HPP_
#define INTORDER_RNG_HPP_

#include <cstdint>
#include <random>

namespace intorder {

// Independent sub-streams derived from one draw seed. Every random component
// of an experiment draws from its own stream so that, e.g., changing the
// optimizer never perturbs the sampled graph.
enum class Stream : std::uint64_t {
  kGraph = 1,
  kLabels = 2,
  kInterventions = 3,
  kNoise = 4,
  kSearch = 5,
  kContexts = 6,
};

// SplitMix64 finalizer over (seed, value). Used for the seed schedule:
//   run_seed   = MixSeed(MixSeed(master, cell), run)
//   stream     = MixSeed(run_seed, Stream)
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t value);

inline std::uint64_t StreamSeed(std::uint64_t seed, Stream stream) {
  return MixSeed(seed, static_cast<std::uint64_t>(stream));
}

// 64-bit Mersenne Twister with distribution code written out here, so draws
// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
  std::uint64_t Below(std::uint64_t n);

  // P(true) = p. p <= 0 never fires, p >= 1 always fires.
  bool Bernoulli(double p) { return Uniform() < p; }

  template <typename It>
  void Shuffle(It first, It last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      const std::uint64_t j = Below(i);
      std::swap(first[i - 1], first[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace intorder

#endif  // INTORDER_RNG_HPP_
