// Copyright 2026 The nkaec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NKAEC_RNG_H_
#define NKAEC_RNG_H_

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace nkaec {

// Deterministic random source. std::mt19937_64 has a standard-mandated output
// sequence, and all value conversions are done by hand, so a fixed seed yields
// the same draws on every platform. std::*_distribution is avoided on purpose
// (its output is implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t raw() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, bound). bound must be > 0.
  uint64_t integer(uint64_t bound) { return gen_() % bound; }

  // Standard normal via Box-Muller; the second draw of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double stddev) { return stddev * normal(); }

  // Complex Gaussian with independent N(0, per_part_std^2) real/imag parts.
  std::complex<double> complex_normal(double per_part_std) {
    double re = normal(per_part_std);
    double im = normal(per_part_std);
    return {re, im};
  }

  // Derives an independent stream seed from a base seed and a path of indices
  // (splitmix64 finalizer over the running hash).
  static uint64_t derive(uint64_t seed, std::initializer_list<uint64_t> path) {
    uint64_t h = seed;
    for (uint64_t p : path) {
      h += 0x9e3779b97f4a7c15ULL + p;
      h = mix(h);
    }
    return h;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace nkaec

#endif  // NKAEC_RNG_H_
