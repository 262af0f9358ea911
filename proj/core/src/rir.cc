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

#include "nkaec/rir.h"

#include <cmath>

#include "nkaec/error.h"
#include "nkaec/rng.h"

namespace nkaec {

Rir generate_rir(const RirConfig& config, uint64_t seed) {
  if (config.length < 1) throw InvalidConfig("generate_rir: length must be >= 1");
  if (config.kind == RirKind::kDecayingNoise && config.t60_s <= 0.0)
    throw InvalidConfig("generate_rir: t60 must be positive");

  Rng rng(seed);
  Rir rir;
  rir.sample_rate = config.sample_rate;
  rir.taps.resize(config.length);

  // -60 dB at t60 means amplitude decays by 10^(-3 t / t60).
  const double decay_per_sample =
      config.kind == RirKind::kDecayingNoise
          ? std::pow(10.0, -3.0 / (config.t60_s * config.sample_rate))
          : 1.0;

  double env = 1.0;
  double energy = 0.0;
  for (int i = 0; i < config.length; ++i) {
    rir.taps[i] = env * rng.normal();
    energy += rir.taps[i] * rir.taps[i];
    env *= decay_per_sample;
  }
  if (energy <= 0.0) {  // single-tap draw of exactly zero is ruled out by Box-Muller
    rir.taps[0] = 1.0;
    energy = 1.0;
  }
  const double scale = 1.0 / std::sqrt(energy);
  for (double& t : rir.taps) t *= scale;
  return rir;
}

}  // namespace nkaec
