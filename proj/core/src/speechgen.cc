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

#include "nkaec/speechgen.h"

#include <algorithm>
#include <cmath>

#include "nkaec/error.h"
#include "nkaec/rng.h"

namespace nkaec {

TimeSignal speechlike(int64_t num_samples, uint64_t seed, int sample_rate) {
  if (num_samples <= 0) throw InvalidConfig("speechlike: num_samples must be positive");
  TimeSignal sig;
  sig.sample_rate = sample_rate;
  sig.samples.assign(num_samples, 0.0);

  Rng rng(seed);
  double y1 = 0.0, y2 = 0.0;  // AR(2) state persists across segments
  int64_t pos = 0;
  while (pos < num_samples) {
    const int64_t seg_len = std::min<int64_t>(
        num_samples - pos,
        static_cast<int64_t>(rng.uniform(0.15, 0.40) * sample_rate));
    const bool pause = rng.uniform() < 0.2;
    // Resonator: pole radius near 1 gives a formant-ish band around f0.
    const double f0 = rng.uniform(300.0, 2500.0);
    const double radius = rng.uniform(0.94, 0.985);
    const double a1 = 2.0 * radius * std::cos(2.0 * M_PI * f0 / sample_rate);
    const double a2 = -radius * radius;
    const double mod_hz = rng.uniform(2.0, 6.0);
    const double mod_phase = rng.uniform(0.0, 2.0 * M_PI);

    for (int64_t i = 0; i < seg_len; ++i) {
      const double e = rng.normal();
      const double y = a1 * y1 + a2 * y2 + e;
      y2 = y1;
      y1 = y;
      if (pause) continue;  // keep the filter running so segments join cleanly
      const double t = static_cast<double>(pos + i) / sample_rate;
      const double env = 0.15 + 0.85 * std::pow(0.5 + 0.5 * std::sin(2.0 * M_PI * mod_hz * t + mod_phase), 2.0);
      sig.samples[pos + i] = env * y;
    }
    pos += seg_len;
  }

  // Normalize to a conversational-ish RMS, guarding the all-pause corner.
  double energy = 0.0;
  for (double s : sig.samples) energy += s * s;
  double rms = std::sqrt(energy / static_cast<double>(num_samples));
  if (rms < 1e-9) {
    for (int64_t i = 0; i < num_samples; ++i) sig.samples[i] = 0.05 * rng.normal();
    return sig;
  }
  const double scale = 0.08 / rms;
  for (double& s : sig.samples) s *= scale;
  return sig;
}

}  // namespace nkaec
