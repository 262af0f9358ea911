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

#ifndef NKAEC_RIR_H_
#define NKAEC_RIR_H_

#include <cstdint>
#include <vector>

namespace nkaec {

struct Rir {
  std::vector<double> taps;
  int sample_rate = 16000;
};

enum class RirKind {
  kWhiteNoise,    // flat white Gaussian taps (training-style echo paths)
  kDecayingNoise  // white Gaussian shaped by an exponential T60 decay
};

struct RirConfig {
  int length = 1024;  // 64 ms at 16 kHz
  RirKind kind = RirKind::kWhiteNoise;
  double t60_s = 0.1;  // decay time for kDecayingNoise
  int sample_rate = 16000;
};

// Deterministic for a fixed seed; taps are normalized to unit energy.
Rir generate_rir(const RirConfig& config, uint64_t seed);

}  // namespace nkaec

#endif  // NKAEC_RIR_H_
