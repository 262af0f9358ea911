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

#ifndef NKAEC_SPEECHGEN_H_
#define NKAEC_SPEECHGEN_H_

#include <cstdint>

#include "nkaec/stft.h"

namespace nkaec {

// Speech-like test material: white noise through a per-segment AR(2)
// resonator, amplitude-modulated at syllabic rate with occasional pauses.
// Deterministic in the seed. Lets the whole suite run without a corpus.
TimeSignal speechlike(int64_t num_samples, uint64_t seed, int sample_rate = 16000);

}  // namespace nkaec

#endif  // NKAEC_SPEECHGEN_H_
