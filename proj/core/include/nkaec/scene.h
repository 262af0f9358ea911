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

#ifndef NKAEC_SCENE_H_
#define NKAEC_SCENE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "nkaec/rir.h"
#include "nkaec/stft.h"

namespace nkaec {

// Linear echo: out[n] = sum_tau h[tau] * far[n - tau], same length as far.
TimeSignal convolve_echo(const TimeSignal& far, const Rir& rir);

// Abrupt echo-path change: each output sample comes from exactly one RIR
// acting on the same far-end history (rir_a before switch_sample, rir_b from
// it on). No state blending.
TimeSignal apply_echo_path_change(const TimeSignal& far, const Rir& rir_a, const Rir& rir_b,
                                  int64_t switch_sample);

struct MixResult {
  TimeSignal mic;
  TimeSignal scaled_echo;
};

// Scales the echo so that 10*log10(P_near / P_echo) == ser_db, with both
// powers measured over the samples where near is nonzero, then forms
// mic = near + scaled_echo.
MixResult mix_at_ser(const TimeSignal& near, const TimeSignal& echo, double ser_db);

struct SceneConfig {
  double ser_db = 0.0;     // ignored when there is no near-end
  double far_len_s = 8.0;
  double near_len_s = 0.0;  // 0 = far-end single talk
  double near_offset_s = 0.0;
  std::optional<double> switch_time_s;  // echo-path change moment
  uint64_t rir_seed = 0;
  uint64_t mix_seed = 0;  // provenance only; all mixing here is explicit
  RirConfig rir;
};

// A synthesized clip: far-end, near-end (zero-padded to full length), the
// ground-truth (already SER-scaled) echo, and mic = near + echo samplewise.
struct Scene {
  TimeSignal far;
  TimeSignal near;
  TimeSignal echo;
  TimeSignal mic;
  std::vector<Rir> rirs;  // one, or two when the path changes
  SceneConfig config;
};

// Deterministic scene assembly from already-selected source material. far_src
// and near_src must be at least far_len_s / near_len_s long; the leading
// samples are used. Single-talk scenes (near_len_s == 0) have mic == echo.
Scene build_scene(const TimeSignal& far_src, const TimeSignal& near_src, const SceneConfig& config);

}  // namespace nkaec

#endif  // NKAEC_SCENE_H_
