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

#include "nkaec/scene.h"

#include <cmath>

#include "nkaec/error.h"
#include "nkaec/rng.h"

namespace nkaec {

TimeSignal convolve_echo(const TimeSignal& far, const Rir& rir) {
  if (rir.taps.empty()) throw InvalidConfig("convolve_echo: empty RIR");
  const int64_t n = far.size();
  const int64_t t = static_cast<int64_t>(rir.taps.size());
  TimeSignal out;
  out.sample_rate = far.sample_rate;
  out.samples.resize(n);
  for (int64_t i = 0; i < n; ++i) {
    double acc = 0.0;
    const int64_t tmax = std::min<int64_t>(t, i + 1);
    for (int64_t tau = 0; tau < tmax; ++tau) acc += rir.taps[tau] * far.samples[i - tau];
    out.samples[i] = acc;
  }
  return out;
}

TimeSignal apply_echo_path_change(const TimeSignal& far, const Rir& rir_a, const Rir& rir_b,
                                  int64_t switch_sample) {
  if (rir_a.taps.size() != rir_b.taps.size())
    throw InvalidConfig("apply_echo_path_change: RIR lengths differ");
  if (switch_sample < 0 || switch_sample > far.size())
    throw InvalidConfig("apply_echo_path_change: switch_sample out of range");
  TimeSignal before = convolve_echo(far, rir_a);
  TimeSignal after = convolve_echo(far, rir_b);
  for (int64_t i = switch_sample; i < far.size(); ++i) before.samples[i] = after.samples[i];
  return before;
}

MixResult mix_at_ser(const TimeSignal& near, const TimeSignal& echo, double ser_db) {
  if (near.size() != echo.size()) throw ShapeError("mix_at_ser: length mismatch");
  double p_near = 0.0, p_echo = 0.0;
  for (int64_t i = 0; i < near.size(); ++i) {
    if (near.samples[i] != 0.0) {
      p_near += near.samples[i] * near.samples[i];
      p_echo += echo.samples[i] * echo.samples[i];
    }
  }
  if (p_near <= 0.0) throw DegenerateInput("mix_at_ser: near-end has no active samples");
  if (p_echo <= 0.0) throw DegenerateInput("mix_at_ser: echo is silent over the active segment");

  // ser = 10*log10(p_near / (g^2 * p_echo))  =>  g = sqrt(p_near / p_echo) * 10^(-ser/20)
  const double gain = std::sqrt(p_near / p_echo) * std::pow(10.0, -ser_db / 20.0);

  MixResult r;
  r.scaled_echo.sample_rate = echo.sample_rate;
  r.scaled_echo.samples.resize(echo.size());
  r.mic.sample_rate = near.sample_rate;
  r.mic.samples.resize(near.size());
  for (int64_t i = 0; i < near.size(); ++i) {
    r.scaled_echo.samples[i] = gain * echo.samples[i];
    r.mic.samples[i] = near.samples[i] + r.scaled_echo.samples[i];
  }
  return r;
}

Scene build_scene(const TimeSignal& far_src, const TimeSignal& near_src,
                  const SceneConfig& config) {
  const int rate = far_src.sample_rate;
  const int64_t far_len = static_cast<int64_t>(std::llround(config.far_len_s * rate));
  const int64_t near_len = static_cast<int64_t>(std::llround(config.near_len_s * rate));
  const int64_t near_off = static_cast<int64_t>(std::llround(config.near_offset_s * rate));

  if (far_len <= 0) throw InvalidConfig("build_scene: far_len_s must be positive");
  if (far_src.size() < far_len) throw InvalidConfig("build_scene: far source too short");
  if (near_len > 0 && near_src.size() < near_len)
    throw InvalidConfig("build_scene: near source too short");
  if (near_len > 0 && (near_off < 0 || near_off + near_len > far_len))
    throw InvalidConfig("build_scene: near segment does not fit inside the clip");

  Scene scene;
  scene.config = config;
  scene.far.sample_rate = rate;
  scene.far.samples.assign(far_src.samples.begin(), far_src.samples.begin() + far_len);

  // Echo path(s). The path-change variant derives both RIR seeds from
  // rir_seed so a scene is a pure function of its config.
  TimeSignal echo_raw;
  if (config.switch_time_s.has_value()) {
    const int64_t sw = static_cast<int64_t>(std::llround(*config.switch_time_s * rate));
    if (sw < 0 || sw > far_len) throw InvalidConfig("build_scene: switch_time outside the clip");
    Rir a = generate_rir(config.rir, Rng::derive(config.rir_seed, {1}));
    Rir b = generate_rir(config.rir, Rng::derive(config.rir_seed, {2}));
    echo_raw = apply_echo_path_change(scene.far, a, b, sw);
    scene.rirs = {std::move(a), std::move(b)};
  } else {
    Rir a = generate_rir(config.rir, Rng::derive(config.rir_seed, {1}));
    echo_raw = convolve_echo(scene.far, a);
    scene.rirs = {std::move(a)};
  }

  scene.near.sample_rate = rate;
  scene.near.samples.assign(far_len, 0.0);
  if (near_len == 0) {
    // Far-end single talk: the mic hears exactly the echo.
    scene.echo = echo_raw;
    scene.mic = echo_raw;
    return scene;
  }

  for (int64_t i = 0; i < near_len; ++i)
    scene.near.samples[near_off + i] = near_src.samples[i];

  MixResult mixed = mix_at_ser(scene.near, echo_raw, config.ser_db);
  scene.echo = std::move(mixed.scaled_echo);
  scene.mic = std::move(mixed.mic);
  return scene;
}

}  // namespace nkaec
