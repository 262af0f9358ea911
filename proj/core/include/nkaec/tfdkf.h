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

#ifndef NKAEC_TFDKF_H_
#define NKAEC_TFDKF_H_

#include <complex>
#include <span>

#include <Eigen/Dense>

#include "nkaec/stft.h"

namespace nkaec {

// Per-bin Kalman filter over the convolutive transfer function of the echo
// path. The state follows a first-order Markov model with transition A close
// to 1; process noise is estimated from the filter's own trajectory and the
// observation noise power from the smoothed prior error.
struct TfdkfConfig {
  int taps = 4;
  double transition_a = 0.999;  // state transition, in (0, 1]
  double q_forgetting = 0.99;   // forgetting for the process-noise estimate, in (0, 1)
  double obs_smoothing = 0.8;   // smoothing for the |S|^2 estimate, in [0, 1)
  double regularizer = 1e-10;   // keeps the gain denominator positive
  double p_init_scale = 1.0;    // initial misalignment covariance (times identity)

  void validate() const;
};

// State for one frequency bin. p stays Hermitian with nonnegative real
// diagonal (re-symmetrized after each update; the pre-symmetrization drift is
// exposed for tests).
struct TfdkfState {
  Eigen::VectorXcd h_hat;
  Eigen::MatrixXcd p;
  Eigen::MatrixXcd q_acc;  // running average of h h^H driving the process-noise estimate
  double s_pow = 0.0;      // smoothed observation-noise power
  double last_hermitian_drift = 0.0;
};

TfdkfState make_tfdkf_state(const TfdkfConfig& config);

// One predict+update on a single bin. x is the CTF input (newest frame
// first), mic the microphone bin value. Returns the echo-cancelled bin,
// computed with the post-update filter.
std::complex<double> tfdkf_step(TfdkfState& state, std::span<const std::complex<double>> x,
                                std::complex<double> mic, const TfdkfConfig& config);

// Runs the filter over every bin independently. Output shape, framing and
// trim length follow mic_spec.
Spectrogram tfdkf_run(const Spectrogram& far_spec, const Spectrogram& mic_spec,
                      const TfdkfConfig& config);

}  // namespace nkaec

#endif  // NKAEC_TFDKF_H_
