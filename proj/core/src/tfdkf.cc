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

#include "nkaec/tfdkf.h"

#include <cmath>

#include "nkaec/error.h"

namespace nkaec {

using cplx = std::complex<double>;

void TfdkfConfig::validate() const {
  if (taps < 1) throw InvalidConfig("tfdkf: taps must be >= 1");
  if (!(transition_a > 0.0 && transition_a <= 1.0))
    throw InvalidConfig("tfdkf: transition_a must be in (0, 1]");
  if (!(q_forgetting > 0.0 && q_forgetting < 1.0))
    throw InvalidConfig("tfdkf: q_forgetting must be in (0, 1)");
  if (!(obs_smoothing >= 0.0 && obs_smoothing < 1.0))
    throw InvalidConfig("tfdkf: obs_smoothing must be in [0, 1)");
  if (!(regularizer > 0.0)) throw InvalidConfig("tfdkf: regularizer must be positive");
  if (!(p_init_scale > 0.0)) throw InvalidConfig("tfdkf: p_init_scale must be positive");
}

TfdkfState make_tfdkf_state(const TfdkfConfig& config) {
  config.validate();
  TfdkfState s;
  s.h_hat = Eigen::VectorXcd::Zero(config.taps);
  s.p = config.p_init_scale * Eigen::MatrixXcd::Identity(config.taps, config.taps);
  s.q_acc = Eigen::MatrixXcd::Zero(config.taps, config.taps);
  s.s_pow = 0.0;
  return s;
}

cplx tfdkf_step(TfdkfState& state, std::span<const cplx> x, cplx mic,
                const TfdkfConfig& config) {
  const int taps = config.taps;
  if (static_cast<int>(x.size()) != taps || state.h_hat.size() != taps)
    throw ShapeError("tfdkf_step: tap count mismatch");
  for (const cplx& v : x)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("tfdkf_step: non-finite far-end input");
  if (!std::isfinite(mic.real()) || !std::isfinite(mic.imag()))
    throw NumericalError("tfdkf_step: non-finite mic input");

  const double a = config.transition_a;
  Eigen::Map<const Eigen::VectorXcd> xv(x.data(), taps);

  // Predict. The process-noise estimate (1 - A^2) * q_acc keeps the state
  // model's stationary power consistent with the filter's own trajectory.
  state.h_hat *= a;
  state.p = (a * a) * state.p + (1.0 - a * a) * state.q_acc;

  // Prior error.
  const cplx e = mic - state.h_hat.dot(xv);  // Eigen dot conjugates the left operand

  // Gain. x^H P x is real for Hermitian P.
  const double xpx = std::real(xv.dot(state.p * xv));
  const double denom = xpx + state.s_pow + config.regularizer;
  const Eigen::VectorXcd k = (state.p * xv) / denom;

  // Correct. The innovation enters conjugated: for the Hermitian observation
  // model y = h^H x + s this is the update that contracts the misalignment
  // (equivalently, the conjugate CTF evolves linearly and sees k * e).
  state.h_hat.noalias() += k * std::conj(e);
  state.p -= k * (xv.adjoint() * state.p);

  // Numerical hygiene: P is Hermitian in exact arithmetic; pin it.
  state.last_hermitian_drift = (state.p - state.p.adjoint()).cwiseAbs().maxCoeff();
  state.p = 0.5 * (state.p + state.p.adjoint().eval());

  const cplx s_hat = mic - state.h_hat.dot(xv);

  const double lq = config.q_forgetting;
  state.q_acc = lq * state.q_acc + (1.0 - lq) * (state.h_hat * state.h_hat.adjoint());
  const double beta = config.obs_smoothing;
  state.s_pow = beta * state.s_pow + (1.0 - beta) * std::norm(e);

  return s_hat;
}

Spectrogram tfdkf_run(const Spectrogram& far_spec, const Spectrogram& mic_spec,
                      const TfdkfConfig& config) {
  config.validate();
  if (!far_spec.same_shape(mic_spec)) throw ShapeError("tfdkf_run: spectrogram shapes differ");

  Spectrogram est = mic_spec;  // inherit config, framing, trim length
  const int taps = config.taps;
  std::vector<cplx> window(taps);

  for (int bin = 0; bin < mic_spec.num_bins; ++bin) {
    TfdkfState state = make_tfdkf_state(config);
    std::fill(window.begin(), window.end(), cplx{0.0, 0.0});
    for (int m = 0; m < mic_spec.num_frames; ++m) {
      // Slide the CTF input window: newest frame first.
      for (int l = taps - 1; l > 0; --l) window[l] = window[l - 1];
      window[0] = far_spec.at(m, bin);
      est.at(m, bin) = tfdkf_step(state, window, mic_spec.at(m, bin), config);
    }
  }
  return est;
}

}  // namespace nkaec
