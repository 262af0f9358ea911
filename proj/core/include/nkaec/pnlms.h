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

#ifndef NKAEC_PNLMS_H_
#define NKAEC_PNLMS_H_

#include "nkaec/stft.h"

namespace nkaec {

// Proportionate NLMS: step sizes are distributed in proportion to the current
// tap magnitudes, so sparse echo paths converge fast. proportionate = false
// degrades it to plain NLMS (all gains 1), used as a comparison baseline.
struct PnlmsConfig {
  int filter_len = 1024;
  double step = 0.5;          // mu, in (0, 2)
  double delta_p = 0.01;      // activation floor for the max-tap term
  double rho = 0.01;          // minimum per-tap gain fraction
  double regularizer = 1e-6;  // added to the normalization denominator
  bool proportionate = true;

  void validate() const;
};

// Sample-by-sample adaptive echo cancellation; returns the echo-cancelled
// signal (mic minus the running echo estimate).
TimeSignal pnlms_run(const TimeSignal& far, const TimeSignal& mic, const PnlmsConfig& config);

}  // namespace nkaec

#endif  // NKAEC_PNLMS_H_
