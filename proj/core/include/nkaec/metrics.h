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

#ifndef NKAEC_METRICS_H_
#define NKAEC_METRICS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "nkaec/stft.h"

namespace nkaec {

// Reporting cap applied by CSV writers; the metric functions themselves
// return +inf when the residual is exactly zero.
inline constexpr double kMetricCapDb = 99.0;

double cap_db(double v);

// Echo return loss enhancement: 10*log10(sum d^2 / sum (d - d_hat)^2).
// d is the ground-truth echo, d_hat the estimated echo.
double erle_db(const TimeSignal& d, const TimeSignal& d_hat);

// Near-end preservation: 10*log10(sum s^2 / sum (s - s_hat)^2), no alignment
// search.
double sdr_db(const TimeSignal& s, const TimeSignal& s_hat);

struct ErleCurvePoint {
  int64_t start_sample = 0;
  // Empty when the window holds (near-)zero ground-truth echo energy.
  std::optional<double> erle_db;
};

// Windowed ERLE over [i*hop, i*hop + window) slices; the last partial window
// is dropped. Values are uncapped (may be +inf); gaps are marked, not faked.
std::vector<ErleCurvePoint> erle_curve(const TimeSignal& d, const TimeSignal& d_hat,
                                       int64_t window, int64_t hop);

}  // namespace nkaec

#endif  // NKAEC_METRICS_H_
