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

#include "nkaec/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nkaec/error.h"

namespace nkaec {

double cap_db(double v) { return std::min(v, kMetricCapDb); }

namespace {

// 10*log10(ref_energy / residual_energy) over [begin, end).
double energy_ratio_db(const std::vector<double>& ref, const std::vector<double>& est,
                       int64_t begin, int64_t end, const char* what) {
  double e_ref = 0.0, e_res = 0.0;
  for (int64_t i = begin; i < end; ++i) {
    e_ref += ref[i] * ref[i];
    const double r = ref[i] - est[i];
    e_res += r * r;
  }
  if (e_ref <= 0.0) throw DegenerateInput(std::string(what) + ": reference has zero energy");
  if (e_res == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(e_ref / e_res);
}

}  // namespace

double erle_db(const TimeSignal& d, const TimeSignal& d_hat) {
  if (d.size() != d_hat.size()) throw ShapeError("erle_db: length mismatch");
  if (d.size() == 0) throw EmptyInput("erle_db: empty signals");
  return energy_ratio_db(d.samples, d_hat.samples, 0, d.size(), "erle_db");
}

double sdr_db(const TimeSignal& s, const TimeSignal& s_hat) {
  if (s.size() != s_hat.size()) throw ShapeError("sdr_db: length mismatch");
  if (s.size() == 0) throw EmptyInput("sdr_db: empty signals");
  return energy_ratio_db(s.samples, s_hat.samples, 0, s.size(), "sdr_db");
}

std::vector<ErleCurvePoint> erle_curve(const TimeSignal& d, const TimeSignal& d_hat,
                                       int64_t window, int64_t hop) {
  if (d.size() != d_hat.size()) throw ShapeError("erle_curve: length mismatch");
  if (hop < 1 || window < hop) throw InvalidConfig("erle_curve: need window >= hop >= 1");

  double total = 0.0;
  for (double v : d.samples) total += v * v;
  const double gap_threshold = 1e-12 * std::max(1.0, total);

  std::vector<ErleCurvePoint> curve;
  for (int64_t start = 0; start + window <= d.size(); start += hop) {
    double e_ref = 0.0, e_res = 0.0;
    for (int64_t i = start; i < start + window; ++i) {
      e_ref += d.samples[i] * d.samples[i];
      const double r = d.samples[i] - d_hat.samples[i];
      e_res += r * r;
    }
    ErleCurvePoint p;
    p.start_sample = start;
    if (e_ref > gap_threshold) {
      p.erle_db = e_res == 0.0 ? std::numeric_limits<double>::infinity()
                               : 10.0 * std::log10(e_ref / e_res);
    }
    curve.push_back(p);
  }
  return curve;
}

}  // namespace nkaec
