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

#include "nkaec/pnlms.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nkaec/error.h"

namespace nkaec {

void PnlmsConfig::validate() const {
  if (filter_len < 1) throw InvalidConfig("pnlms: filter_len must be >= 1");
  if (!(step >= 0.0 && step < 2.0)) throw InvalidConfig("pnlms: step must be in [0, 2)");
  if (!(regularizer > 0.0)) throw InvalidConfig("pnlms: regularizer must be positive");
  if (!(delta_p > 0.0) || !(rho > 0.0)) throw InvalidConfig("pnlms: delta_p/rho must be positive");
}

TimeSignal pnlms_run(const TimeSignal& far, const TimeSignal& mic, const PnlmsConfig& config) {
  config.validate();
  if (far.size() != mic.size()) throw ShapeError("pnlms_run: length mismatch");

  const int n = config.filter_len;
  const int64_t len = far.size();
  std::vector<double> w(n, 0.0);
  std::vector<double> xbuf(n, 0.0);  // xbuf[i] = far[t - i]
  std::vector<double> gains(n, 1.0);

  TimeSignal est;
  est.sample_rate = mic.sample_rate;
  est.samples.resize(len);

  for (int64_t t = 0; t < len; ++t) {
    for (int i = n - 1; i > 0; --i) xbuf[i] = xbuf[i - 1];
    xbuf[0] = far.samples[t];

    double y_hat = 0.0;
    for (int i = 0; i < n; ++i) y_hat += w[i] * xbuf[i];
    const double e = mic.samples[t] - y_hat;
    est.samples[t] = e;

    if (config.step == 0.0) continue;

    if (config.proportionate) {
      double linf = config.delta_p;
      for (int i = 0; i < n; ++i) linf = std::max(linf, std::abs(w[i]));
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        gains[i] = std::max(config.rho * linf, std::abs(w[i]));
        sum += gains[i];
      }
      const double inv_mean = static_cast<double>(n) / sum;
      for (int i = 0; i < n; ++i) gains[i] *= inv_mean;
    }

    double norm = config.regularizer;
    for (int i = 0; i < n; ++i) norm += gains[i] * xbuf[i] * xbuf[i];
    const double scale = config.step * e / norm;
    for (int i = 0; i < n; ++i) w[i] += scale * gains[i] * xbuf[i];
  }
  return est;
}

}  // namespace nkaec
