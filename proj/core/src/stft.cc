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

#include "nkaec/stft.h"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/FFT>

namespace nkaec {

std::vector<double> make_window(WindowKind kind, int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    double hann = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / n);  // periodic
    w[i] = kind == WindowKind::kHann ? hann : std::sqrt(hann);
  }
  return w;
}

namespace {

// Overlap-add sum of analysis*synthesis over enough frames to reach steady
// state; returns {max deviation from mean, mean} over one interior period.
std::pair<double, double> ola_sum_stats(const StftConfig& c) {
  const int n = c.window_length;
  const int hop = c.hop_size;
  std::vector<double> w = make_window(c.window, n);
  std::vector<double> acc(4 * n, 0.0);
  for (int start = 0; start + n <= static_cast<int>(acc.size()); start += hop) {
    for (int i = 0; i < n; ++i) acc[start + i] += w[i] * w[i];
  }
  double mean = 0.0;
  for (int j = n; j < 2 * n; ++j) mean += acc[j];
  mean /= n;
  double dev = 0.0;
  for (int j = n; j < 2 * n; ++j) dev = std::max(dev, std::abs(acc[j] - mean));
  return {dev, mean};
}

}  // namespace

void validate_config(const StftConfig& config) {
  if (config.fft_size <= 0 || config.window_length <= 0 || config.hop_size <= 0)
    throw InvalidConfig("stft: sizes must be positive");
  if (config.window_length != config.fft_size)
    throw InvalidConfig("stft: window_length must equal fft_size");
  if (config.window_length % config.hop_size != 0)
    throw InvalidConfig("stft: hop_size must divide window_length");
  auto [dev, mean] = ola_sum_stats(config);
  if (mean <= 0.0 || dev > 1e-10 * mean)
    throw InvalidConfig("stft: window/hop combination violates constant overlap-add");
}

std::vector<std::complex<double>> Spectrogram::bin_series(int bin) const {
  if (bin < 0 || bin >= num_bins) throw IndexError("bin_series: bin out of range");
  std::vector<std::complex<double>> out(num_frames);
  for (int m = 0; m < num_frames; ++m) out[m] = at(m, bin);
  return out;
}

Spectrogram make_spectrogram(int num_frames, const StftConfig& config) {
  Spectrogram s;
  s.config = config;
  s.num_frames = num_frames;
  s.num_bins = config.num_bins();
  s.data.assign(static_cast<size_t>(num_frames) * s.num_bins, {0.0, 0.0});
  return s;
}

Spectrogram stft(const TimeSignal& signal, const StftConfig& config) {
  validate_config(config);
  if (signal.samples.empty()) throw EmptyInput("stft: empty signal");

  const int n = config.window_length;
  const int hop = config.hop_size;
  const int64_t len = signal.size();
  const int64_t lead = config.lead_padding();
  const int num_frames = static_cast<int>((len + lead + hop - 1) / hop);

  Spectrogram spec = make_spectrogram(num_frames, config);
  spec.sample_rate = signal.sample_rate;
  spec.source_samples = len;

  const std::vector<double> window = make_window(config.window, n);
  std::vector<double> frame(n);
  std::vector<std::complex<double>> bins(config.num_bins());

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);

  for (int m = 0; m < num_frames; ++m) {
    const int64_t start = static_cast<int64_t>(m) * hop - lead;
    for (int i = 0; i < n; ++i) {
      const int64_t j = start + i;
      frame[i] = (j >= 0 && j < len) ? window[i] * signal.samples[j] : 0.0;
    }
    fft.fwd(bins, frame);
    std::copy(bins.begin(), bins.end(), spec.data.begin() + static_cast<size_t>(m) * spec.num_bins);
  }
  return spec;
}

TimeSignal istft(const Spectrogram& spec) {
  validate_config(spec.config);
  if (spec.num_bins != spec.config.num_bins())
    throw InvalidConfig("istft: bin count does not match config");
  TimeSignal out;
  out.sample_rate = spec.sample_rate;
  if (spec.num_frames == 0) return out;

  const int n = spec.config.window_length;
  const int hop = spec.config.hop_size;
  const int64_t lead = spec.config.lead_padding();
  const int64_t padded_len = static_cast<int64_t>(spec.num_frames - 1) * hop + n;

  const std::vector<double> window = make_window(spec.config.window, n);
  std::vector<double> acc(padded_len, 0.0);
  std::vector<double> wsum(padded_len, 0.0);
  std::vector<std::complex<double>> bins(spec.num_bins);
  std::vector<double> frame(n);

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);

  for (int m = 0; m < spec.num_frames; ++m) {
    std::copy(spec.data.begin() + static_cast<size_t>(m) * spec.num_bins,
              spec.data.begin() + static_cast<size_t>(m + 1) * spec.num_bins, bins.begin());
    fft.inv(frame, bins, n);  // applies 1/n
    const int64_t start = static_cast<int64_t>(m) * hop;
    for (int i = 0; i < n; ++i) {
      acc[start + i] += window[i] * frame[i];
      wsum[start + i] += window[i] * window[i];
    }
  }

  int64_t out_len = spec.source_samples > 0 ? spec.source_samples : padded_len - lead;
  out_len = std::min<int64_t>(out_len, padded_len - lead);
  out.samples.resize(out_len);
  for (int64_t j = 0; j < out_len; ++j) {
    const double d = wsum[lead + j];
    out.samples[j] = d > 1e-12 ? acc[lead + j] / d : 0.0;
  }
  return out;
}

}  // namespace nkaec
