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

#ifndef NKAEC_STFT_H_
#define NKAEC_STFT_H_

#include <complex>
#include <cstdint>
#include <vector>

#include "nkaec/error.h"

namespace nkaec {

enum class WindowKind { kHann, kSqrtHann };

// Analysis/synthesis framing parameters. The same window is used on both
// sides (WOLA); istft() renormalizes by the accumulated analysis*synthesis
// window sum per sample, so any config that passes the numeric
// overlap-add-constancy check reconstructs exactly.
struct StftConfig {
  int fft_size = 1024;
  int window_length = 1024;  // must equal fft_size
  int hop_size = 256;        // must divide window_length
  WindowKind window = WindowKind::kSqrtHann;

  int num_bins() const { return fft_size / 2 + 1; }
  int lead_padding() const { return window_length - hop_size; }
};

// Throws InvalidConfig unless window_length == fft_size, hop divides the
// window length, and the windowed overlap-add sum is constant over interior
// samples (checked numerically to 1e-10 relative).
void validate_config(const StftConfig& config);

// Periodic window of the given kind, length n.
std::vector<double> make_window(WindowKind kind, int n);

struct TimeSignal {
  std::vector<double> samples;
  int sample_rate = 16000;

  int64_t size() const { return static_cast<int64_t>(samples.size()); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(size()) / sample_rate : 0.0;
  }
};

// One-sided complex time-frequency matrix, row-major [frame][bin].
struct Spectrogram {
  std::vector<std::complex<double>> data;
  int num_frames = 0;
  int num_bins = 0;
  StftConfig config;
  int sample_rate = 16000;
  // Length of the time signal this was analyzed from; istft() trims to it.
  // 0 means unknown (istft keeps the full overlap-add range).
  int64_t source_samples = 0;

  std::complex<double>& at(int frame, int bin) {
    return data[static_cast<size_t>(frame) * num_bins + bin];
  }
  const std::complex<double>& at(int frame, int bin) const {
    return data[static_cast<size_t>(frame) * num_bins + bin];
  }

  // Copies one bin's frame series into a contiguous vector.
  std::vector<std::complex<double>> bin_series(int bin) const;

  bool same_shape(const Spectrogram& other) const {
    return num_frames == other.num_frames && num_bins == other.num_bins;
  }
};

Spectrogram make_spectrogram(int num_frames, const StftConfig& config);

// Forward transform. Frames are hop-aligned against a signal zero-padded by
// window_length - hop_size leading samples, and the frame count
// M = ceil((len + lead_padding) / hop) is chosen so that every real sample
// is covered by the full window_length/hop overlapping frames. Bins are
// one-sided (fft_size/2 + 1), unnormalized forward DFT.
Spectrogram stft(const TimeSignal& signal, const StftConfig& config);

// Weighted overlap-add inverse of stft(). Exact reconstruction (double
// precision round-off only) wherever the window-sum is nonzero, which with
// the stft() framing is every sample of the original signal.
TimeSignal istft(const Spectrogram& spec);

}  // namespace nkaec

#endif  // NKAEC_STFT_H_
