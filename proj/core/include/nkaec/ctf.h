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

#ifndef NKAEC_CTF_H_
#define NKAEC_CTF_H_

#include <complex>
#include <span>
#include <vector>

#include "nkaec/error.h"
#include "nkaec/stft.h"

namespace nkaec {

using cplx = std::complex<double>;

// Per-bin convolutive-transfer-function input: the current far-end frame and
// the L-1 frames before it, newest first. Frames before the signal start are
// zero.
struct CtfInputVector {
  std::vector<cplx> values;  // values[0] is frame m, values[l] is frame m-l
};

inline CtfInputVector ctf_stack(const Spectrogram& far_spec, int frame, int bin, int taps) {
  if (taps < 1) throw InvalidConfig("ctf_stack: taps must be >= 1");
  if (frame < 0 || frame >= far_spec.num_frames) throw IndexError("ctf_stack: frame out of range");
  if (bin < 0 || bin >= far_spec.num_bins) throw IndexError("ctf_stack: bin out of range");
  CtfInputVector x;
  x.values.resize(taps);
  for (int l = 0; l < taps; ++l) {
    const int j = frame - l;
    x.values[l] = j >= 0 ? far_spec.at(j, bin) : cplx{0.0, 0.0};
  }
  return x;
}

// Hermitian filter application: conj(h) . x. The single place this product is
// computed, so every consumer (echo synthesis, filters, loss targets) shares
// one arithmetic path.
inline cplx apply_ctf(std::span<const cplx> h, std::span<const cplx> x) {
  if (h.size() != x.size()) throw ShapeError("apply_ctf: length mismatch");
  cplx acc{0.0, 0.0};
  for (size_t l = 0; l < h.size(); ++l) acc += std::conj(h[l]) * x[l];
  return acc;
}

inline cplx apply_ctf(const std::vector<cplx>& h, const CtfInputVector& x) {
  return apply_ctf(std::span<const cplx>(h), std::span<const cplx>(x.values));
}

}  // namespace nkaec

#endif  // NKAEC_CTF_H_
