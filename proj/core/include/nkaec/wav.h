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

#ifndef NKAEC_WAV_H_
#define NKAEC_WAV_H_

#include <string>

#include "nkaec/stft.h"

namespace nkaec {

enum class WavFormat { kPcm16, kFloat32 };

// Reads a mono WAV file (PCM16 or IEEE float32). Throws InvalidConfig if the
// file is multichannel or its rate differs from expected_rate (pass 0 to
// accept any rate); resampling is out of scope.
TimeSignal read_wav(const std::string& path, int expected_rate = 16000);

// Writes a mono WAV file. PCM16 samples are clamped to [-1, 1) and rounded;
// float32 is written verbatim.
void write_wav(const std::string& path, const TimeSignal& signal,
               WavFormat format = WavFormat::kFloat32);

}  // namespace nkaec

#endif  // NKAEC_WAV_H_
