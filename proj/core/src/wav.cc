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

#include "nkaec/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "nkaec/error.h"

namespace nkaec {

namespace {

uint32_t rd_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t rd_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0]) | (static_cast<uint16_t>(p[1]) << 8);
}

void wr_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
  out.push_back((v >> 16) & 0xff);
  out.push_back((v >> 24) & 0xff);
}

void wr_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
}

}  // namespace

TimeSignal read_wav(const std::string& path, int expected_rate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_wav: cannot open " + path);
  std::vector<uint8_t> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 44 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw IoError("read_wav: not a RIFF/WAVE file: " + path);

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const uint8_t* data = nullptr;
  uint32_t data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const uint8_t* hdr = buf.data() + pos;
    uint32_t chunk_len = rd_u32(hdr + 4);
    const uint8_t* body = hdr + 8;
    if (pos + 8 + chunk_len > buf.size()) throw IoError("read_wav: truncated chunk in " + path);
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw IoError("read_wav: malformed fmt chunk in " + path);
      format = rd_u16(body);
      channels = rd_u16(body + 2);
      rate = rd_u32(body + 4);
      bits = rd_u16(body + 14);
      if (format == 0xfffe && chunk_len >= 40) format = rd_u16(body + 24);  // extensible
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = body;
      data_len = chunk_len;
    }
    pos += 8 + chunk_len + (chunk_len & 1);
  }
  if (data == nullptr || rate == 0) throw IoError("read_wav: missing fmt/data chunk in " + path);
  if (channels != 1) throw InvalidConfig("read_wav: only mono supported, got " +
                                         std::to_string(channels) + " channels: " + path);
  if (expected_rate > 0 && static_cast<int>(rate) != expected_rate)
    throw InvalidConfig("read_wav: expected " + std::to_string(expected_rate) + " Hz, got " +
                        std::to_string(rate) + " Hz: " + path);

  TimeSignal sig;
  sig.sample_rate = static_cast<int>(rate);
  if (format == 1 && bits == 16) {
    size_t n = data_len / 2;
    sig.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      int16_t v = static_cast<int16_t>(rd_u16(data + 2 * i));
      sig.samples[i] = static_cast<double>(v) / 32768.0;
    }
  } else if (format == 3 && bits == 32) {
    size_t n = data_len / 4;
    sig.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      uint32_t raw = rd_u32(data + 4 * i);
      float f;
      std::memcpy(&f, &raw, 4);
      sig.samples[i] = static_cast<double>(f);
    }
  } else {
    throw InvalidConfig("read_wav: unsupported format (only PCM16 and float32): " + path);
  }
  return sig;
}

void write_wav(const std::string& path, const TimeSignal& signal, WavFormat format) {
  const bool f32 = format == WavFormat::kFloat32;
  const uint32_t bytes_per_sample = f32 ? 4 : 2;
  const uint32_t data_len = static_cast<uint32_t>(signal.samples.size()) * bytes_per_sample;

  std::vector<uint8_t> out;
  out.reserve(44 + data_len);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  wr_u32(out, 36 + data_len);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  wr_u32(out, 16);
  wr_u16(out, f32 ? 3 : 1);
  wr_u16(out, 1);  // mono
  wr_u32(out, static_cast<uint32_t>(signal.sample_rate));
  wr_u32(out, static_cast<uint32_t>(signal.sample_rate) * bytes_per_sample);
  wr_u16(out, static_cast<uint16_t>(bytes_per_sample));
  wr_u16(out, f32 ? 32 : 16);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  wr_u32(out, data_len);

  for (double s : signal.samples) {
    if (f32) {
      float f = static_cast<float>(s);
      uint32_t raw;
      std::memcpy(&raw, &f, 4);
      wr_u32(out, raw);
    } else {
      double clamped = std::clamp(s, -1.0, 32767.0 / 32768.0);
      int16_t v = static_cast<int16_t>(std::lrint(clamped * 32768.0));
      wr_u16(out, static_cast<uint16_t>(v));
    }
  }

  std::ofstream ofs(path, std::ios::binary | std::ios::trunc);
  if (!ofs) throw IoError("write_wav: cannot open " + path + " for writing");
  ofs.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!ofs) throw IoError("write_wav: short write to " + path);
}

}  // namespace nkaec
