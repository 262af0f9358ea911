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

#include "nkaec/nkf_model.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include "nkaec/checksum.h"
#include "nkaec/error.h"
#include "nkaec/rng.h"

namespace nkaec {

void NkfConfig::validate() const {
  if (taps < 1) throw InvalidConfig("nkf: taps must be >= 1");
  if (!(noise_scale >= 0.0)) throw InvalidConfig("nkf: noise_scale must be >= 0");
}

int64_t TensorRef::real_param_count() const {
  switch (type) {
    case TensorType::kComplexMatrix:
      return 2 * cmat->size();
    case TensorType::kComplexVector:
      return 2 * cvec->size();
    case TensorType::kRealVector:
      return rvec->size();
  }
  return 0;
}

int64_t ModelWeights::num_real_parameters() const {
  int64_t n = 0;
  for (const TensorRef& t : tensor_refs(const_cast<ModelWeights&>(*this))) n += t.real_param_count();
  return n;
}

std::vector<TensorRef> tensor_refs(ModelWeights& w) {
  std::vector<TensorRef> refs;
  auto mat = [&](const std::string& name, Eigen::MatrixXcd& m) {
    refs.push_back({name, TensorType::kComplexMatrix, &m, nullptr, nullptr});
  };
  auto cvec = [&](const std::string& name, Eigen::VectorXcd& v) {
    refs.push_back({name, TensorType::kComplexVector, nullptr, &v, nullptr});
  };
  auto rvec = [&](const std::string& name, Eigen::VectorXd& v) {
    refs.push_back({name, TensorType::kRealVector, nullptr, nullptr, &v});
  };
  mat("fc1.w", w.fc1.w);
  cvec("fc1.b", w.fc1.b);
  rvec("fc1.slope", w.act1.slope);
  auto gru = [&](const std::string& prefix, GruWeights& g) {
    mat(prefix + ".wz", g.wz);
    mat(prefix + ".wr", g.wr);
    mat(prefix + ".wn", g.wn);
    mat(prefix + ".uz", g.uz);
    mat(prefix + ".ur", g.ur);
    mat(prefix + ".un", g.un);
    cvec(prefix + ".bz", g.bz);
    cvec(prefix + ".br", g.br);
    cvec(prefix + ".bn", g.bn);
  };
  gru("gru1", w.gru1);
  gru("gru2", w.gru2);
  mat("fc2.w", w.fc2.w);
  cvec("fc2.b", w.fc2.b);
  rvec("fc2.slope", w.act2.slope);
  mat("fc3.w", w.fc3.w);
  cvec("fc3.b", w.fc3.b);
  return refs;
}

namespace {

void shape_weights(ModelWeights& w) {
  const int d = w.config.feature_dim();
  const int fc = w.config.fc_width();
  const int h = w.config.hidden_size();
  const int l = w.config.taps;
  w.fc1.w.setZero(fc, d);
  w.fc1.b.setZero(fc);
  w.act1.slope.setZero(fc);
  auto gru = [&](GruWeights& g, int in) {
    g.wz.setZero(h, in);
    g.wr.setZero(h, in);
    g.wn.setZero(h, in);
    g.uz.setZero(h, h);
    g.ur.setZero(h, h);
    g.un.setZero(h, h);
    g.bz.setZero(h);
    g.br.setZero(h);
    g.bn.setZero(h);
  };
  gru(w.gru1, fc);
  gru(w.gru2, h);
  w.fc2.w.setZero(fc, h);
  w.fc2.b.setZero(fc);
  w.act2.slope.setZero(fc);
  w.fc3.w.setZero(l, fc);
  w.fc3.b.setZero(l);
}

}  // namespace

ModelWeights zero_weights(const NkfConfig& config) {
  config.validate();
  ModelWeights w;
  w.config = config;
  shape_weights(w);
  return w;
}

ModelWeights random_weights(const NkfConfig& config, uint64_t seed) {
  ModelWeights w = zero_weights(config);
  Rng rng(seed);
  auto fill = [&](Eigen::MatrixXcd& m) {
    const double fan_avg = 0.5 * (m.rows() + m.cols());
    const double std = 1.0 / std::sqrt(2.0 * fan_avg);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.complex_normal(std);
  };
  for (TensorRef& t : tensor_refs(w)) {
    if (t.type == TensorType::kComplexMatrix) fill(*t.cmat);
    if (t.type == TensorType::kRealVector) t.rvec->setConstant(0.25);
    // complex biases stay zero
  }
  return w;
}

namespace {

struct RawRecord {
  std::vector<uint32_t> dims;
  std::vector<float> payload;  // interleaved re, im
};

void append_u16(std::string& s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

void append_u32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

RawRecord record_from_tensor(const TensorRef& t) {
  RawRecord r;
  if (t.type == TensorType::kComplexMatrix) {
    r.dims = {static_cast<uint32_t>(t.cmat->rows()), static_cast<uint32_t>(t.cmat->cols())};
    r.payload.reserve(2 * t.cmat->size());
    for (Eigen::Index i = 0; i < t.cmat->rows(); ++i)
      for (Eigen::Index j = 0; j < t.cmat->cols(); ++j) {
        r.payload.push_back(static_cast<float>((*t.cmat)(i, j).real()));
        r.payload.push_back(static_cast<float>((*t.cmat)(i, j).imag()));
      }
  } else if (t.type == TensorType::kComplexVector) {
    r.dims = {static_cast<uint32_t>(t.cvec->size())};
    for (Eigen::Index i = 0; i < t.cvec->size(); ++i) {
      r.payload.push_back(static_cast<float>((*t.cvec)(i).real()));
      r.payload.push_back(static_cast<float>((*t.cvec)(i).imag()));
    }
  } else {
    r.dims = {static_cast<uint32_t>(t.rvec->size())};
    for (Eigen::Index i = 0; i < t.rvec->size(); ++i) {
      r.payload.push_back(static_cast<float>((*t.rvec)(i)));
      r.payload.push_back(0.0f);
    }
  }
  return r;
}

std::string dims_to_string(const std::vector<uint32_t>& dims) {
  std::string s;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(dims[i]);
  }
  return s;
}

}  // namespace

std::string manifest_path_for(const std::string& weights_path) { return weights_path + ".manifest"; }

void save_weights(const std::string& path, const ModelWeights& weights) {
  auto& w = const_cast<ModelWeights&>(weights);
  std::vector<TensorRef> refs = tensor_refs(w);

  std::string blob;
  blob += "NKFW";
  append_u32(blob, 1);
  append_u32(blob, static_cast<uint32_t>(refs.size()));

  std::ostringstream manifest;
  manifest << "nkfw-manifest 1\n";

  for (const TensorRef& t : refs) {
    RawRecord r = record_from_tensor(t);
    append_u16(blob, static_cast<uint16_t>(t.name.size()));
    blob += t.name;
    blob.push_back(static_cast<char>(r.dims.size()));
    for (uint32_t d : r.dims) append_u32(blob, d);
    const size_t bytes = r.payload.size() * sizeof(float);
    const size_t off = blob.size();
    blob.resize(off + bytes);
    std::memcpy(blob.data() + off, r.payload.data(), bytes);

    char crc_hex[16];
    std::snprintf(crc_hex, sizeof(crc_hex), "%08x", crc32(r.payload.data(), bytes));
    manifest << t.name << " " << dims_to_string(r.dims) << " " << crc_hex << "\n";
  }
  manifest << "params " << weights.num_real_parameters() << "\n";

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("save_weights: cannot open " + path);
  out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!out) throw IoError("save_weights: short write to " + path);

  std::ofstream mout(manifest_path_for(path), std::ios::trunc);
  if (!mout) throw IoError("save_weights: cannot open " + manifest_path_for(path));
  mout << manifest.str();
}

ModelWeights load_weights(const std::string& path, bool verify_manifest) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("load_weights: cannot open " + path);
  std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const uint8_t*>(blob.data());
  const size_t n = blob.size();
  size_t pos = 0;

  auto need = [&](size_t k) {
    if (pos + k > n) throw IoError("load_weights: truncated file " + path);
  };
  auto rd_u16 = [&]() {
    need(2);
    uint16_t v = static_cast<uint16_t>(p[pos]) | (static_cast<uint16_t>(p[pos + 1]) << 8);
    pos += 2;
    return v;
  };
  auto rd_u32 = [&]() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(p[pos + i]) << (8 * i);
    pos += 4;
    return v;
  };

  need(4);
  if (std::memcmp(p, "NKFW", 4) != 0) throw IoError("load_weights: bad magic in " + path);
  pos = 4;
  const uint32_t version = rd_u32();
  if (version != 1) throw IoError("load_weights: unsupported version " + std::to_string(version));
  const uint32_t count = rd_u32();

  std::map<std::string, RawRecord> records;
  std::vector<std::pair<std::string, uint32_t>> crcs;
  for (uint32_t r = 0; r < count; ++r) {
    const uint16_t name_len = rd_u16();
    need(name_len);
    std::string name(blob.data() + pos, name_len);
    pos += name_len;
    need(1);
    const int ndim = p[pos++];
    RawRecord rec;
    uint64_t elems = 1;
    for (int i = 0; i < ndim; ++i) {
      rec.dims.push_back(rd_u32());
      elems *= rec.dims.back();
    }
    const size_t bytes = static_cast<size_t>(elems) * 2 * sizeof(float);
    need(bytes);
    rec.payload.resize(elems * 2);
    std::memcpy(rec.payload.data(), p + pos, bytes);
    pos += bytes;
    crcs.emplace_back(name, crc32(rec.payload.data(), bytes));
    records[name] = std::move(rec);
  }

  if (verify_manifest) {
    std::ifstream mf(manifest_path_for(path));
    if (mf) {
      std::string header;
      std::getline(mf, header);
      if (header.rfind("nkfw-manifest", 0) != 0)
        throw IoError("load_weights: bad manifest header for " + path);
      std::map<std::string, std::pair<std::string, uint32_t>> listed;
      std::string name, dims, crc_hex;
      while (mf >> name >> dims) {
        if (name == "params") continue;
        mf >> crc_hex;
        listed[name] = {dims, static_cast<uint32_t>(std::stoul(crc_hex, nullptr, 16))};
      }
      for (const auto& [rec_name, rec_crc] : crcs) {
        auto it = listed.find(rec_name);
        if (it == listed.end())
          throw IoError("load_weights: manifest is missing record " + rec_name);
        if (it->second.second != rec_crc)
          throw IoError("load_weights: checksum mismatch for " + rec_name + " in " + path);
      }
    }
  }

  // The tap count is implied by the gain layer: fc3.w is L x 2D.
  auto it = records.find("fc3.w");
  if (it == records.end() || it->second.dims.size() != 2)
    throw IoError("load_weights: missing fc3.w record in " + path);
  NkfConfig config;
  config.taps = static_cast<int>(it->second.dims[0]);
  ModelWeights w = zero_weights(config);

  for (TensorRef& t : tensor_refs(w)) {
    auto rit = records.find(t.name);
    if (rit == records.end()) throw IoError("load_weights: missing record " + t.name);
    const RawRecord& rec = rit->second;
    RawRecord expect = record_from_tensor(t);  // zero-shaped; dims are what we compare
    if (rec.dims != expect.dims)
      throw IoError("load_weights: shape mismatch for " + t.name + " in " + path);
    const float* v = rec.payload.data();
    if (t.type == TensorType::kComplexMatrix) {
      for (Eigen::Index i = 0; i < t.cmat->rows(); ++i)
        for (Eigen::Index j = 0; j < t.cmat->cols(); ++j) {
          (*t.cmat)(i, j) = {static_cast<double>(v[0]), static_cast<double>(v[1])};
          v += 2;
        }
    } else if (t.type == TensorType::kComplexVector) {
      for (Eigen::Index i = 0; i < t.cvec->size(); ++i) {
        (*t.cvec)(i) = {static_cast<double>(v[0]), static_cast<double>(v[1])};
        v += 2;
      }
    } else {
      for (Eigen::Index i = 0; i < t.rvec->size(); ++i) {
        (*t.rvec)(i) = static_cast<double>(v[0]);
        v += 2;
      }
    }
    for (float f : rec.payload)
      if (!std::isfinite(f)) throw NumericalError("load_weights: non-finite value in " + t.name);
  }
  return w;
}

}  // namespace nkaec
