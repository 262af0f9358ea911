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

#ifndef NKAEC_NKF_MODEL_H_
#define NKAEC_NKF_MODEL_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nkaec {

enum class InitMode { kZeros, kNoise };

// Architecture hyperparameters of the gain network. Every width is a fixed
// function of the tap count: feature dim D = 2L+1, FC widths 2D/2D/L, GRU
// hidden size L^2+2.
struct NkfConfig {
  int taps = 4;  // L
  InitMode init = InitMode::kZeros;
  double noise_scale = 0.1;  // per-part stddev for noise-mode state init

  int feature_dim() const { return 2 * taps + 1; }         // D
  int fc_width() const { return 2 * feature_dim(); }       // 2D
  int hidden_size() const { return taps * taps + 2; }      // L^2 + 2

  void validate() const;
};

struct ComplexLinear {
  Eigen::MatrixXcd w;  // out x in
  Eigen::VectorXcd b;
};

// One slope per channel, shared by the real and imaginary parts.
struct Prelu {
  Eigen::VectorXd slope;
};

struct GruWeights {
  Eigen::MatrixXcd wz, wr, wn;  // input maps, hidden x in
  Eigen::MatrixXcd uz, ur, un;  // recurrent maps, hidden x hidden
  Eigen::VectorXcd bz, br, bn;
};

// The full parameter set; one instance serves every frequency bin.
struct ModelWeights {
  NkfConfig config;
  ComplexLinear fc1;
  Prelu act1;
  GruWeights gru1;
  GruWeights gru2;
  ComplexLinear fc2;
  Prelu act2;
  ComplexLinear fc3;

  // Complex entries count as two real parameters.
  int64_t num_real_parameters() const;
};

// All-zero parameter set with the right shapes.
ModelWeights zero_weights(const NkfConfig& config);

// Glorot-style init: each real/imag part drawn with stddev
// 1/sqrt(2 * fan_avg); biases zero; PReLU slopes 0.25.
ModelWeights random_weights(const NkfConfig& config, uint64_t seed);

// Uniform named access to every tensor, in a fixed serialization order.
enum class TensorType { kComplexMatrix, kComplexVector, kRealVector };

struct TensorRef {
  std::string name;
  TensorType type = TensorType::kComplexMatrix;
  Eigen::MatrixXcd* cmat = nullptr;
  Eigen::VectorXcd* cvec = nullptr;
  Eigen::VectorXd* rvec = nullptr;

  int64_t real_param_count() const;
};

std::vector<TensorRef> tensor_refs(ModelWeights& w);

// Little-endian "NKFW" container: magic, u32 version=1, u32 record count;
// per record u16 name length, name bytes, u8 ndim, u32 dims[], then row-major
// interleaved (real, imag) float32 pairs. Real-valued tensors are stored with
// zero imaginary parts. A plain-text sidecar (path + ".manifest") lists
// name, shape and CRC-32 of each record's payload.
void save_weights(const std::string& path, const ModelWeights& weights);

// Loads and shape-checks a weight file; when verify_manifest is set and the
// sidecar exists, every record checksum is re-validated against it.
ModelWeights load_weights(const std::string& path, bool verify_manifest = true);

std::string manifest_path_for(const std::string& weights_path);

}  // namespace nkaec

#endif  // NKAEC_NKF_MODEL_H_
