/*
Copyright (c) 2026 The mixprop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixprop/dense.hpp"
#include "mixprop/pushprop.hpp"

namespace mixprop {

// --- probability helpers -------------------------------------------------

inline constexpr double kProbFloor = 1e-12;

std::vector<double> softmax(std::span<const double> logits);

// -ln p[label], p clamped below at 1e-12.
double cross_entropy(std::span<const double> p, std::size_t label);

// p^(1/tau) / sum p^(1/tau), 0 < tau <= 1.
std::vector<double> sharpen(std::span<const double> p, double tau);

// sum_j (p_j - q_j)^2
double l2_distance(std::span<const double> p, std::span<const double> q);

// sum_j p_j ln(p_j / q_j), 0 ln 0 = 0, q clamped below at 1e-12.
double kl_divergence(std::span<const double> p, std::span<const double> q);

enum class Distance { l2, kl };
std::string_view distance_name(Distance d);
Distance parse_distance(std::string_view name);

double distance(Distance d, std::span<const double> target, std::span<const double> pred);
// d D(target, pred) / d pred
std::vector<double> distance_grad_pred(Distance d, std::span<const double> target, std::span<const double> pred);
// d D(target, pred) / d target
std::vector<double> distance_grad_target(Distance d, std::span<const double> target, std::span<const double> pred);

// Pulls a gradient w.r.t. softmax outputs back to the logits.
std::vector<double> softmax_backward(std::span<const double> probs, std::span<const double> grad_probs);

// --- model ---------------------------------------------------------------

struct Architecture {
  std::uint32_t input_dim = 0;    // d_f
  std::uint32_t hidden_dim = 0;   // d_h (hidden layers and embedding width)
  std::uint32_t num_classes = 0;  // C
  std::uint32_t num_layers = 1;   // L_m, weight layers of the MLP
  bool embed = false;             // learnable W0 applied before propagation
  bool batchnorm = false;         // after every hidden linear layer

  // Width the MLP sees: d_h in embed mode, d_f otherwise.
  std::uint32_t mlp_input_dim() const noexcept { return embed ? hidden_dim : input_dim; }
  void validate() const;
  friend bool operator==(const Architecture&, const Architecture&) = default;
};

struct LinearLayer {
  DenseMatrix weight;  // in x out
  std::vector<double> bias;
  friend bool operator==(const LinearLayer&, const LinearLayer&) = default;
};

struct BatchNormLayer {
  static constexpr double kMomentum = 0.9;
  static constexpr double kEps = 1e-5;
  std::vector<double> gamma, beta, running_mean, running_var;
  friend bool operator==(const BatchNormLayer&, const BatchNormLayer&) = default;
};

class MlpModel {
 public:
  MlpModel() = default;

  // Glorot-uniform weights, zero biases, seeded.
  static MlpModel create(const Architecture& arch, std::uint64_t seed);

  const Architecture& arch() const noexcept { return arch_; }

  bool has_embed() const noexcept { return arch_.embed; }
  DenseMatrix& embed() noexcept { return embed_; }
  const DenseMatrix& embed() const noexcept { return embed_; }

  std::vector<LinearLayer>& layers() noexcept { return layers_; }
  const std::vector<LinearLayer>& layers() const noexcept { return layers_; }
  // One per hidden layer when batchnorm is enabled, else empty.
  std::vector<BatchNormLayer>& norms() noexcept { return norms_; }
  const std::vector<BatchNormLayer>& norms() const noexcept { return norms_; }

  // Trainable tensors in declaration order: [W0], then per layer W, b and,
  // for normalized hidden layers, gamma, beta.
  std::vector<std::span<double>> parameters();
  std::vector<std::span<const double>> parameters() const;
  std::size_t parameter_count() const;

  friend bool operator==(const MlpModel&, const MlpModel&) = default;

 private:
  Architecture arch_;
  DenseMatrix embed_;
  std::vector<LinearLayer> layers_;
  std::vector<BatchNormLayer> norms_;
};

// Gradient tensors aligned with MlpModel::parameters().
using GradientSet = std::vector<std::vector<double>>;
GradientSet zero_gradients(const MlpModel& model);

struct ForwardCache {
  bool training = false;
  std::vector<DenseMatrix> inputs;  // input to each linear layer
  std::vector<DenseMatrix> normed;  // x-hat per hidden layer (batchnorm only)
  std::vector<DenseMatrix> hidden;  // post-normalization, pre-ReLU per hidden layer
  std::vector<std::vector<double>> inv_std;
  DenseMatrix logits;
  DenseMatrix probs;
};

// Rows of `inputs` through the MLP layers (not the embedding). In training
// mode batch normalization uses batch statistics and updates running stats.
ForwardCache mlp_forward(MlpModel& model, const DenseMatrix& inputs, bool training);
// Inference-mode forward; never touches the model.
ForwardCache mlp_forward(const MlpModel& model, const DenseMatrix& inputs);

// Accumulates parameter gradients for upstream d loss / d logits into
// `grads` and returns d loss / d inputs.
DenseMatrix mlp_backward(const MlpModel& model, const ForwardCache& cache, const DenseMatrix& grad_logits,
                         GradientSet& grads);

// --- optimizer -----------------------------------------------------------

struct AdamConfig {
  double lr = 1e-2;
  double weight_decay = 0.0;  // decoupled: params *= 1 - lr * wd
  double clip_norm = 0.0;     // global L2 norm; <= 0 disables
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

class AdamState {
 public:
  AdamState(const AdamConfig& config, const MlpModel& model);

  const AdamConfig& config() const noexcept { return config_; }
  std::uint64_t step() const noexcept { return step_; }

  // Clips, decays and applies one Adam update; returns the pre-clip global
  // gradient norm. Throws TrainingError on non-finite gradients.
  double apply(std::vector<std::span<double>> params, GradientSet& grads);

 private:
  AdamConfig config_;
  GradientSet m_, v_;
  std::uint64_t step_ = 0;
};

inline double adam_step(AdamState& state, MlpModel& model, GradientSet& grads) {
  return state.apply(model.parameters(), grads);
}

// --- model file ------------------------------------------------------------

// Propagation settings stored next to the weights so inference can rebuild Pi.
struct ModelMeta {
  double delta = 0.5;
  Scheme scheme = Scheme::ppr;
  double alpha = 0.1;
  std::uint32_t order = 0;
  friend bool operator==(const ModelMeta&, const ModelMeta&) = default;
};

std::string encode_model(const MlpModel& model, const ModelMeta& meta);
std::pair<MlpModel, ModelMeta> decode_model(std::string_view bytes, const std::string& source = "<memory>");
void write_model(const std::filesystem::path& path, const MlpModel& model, const ModelMeta& meta);
std::pair<MlpModel, ModelMeta> read_model(const std::filesystem::path& path);

}  // namespace mixprop
