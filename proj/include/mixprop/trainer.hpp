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
#include <vector>

#include "mixprop/augment.hpp"
#include "mixprop/dataset.hpp"
#include "mixprop/neural.hpp"
#include "mixprop/pushprop.hpp"

namespace mixprop {

struct TrainConfig {
  // augmentation
  double delta = 0.5;
  std::uint32_t copies = 2;  // M
  bool shared_mask = false;

  // propagation
  Scheme scheme = Scheme::ppr;
  double alpha = 0.1;
  std::uint32_t order = 20;  // N
  bool renorm_ppr = false;
  double r_max = 1e-7;
  std::uint32_t k = 32;

  // consistency
  std::optional<double> gamma;  // unset: 2 / C
  double tau = 0.5;
  double lambda_max = 1.0;
  std::uint32_t warmup = 1000;
  Distance distance = Distance::l2;
  bool grad_through_pseudo = false;
  bool confident_only_average = false;

  // batches
  std::uint32_t batch_labeled = 32;     // b_l
  std::uint32_t batch_unlabeled = 256;  // b_u
  std::optional<std::uint64_t> unlabeled_size;  // |U'|, unset: |U|

  // optimization
  double lr = 1e-2;
  double wr = 1e-3;
  double clip = 1.0;
  std::uint32_t layers = 2;   // L_m
  std::uint32_t hidden = 64;  // d_h
  bool embed_mode = false;
  bool batchnorm = false;

  std::uint32_t max_steps = 5000;
  std::uint32_t eval_every = 10;
  std::uint32_t patience = 50;
  bool stop_on_loss = false;

  std::uint64_t seed = 0;
  std::size_t workers = 1;

  void validate() const;
  double resolved_gamma(std::size_t num_classes) const;
  PropagationWeights weights() const;
};

struct StepRecord {
  std::uint32_t step = 0;
  double sup_loss = 0.0;
  double con_loss = 0.0;
  double lambda = 0.0;
  double conf_frac = 0.0;
  std::optional<double> val_acc;
  std::uint64_t aug_work = 0;  // element updates spent on random propagation
  std::size_t batch_rows = 0;  // labeled + unlabeled rows in the step
};

struct TrainLog {
  std::vector<StepRecord> steps;
  std::optional<std::uint32_t> best_step;
  double best_val_acc = 0.0;

  // "step\tsup_loss\tcon_loss\tlambda\tconf_frac\tval_acc", val_acc blank off eval steps.
  std::string to_tsv() const;
  void write_tsv(const std::filesystem::path& path) const;
};

// Uniform sample without replacement, returned ascending. size >= |U| keeps all.
std::vector<NodeId> sample_unlabeled_subset(std::span<const NodeId> unlabeled, std::uint64_t size, std::uint64_t seed);

double lambda_warmup(std::uint64_t step, double lambda_max, std::uint32_t warmup);

struct LossResult {
  double loss = 0.0;
  std::vector<DenseMatrix> grad_logits;  // [m] -> rows x C
  std::size_t confident = 0;
};

// probs[m] is rows x C. Mean cross-entropy over rows and augmentations.
LossResult supervised_loss(const std::vector<DenseMatrix>& probs, std::span<const ClassId> labels);

struct ConsistencyOptions {
  double gamma = 0.0;
  double tau = 0.5;
  Distance distance = Distance::l2;
  bool grad_through_pseudo = false;
  bool confident_only_average = false;
};

// Confidence-filtered distance between the sharpened mean prediction and each
// augmentation. Denominator is rows * M unless confident_only_average.
LossResult consistency_loss(const std::vector<DenseMatrix>& probs, const ConsistencyOptions& opts);

// Everything fixed for the duration of a run.
struct TrainingProblem {
  const CsrGraph* graph = nullptr;
  const FeatureMatrix* features = nullptr;
  const SparsifiedPanel* panel = nullptr;
  std::size_t num_classes = 0;
};

struct BatchObjective {
  double sup_loss = 0.0;
  double con_loss = 0.0;
  double total = 0.0;
  std::size_t confident = 0;
  std::uint64_t aug_work = 0;
};

// Loss L_sup + lambda * L_con for one step (masks keyed by `key`); adds the
// gradient w.r.t. every model parameter into `grads`.
BatchObjective batch_objective(MlpModel& model, const TrainConfig& config, const TrainingProblem& problem,
                               std::span<const NodeId> labeled, std::span<const ClassId> labels,
                               std::span<const NodeId> unlabeled, const MaskKey& key, double lambda,
                               GradientSet& grads);

ModelMeta model_meta(const TrainConfig& config);

struct TrainResult {
  MlpModel model;
  ModelMeta meta;
  TrainLog log;
};

// A prebuilt panel may be passed in; it must contain rows for L and U'.
TrainResult train(const TrainConfig& config, const Dataset& data, const SparsifiedPanel* panel = nullptr);

// Nodes that need panel rows for a run: L plus the sampled U'.
std::vector<NodeId> panel_nodes(const TrainConfig& config, const LabelTable& labels);

struct Predictions {
  std::vector<NodeId> nodes;
  DenseMatrix probs;
  std::vector<ClassId> classes;

  // "node\tclass\tp0 p1 ..." per line
  std::string to_tsv() const;
  void write_tsv(const std::filesystem::path& path) const;
};

Predictions read_predictions(const std::filesystem::path& path);
Predictions parse_predictions(std::string_view text, const std::string& source = "<memory>");

// Propagated inference input for every node: (1 - delta) sum_n w_n P^n X,
// or the same over H = X W0 in embed mode.
DenseMatrix inference_inputs(const MlpModel& model, const ModelMeta& meta, const CsrGraph& graph,
                             const FeatureMatrix& features, bool renorm_ppr = false, std::size_t workers = 1);

Predictions infer(const MlpModel& model, const ModelMeta& meta, const CsrGraph& graph, const FeatureMatrix& features,
                  std::span<const NodeId> nodes, bool renorm_ppr = false, std::size_t workers = 1);

// Fraction of split nodes whose argmax matches the label.
double evaluate(const Predictions& preds, const LabelTable& labels, std::span<const NodeId> split);

}  // namespace mixprop
