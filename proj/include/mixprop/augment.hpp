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

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mixprop/dense.hpp"
#include "mixprop/error.hpp"
#include "mixprop/features.hpp"
#include "mixprop/pushprop.hpp"

namespace mixprop {

// Anything that can add a scaled node row into an output buffer.
template <typename T>
concept RowSource = requires(const T& t, NodeId v, double a, std::span<double> out) {
  { t.accumulate_row(v, a, out) };
};

// Dense rows for a subset of nodes, e.g. hidden representations H_v for the
// neighborhoods touched by one batch.
class GatheredRows {
 public:
  GatheredRows() = default;
  GatheredRows(std::vector<NodeId> nodes, std::size_t dim);

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::size_t dim() const noexcept { return values_.cols(); }
  bool contains(NodeId v) const noexcept;
  std::size_t slot(NodeId v) const;  // throws InputError if absent

  DenseMatrix& values() noexcept { return values_; }
  const DenseMatrix& values() const noexcept { return values_; }

  void accumulate_row(NodeId v, double a, std::span<double> out) const;

 private:
  std::vector<NodeId> nodes_;
  DenseMatrix values_;
};

// Distinct node ids reached by the panel rows of `batch`, ascending.
std::vector<NodeId> neighborhood_union(const SparsifiedPanel& panel, std::span<const NodeId> batch);

// keep[i] == 1 keeps the i-th entry of the row it was drawn for.
struct DropMask {
  std::vector<std::uint8_t> keep;
  friend bool operator==(const DropMask&, const DropMask&) = default;
};

enum class MaskScope {
  per_row,  // independent z_v for every (source, augmentation)
  shared,   // one z_v per (augmentation, node) shared by all rows of a step
};

// Keyed Bernoulli(1 - delta) draws: z depends only on (seed, step, m, source
// unless shared, neighbor id), so masks are reproducible and independent of
// evaluation order.
struct MaskKey {
  std::uint64_t seed = 0;
  std::uint64_t step = 0;
};

DropMask sample_mask(const SparseRowVector& row, double delta, const MaskKey& key, NodeId source,
                     std::uint32_t augmentation, MaskScope scope = MaskScope::per_row);

inline DropMask full_mask(const SparseRowVector& row) { return DropMask{std::vector<std::uint8_t>(row.nnz(), 1)}; }

// out += sum over kept v of Pi(s, v) * X_v. Returns element updates performed.
template <RowSource Rows>
std::uint64_t random_propagate_row_into(const SparseRowVector& row, const Rows& rows, const DropMask& mask,
                                        std::span<double> out) {
  if (mask.keep.size() != row.nnz()) throw InputError("mask does not cover the panel row");
  std::uint64_t work = 0;
  const auto entries = row.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!mask.keep[i]) continue;
    rows.accumulate_row(entries[i].index, entries[i].mass, out);
    work += out.size();
  }
  return work;
}

template <RowSource Rows>
std::vector<double> random_propagate_row(const SparseRowVector& row, const Rows& rows, std::size_t dim,
                                         const DropMask& mask) {
  std::vector<double> out(dim, 0.0);
  random_propagate_row_into(row, rows, mask, out);
  return out;
}

struct AugmentedBatch {
  std::vector<NodeId> nodes;
  std::vector<DenseMatrix> features;          // [m] -> b x d
  std::vector<std::vector<DropMask>> masks;   // [m][i]
  std::uint64_t work = 0;                     // element updates over all (s, m)

  std::size_t copies() const noexcept { return features.size(); }
};

struct AugmentOptions {
  double delta = 0.5;
  std::uint32_t copies = 2;
  MaskScope scope = MaskScope::per_row;
};

void validate_augment_options(const AugmentOptions& opts);

template <RowSource Rows>
AugmentedBatch random_propagate_batch(const SparsifiedPanel& panel, const Rows& rows, std::size_t dim,
                                      std::span<const NodeId> batch, const AugmentOptions& opts, const MaskKey& key) {
  validate_augment_options(opts);
  AugmentedBatch out;
  out.nodes.assign(batch.begin(), batch.end());
  std::vector<const SparseRowVector*> panel_rows;
  panel_rows.reserve(batch.size());
  for (NodeId s : batch) panel_rows.push_back(&panel.at(s));

  out.features.reserve(opts.copies);
  out.masks.resize(opts.copies);
  for (std::uint32_t m = 0; m < opts.copies; ++m) {
    DenseMatrix feats(batch.size(), dim);
    out.masks[m].reserve(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
      DropMask mask = sample_mask(*panel_rows[i], opts.delta, key, batch[i], m, opts.scope);
      out.work += random_propagate_row_into(*panel_rows[i], rows, mask, feats.row(i));
      out.masks[m].push_back(std::move(mask));
    }
    out.features.push_back(std::move(feats));
  }
  return out;
}

// Gradient of the linear scatter w.r.t. each kept neighbor representation:
// contribution_v = Pi(s, v) * grad_out. Returned in row order.
std::vector<std::pair<NodeId, std::vector<double>>> backprop_propagate(const SparseRowVector& row,
                                                                       const DropMask& mask,
                                                                       std::span<const double> grad_out);

// Same, accumulated into `grads` (rows for every kept neighbor must exist).
void backprop_propagate_into(const SparseRowVector& row, const DropMask& mask, std::span<const double> grad_out,
                             GatheredRows& grads);

// sum_n w_n P^n (scale * X) by power iteration. Rows are split across
// `workers` threads; results do not depend on the split.
DenseMatrix deterministic_propagate(const CsrGraph& graph, const DenseMatrix& features,
                                    const PropagationWeights& weights, double scale, std::size_t workers = 1);

inline DenseMatrix deterministic_propagate(const CsrGraph& graph, const FeatureMatrix& features,
                                           const PropagationWeights& weights, double scale, std::size_t workers = 1) {
  return deterministic_propagate(graph, features.to_dense(), weights, scale, workers);
}

}  // namespace mixprop
