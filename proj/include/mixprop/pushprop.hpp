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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixprop/graph.hpp"

namespace mixprop {

// Mixed-order propagation: Pi = sum_n w_n P^n with P = D^-1 A (self loops included).
enum class Scheme : std::uint8_t { ppr = 0, avg = 1, single = 2 };

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);

struct PropagationWeights {
  Scheme scheme = Scheme::ppr;
  double alpha = 0.0;  // teleport probability, ppr only
  std::uint32_t order = 0;
  std::vector<double> w;  // w_0 .. w_order
};

// ppr: w_n = alpha (1-alpha)^n, optionally renormalized to sum 1.
// avg: w_n = 1/(N+1).  single: w_N = 1.
PropagationWeights weights_for(Scheme scheme, std::uint32_t order, std::optional<double> alpha = std::nullopt,
                               bool renormalize_ppr = false);

struct SparseEntry {
  NodeId index;
  double mass;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Sparse nonnegative vector over node ids, entries sorted by index.
class SparseRowVector {
 public:
  SparseRowVector() = default;
  // Sorts by index; rejects duplicates, negative or non-finite masses.
  static SparseRowVector from_entries(std::vector<SparseEntry> entries);

  std::span<const SparseEntry> entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  double mass_at(NodeId v) const noexcept;
  double l1() const noexcept;
  std::vector<double> to_dense(std::size_t n) const;

  friend bool operator==(const SparseRowVector&, const SparseRowVector&) = default;

 private:
  friend class PushWorkspace;
  std::vector<SparseEntry> entries_;
};

enum class PushMode { production, trace };

struct PushStats {
  // Index n-1 holds step n: neighbor updates (sum of pushed degrees) and pushes.
  std::vector<std::uint64_t> neighbor_updates;
  std::vector<std::uint64_t> pushes;
};

struct PushResult {
  SparseRowVector pi;
  // Trace mode only: reserves q(0..N) and final residues r(0..N).
  std::vector<SparseRowVector> reserves;
  std::vector<SparseRowVector> residues;
  PushStats stats;
};

// Reusable scratch for generalized forward push. Holds O(|V|) dense buffers
// but touches only the entries a push reaches, so per-row cost is local.
class PushWorkspace {
 public:
  explicit PushWorkspace(std::size_t num_nodes);

  PushResult run(const CsrGraph& graph, NodeId source, const PropagationWeights& weights, double r_max,
                 PushMode mode = PushMode::production);

 private:
  struct Buffer {
    std::vector<double> mass;
    std::vector<NodeId> touched;
    std::vector<std::uint8_t> marked;
    void add(NodeId v, double x);
    void clear();
    SparseRowVector snapshot() const;
  };
  Buffer current_, next_, accum_;
};

PushResult gfpush(const CsrGraph& graph, NodeId source, const PropagationWeights& weights, double r_max,
                  PushMode mode = PushMode::production);

// Keeps the k largest masses (ties to the smaller id).
SparseRowVector top_k_sparsify(const SparseRowVector& vec, std::size_t k);

// N * (2|E| + |V|) * r_max
double error_bound(const CsrGraph& graph, const PropagationWeights& weights, double r_max);

struct PanelParams {
  Scheme scheme = Scheme::ppr;
  double alpha = 0.0;
  std::uint32_t order = 0;
  double r_max = 0.0;
  std::uint32_t k = 0;
  friend bool operator==(const PanelParams&, const PanelParams&) = default;
};

// Sparsified rows of Pi for a node set, keyed by source id (ascending).
class SparsifiedPanel {
 public:
  SparsifiedPanel() = default;
  SparsifiedPanel(PanelParams params, std::vector<NodeId> sources, std::vector<SparseRowVector> rows);

  const PanelParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return sources_.size(); }
  std::span<const NodeId> sources() const noexcept { return sources_; }
  std::span<const SparseRowVector> rows() const noexcept { return rows_; }

  const SparseRowVector* find(NodeId source) const noexcept;
  // Throws InputError when the source has no row.
  const SparseRowVector& at(NodeId source) const;

  friend bool operator==(const SparsifiedPanel&, const SparsifiedPanel&) = default;

 private:
  PanelParams params_;
  std::vector<NodeId> sources_;
  std::vector<SparseRowVector> rows_;
};

// Approximates and sparsifies every row in `nodes` (deduplicated) with a
// pool of `workers` threads. Output does not depend on the worker count.
SparsifiedPanel build_panel(const CsrGraph& graph, std::span<const NodeId> nodes, const PropagationWeights& weights,
                            double r_max, std::size_t k, std::size_t workers);

// "GPNL" binary format, little-endian.
std::string encode_panel(const SparsifiedPanel& panel);
SparsifiedPanel decode_panel(std::string_view bytes, const std::string& source = "<memory>");
void write_panel(const std::filesystem::path& path, const SparsifiedPanel& panel);
SparsifiedPanel read_panel(const std::filesystem::path& path);

}  // namespace mixprop
