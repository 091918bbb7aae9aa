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
#include <span>
#include <string_view>
#include <vector>

#include "mixprop/dense.hpp"
#include "mixprop/graph.hpp"

namespace mixprop {

struct FeatureEntry {
  std::uint32_t index;
  double value;
  friend bool operator==(const FeatureEntry&, const FeatureEntry&) = default;
};

// Node feature matrix. Stored sparse (CSR) when density is below 25% and
// dense otherwise; callers only see the row-access interface.
class FeatureMatrix {
 public:
  static constexpr double kSparseDensityThreshold = 0.25;

  FeatureMatrix() = default;

  // Rows of (feature index, value), indices strictly increasing per row.
  static FeatureMatrix from_sparse_rows(std::size_t num_features, std::vector<std::vector<FeatureEntry>> rows);
  static FeatureMatrix from_dense(DenseMatrix dense);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t num_features() const noexcept { return num_features_; }
  bool is_sparse() const noexcept { return sparse_; }
  std::size_t nnz() const noexcept;

  // out += a * X[v]
  void accumulate_row(NodeId v, double a, std::span<double> out) const;

  // Calls fn(feature, value) for the nonzeros of row v.
  template <typename Fn>
  void for_each_in_row(NodeId v, Fn&& fn) const {
    if (sparse_) {
      for (std::uint64_t i = offsets_[v]; i < offsets_[v + 1]; ++i) fn(entries_[i].index, entries_[i].value);
    } else {
      auto row = dense_.row(v);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0.0) fn(static_cast<std::uint32_t>(j), row[j]);
      }
    }
  }

  DenseMatrix to_dense() const;

  // Each nonzero row scaled to unit L1 norm; zero rows unchanged.
  FeatureMatrix row_normalized() const;

  friend bool operator==(const FeatureMatrix& a, const FeatureMatrix& b);

 private:
  std::size_t num_nodes_ = 0;
  std::size_t num_features_ = 0;
  bool sparse_ = true;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<FeatureEntry> entries_;
  DenseMatrix dense_;
};

// Header "N d" then "i j v" triples. Rejects out-of-range and duplicate (i, j).
FeatureMatrix load_sparse_features(const std::filesystem::path& path);
FeatureMatrix parse_sparse_features(std::string_view text, const std::string& source = "<memory>");
void save_sparse_features(const std::filesystem::path& path, const FeatureMatrix& features);

inline FeatureMatrix row_normalize_features(const FeatureMatrix& features) { return features.row_normalized(); }

}  // namespace mixprop
