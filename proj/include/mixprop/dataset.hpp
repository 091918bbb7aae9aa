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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixprop/features.hpp"
#include "mixprop/graph.hpp"

namespace mixprop {

using ClassId = std::uint32_t;
using LabelMap = std::map<NodeId, ClassId>;

// Lines "i c". Rejects class >= num_classes and duplicate nodes.
LabelMap load_labels(const std::filesystem::path& path, std::size_t num_classes);
LabelMap parse_labels(std::string_view text, std::size_t num_classes, const std::string& source = "<memory>");

// One node id per line; duplicates rejected. File order is preserved.
std::vector<NodeId> load_split(const std::filesystem::path& path);
std::vector<NodeId> parse_split(std::string_view text, const std::string& source = "<memory>");
void save_split(const std::filesystem::path& path, const std::vector<NodeId>& nodes);

// Largest class id + 1, scanning a labels file without a class bound.
std::size_t infer_num_classes(const std::filesystem::path& path);

class LabelTable {
 public:
  // Validates ids against num_nodes, classes against num_classes, and that
  // the three splits are pairwise disjoint.
  LabelTable(std::size_t num_nodes, std::size_t num_classes, LabelMap labels, std::vector<NodeId> train,
             std::vector<NodeId> valid, std::vector<NodeId> test);

  std::size_t num_nodes() const noexcept { return label_of_.size(); }
  std::size_t num_classes() const noexcept { return num_classes_; }

  std::optional<ClassId> label(NodeId v) const {
    const auto c = label_of_.at(v);
    return c < 0 ? std::nullopt : std::optional<ClassId>(static_cast<ClassId>(c));
  }
  // Throws InputError when v has no label.
  ClassId require_label(NodeId v) const;

  const std::vector<NodeId>& train() const noexcept { return train_; }
  const std::vector<NodeId>& valid() const noexcept { return valid_; }
  const std::vector<NodeId>& test() const noexcept { return test_; }

  // All nodes outside the training split, ascending.
  std::vector<NodeId> unlabeled() const;

 private:
  std::size_t num_classes_;
  std::vector<std::int64_t> label_of_;
  std::vector<NodeId> train_, valid_, test_;
};

// Everything a training run needs, loaded from the text formats.
struct Dataset {
  CsrGraph graph;
  FeatureMatrix features;
  LabelTable labels;
};

struct DatasetPaths {
  std::filesystem::path graph;
  std::filesystem::path features;
  std::filesystem::path labels;
  std::filesystem::path train_split;
  std::filesystem::path valid_split;
  std::filesystem::path test_split;  // optional
};

// num_classes == 0 infers it from the labels file.
Dataset load_dataset(const DatasetPaths& paths, std::size_t num_classes, bool row_normalize);

}  // namespace mixprop
