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
#include <utility>
#include <vector>

namespace mixprop {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Undirected graph with a self loop on every node, stored as CSR.
// Neighbor lists are sorted ascending and include the node itself once,
// so degree(v) is the self-loop-augmented degree.
class CsrGraph {
 public:
  CsrGraph() = default;

  std::size_t num_nodes() const noexcept { return degrees_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {col_indices_.data() + row_offsets_[v], col_indices_.data() + row_offsets_[v + 1]};
  }
  std::uint32_t degree(NodeId v) const noexcept { return degrees_[v]; }

  std::span<const std::uint64_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const NodeId> col_indices() const noexcept { return col_indices_; }
  std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }

  // Sum of augmented degrees, i.e. 2|E| + |V|.
  std::uint64_t degree_sum() const noexcept { return col_indices_.size(); }
  // Undirected edges excluding self loops.
  std::uint64_t num_edges() const noexcept { return (degree_sum() - num_nodes()) / 2; }

  // Edges (u < v) excluding self loops, in CSR order.
  std::vector<Edge> edge_list() const;

  friend bool operator==(const CsrGraph&, const CsrGraph&) = default;

 private:
  friend CsrGraph build_csr(std::span<const Edge> edges, std::size_t num_nodes);

  std::vector<std::uint64_t> row_offsets_{0};
  std::vector<NodeId> col_indices_;
  std::vector<std::uint32_t> degrees_;
};

// Symmetrizes, removes duplicates and input self loops, then adds one self
// loop per node. Throws InputError on out-of-range ids.
CsrGraph build_csr(std::span<const Edge> edges, std::size_t num_nodes);

struct EdgeListFile {
  std::vector<Edge> edges;
  std::size_t num_nodes = 0;
};

// "u<TAB>v" per line (any whitespace accepted), optional leading "#nodes N".
EdgeListFile load_edge_list(const std::filesystem::path& path);
EdgeListFile parse_edge_list(std::string_view text, const std::string& source = "<memory>");
void save_edge_list(const std::filesystem::path& path, const CsrGraph& graph);

}  // namespace mixprop
