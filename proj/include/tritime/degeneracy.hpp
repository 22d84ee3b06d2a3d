// Copyright 2026 The tritime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tritime/temporal_graph.hpp"

namespace tritime {

// Removal order of min-degree peeling. rank[v] is the 0-based position at
// which v was removed; kappa is the largest degree seen at removal time.
struct DegeneracyOrdering {
  std::vector<std::size_t> rank;
  std::size_t kappa = 0;
};

// Repeatedly removes a minimum-degree vertex, ties going to the smallest id.
DegeneracyOrdering degeneracy_order(const StaticGraph& graph);

// The static graph with each edge directed from lower to higher rank.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  OrientedGraph(const StaticGraph& graph, const DegeneracyOrdering& ordering);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return out_.size(); }

  // Out-neighbors sorted by ascending rank.
  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_.data() + offsets_[v], out_.data() + offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  std::size_t max_out_degree() const { return max_out_degree_; }

  std::size_t rank(VertexId v) const { return rank_[v]; }
  std::span<const std::size_t> ranks() const { return rank_; }

  // Membership oracle for the undirected edge set.
  const StaticGraph& static_graph() const { return *graph_; }

 private:
  const StaticGraph* graph_ = nullptr;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> out_;
  std::vector<std::size_t> rank_;
  std::size_t max_out_degree_ = 0;
};

// `graph` must outlive the returned OrientedGraph.
OrientedGraph orient(const StaticGraph& graph,
                     const DegeneracyOrdering& ordering);

}  // namespace tritime
