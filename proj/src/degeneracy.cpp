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

#include "tritime/degeneracy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tritime {

DegeneracyOrdering degeneracy_order(const StaticGraph& graph) {
  const std::size_t n = graph.num_vertices();
  DegeneracyOrdering result;
  result.rank.assign(n, 0);
  if (n == 0) return result;

  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = graph.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }

  // One ordered bucket per degree so the smallest id pops first.
  std::vector<std::set<VertexId>> buckets(max_degree + 1);
  for (VertexId v = 0; v < n; ++v) buckets[degree[v]].insert(v);

  std::vector<bool> removed(n, false);
  std::size_t current = 0;
  for (std::size_t step = 0; step < n; ++step) {
    // A removal lowers neighbor degrees by one, so the minimum can drop by
    // at most one per step.
    if (current > 0) --current;
    while (buckets[current].empty()) ++current;

    auto first = buckets[current].begin();
    const VertexId v = *first;
    buckets[current].erase(first);
    removed[v] = true;
    result.rank[v] = step;
    result.kappa = std::max(result.kappa, current);

    for (VertexId w : graph.neighbors(v)) {
      if (removed[w]) continue;
      buckets[degree[w]].erase(w);
      --degree[w];
      buckets[degree[w]].insert(w);
    }
  }
  return result;
}

OrientedGraph::OrientedGraph(const StaticGraph& graph,
                             const DegeneracyOrdering& ordering)
    : graph_(&graph), rank_(ordering.rank) {
  const std::size_t n = graph.num_vertices();
  if (rank_.size() != n) {
    throw std::invalid_argument("ordering computed for a different graph");
  }
  offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    std::size_t out = 0;
    for (VertexId w : graph.neighbors(v)) {
      if (rank_[v] < rank_[w]) ++out;
    }
    offsets_[v + 1] = offsets_[v] + out;
    max_out_degree_ = std::max(max_out_degree_, out);
  }
  out_.resize(offsets_.back());
  for (VertexId v = 0; v < n; ++v) {
    auto* dst = out_.data() + offsets_[v];
    for (VertexId w : graph.neighbors(v)) {
      if (rank_[v] < rank_[w]) *dst++ = w;
    }
    std::sort(out_.data() + offsets_[v], dst,
              [&](VertexId a, VertexId b) { return rank_[a] < rank_[b]; });
  }
}

OrientedGraph orient(const StaticGraph& graph,
                     const DegeneracyOrdering& ordering) {
  return OrientedGraph(graph, ordering);
}

}  // namespace tritime
