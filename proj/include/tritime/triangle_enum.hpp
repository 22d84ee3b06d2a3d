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

#include <cstdint>
#include <functional>

#include "tritime/degeneracy.hpp"

namespace tritime {

// A static triangle labeled so that rank(u) < rank(v) < rank(w); u is the
// source vertex.
struct SourceTriangle {
  VertexId u;
  VertexId v;
  VertexId w;

  friend bool operator==(const SourceTriangle&, const SourceTriangle&) = default;
};

// Visits every static triangle once, trying every pair of out-neighbors of
// each vertex. Returns the number of triangles. Sources are restricted to ids
// in [first, last), so disjoint ranges visit disjoint triangle sets.
template <typename Visitor>
std::uint64_t enumerate_source_triangles(const OrientedGraph& dag,
                                         Visitor&& visit, VertexId first,
                                         VertexId last) {
  const StaticGraph& g = dag.static_graph();
  std::uint64_t count = 0;
  for (VertexId u = first; u < last; ++u) {
    auto out = dag.out_neighbors(u);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (g.has_edge(out[i], out[j])) {
          visit(SourceTriangle{u, out[i], out[j]});
          ++count;
        }
      }
    }
  }
  return count;
}

template <typename Visitor>
std::uint64_t enumerate_source_triangles(const OrientedGraph& dag,
                                         Visitor&& visit) {
  return enumerate_source_triangles(dag, std::forward<Visitor>(visit), 0,
                                    static_cast<VertexId>(dag.num_vertices()));
}

inline std::uint64_t count_static_triangles(const OrientedGraph& dag) {
  return enumerate_source_triangles(dag, [](const SourceTriangle&) {});
}

}  // namespace tritime
