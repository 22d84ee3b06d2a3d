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

#include "tritime/oracle.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "tritime/error.hpp"

namespace tritime {

namespace {

struct TimedEdge {
  DirectedEdge edge;
  Timestamp time;
};

std::vector<TimedEdge> edges_between(VertexId a, VertexId b,
                                     const PairIndex& index) {
  std::vector<TimedEdge> out;
  for (Timestamp t : index.sequence(a, b)) out.push_back({{a, b}, t});
  for (Timestamp t : index.sequence(b, a)) out.push_back({{b, a}, t});
  return out;
}

std::uint64_t pair_total(VertexId a, VertexId b, const PairIndex& index) {
  return index.multiplicity(a, b) + index.multiplicity(b, a);
}

}  // namespace

TypeCounts oracle_count_triangle(const SourceTriangle& tri,
                                 const DeltaTriple& deltas,
                                 const PairIndex& index) {
  const auto uv = edges_between(tri.u, tri.v, index);
  const auto uw = edges_between(tri.u, tri.w, index);
  const auto vw = edges_between(tri.v, tri.w, index);

  TypeCounts counts;
  for (const auto& x : uv) {
    for (const auto& y : uw) {
      for (const auto& z : vw) {
        std::array<TimedEdge, 3> triple{x, y, z};
        std::sort(triple.begin(), triple.end(),
                  [](const TimedEdge& a, const TimedEdge& b) {
                    return a.time < b.time;
                  });
        const __int128 t1 = triple[0].time;
        const __int128 t2 = triple[1].time;
        const __int128 t3 = triple[2].time;
        if (!(t1 < t2 && t2 < t3)) continue;
        if (t2 - t1 > deltas.d12) continue;
        if (t3 - t2 > deltas.d23) continue;
        if (t3 - t1 > deltas.d13) continue;
        counts.add(type_code_of(triple[0].edge, triple[1].edge, triple[2].edge),
                   1);
      }
    }
  }
  return counts;
}

TypeCounts oracle_count(const PairIndex& index, const OrientedGraph& dag,
                        const DeltaTriple& deltas, std::uint64_t budget) {
  __int128 work = 0;
  enumerate_source_triangles(dag, [&](const SourceTriangle& tri) {
    work += __int128(pair_total(tri.u, tri.v, index)) *
            pair_total(tri.u, tri.w, index) * pair_total(tri.v, tri.w, index);
  });
  if (work > budget) {
    throw BudgetError("oracle work exceeds budget of " +
                      std::to_string(budget) + " edge triples");
  }

  TypeCounts counts;
  enumerate_source_triangles(dag, [&](const SourceTriangle& tri) {
    counts.merge(oracle_count_triangle(tri, deltas, index));
  });
  return counts;
}

}  // namespace tritime
