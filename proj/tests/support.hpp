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

// Test-only generators and brute-force references.

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "tritime/temporal_count.hpp"
#include "tritime/temporal_graph.hpp"

namespace tritime::testing {

using Triples = std::vector<std::tuple<VertexId, VertexId, Timestamp>>;

struct RandomGraphSpec {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 30;
  std::size_t max_edges = 300;
  Timestamp max_time = 10'000;
  double duplicate_rate = 0.05;  // chance an edge reuses an earlier timestamp
};

inline Triples random_triples(std::mt19937_64& rng, std::size_t n,
                              std::size_t m, Timestamp max_time,
                              double duplicate_rate) {
  std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
  std::uniform_int_distribution<Timestamp> time(0, max_time);
  std::bernoulli_distribution duplicate(duplicate_rate);
  Triples edges;
  edges.reserve(m);
  while (edges.size() < m) {
    VertexId a = vertex(rng);
    VertexId b = vertex(rng);
    if (a == b) continue;
    Timestamp t = time(rng);
    if (!edges.empty() && duplicate(rng)) {
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      t = std::get<2>(edges[pick(rng)]);
    }
    edges.emplace_back(a, b, t);
  }
  return edges;
}

inline TemporalGraph random_temporal_graph(std::mt19937_64& rng,
                                           const RandomGraphSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> nd(spec.min_vertices,
                                                spec.max_vertices);
  const std::size_t n = nd(rng);
  std::uniform_int_distribution<std::size_t> md(0, spec.max_edges);
  const std::size_t m = md(rng);
  auto edges = random_triples(rng, n, m, spec.max_time, spec.duplicate_rate);
  return TemporalGraph::from_edges(n, edges);
}

inline std::vector<Timestamp> random_sequence(std::mt19937_64& rng,
                                              std::size_t size, Timestamp lo,
                                              Timestamp hi) {
  std::uniform_int_distribution<Timestamp> time(lo, hi);
  std::vector<Timestamp> s(size);
  for (auto& t : s) t = time(rng);
  std::sort(s.begin(), s.end());
  return s;
}

// Direct evaluation over s1 x s2 x s3 with strict time order.
inline std::uint64_t triple_loop(TimeSequence s1, TimeSequence s2,
                                 TimeSequence s3, const DeltaTriple& d) {
  std::uint64_t count = 0;
  for (Timestamp t1 : s1) {
    for (Timestamp t2 : s2) {
      if (!(t1 < t2) || t2 - t1 > d.d12) continue;
      for (Timestamp t3 : s3) {
        if (t2 < t3 && t3 - t2 <= d.d23 && t3 - t1 <= d.d13) ++count;
      }
    }
  }
  return count;
}

// Strictly time-ordered edge triples on static triangles, no delta limits.
// Finds triangles by checking every vertex triple.
inline std::uint64_t ordered_triangle_triples(const TemporalGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::vector<Timestamp>>> on_pair(
      n, std::vector<std::vector<Timestamp>>(n));
  for (const auto& e : g.edges()) {
    on_pair[std::min(e.src, e.dst)][std::max(e.src, e.dst)].push_back(
        e.timestamp);
  }
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (on_pair[a][b].empty()) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        const auto& ab = on_pair[a][b];
        const auto& ac = on_pair[a][c];
        const auto& bc = on_pair[b][c];
        if (ac.empty() || bc.empty()) continue;
        for (Timestamp x : ab) {
          for (Timestamp y : ac) {
            for (Timestamp z : bc) {
              if (x != y && y != z && x != z) ++count;
            }
          }
        }
      }
    }
  }
  return count;
}

inline DeltaTriple random_deltas(std::mt19937_64& rng, Timestamp hi) {
  std::uniform_int_distribution<Timestamp> d(0, hi);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace tritime::testing
