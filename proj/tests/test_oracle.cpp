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

#include "doctest.h"
#include "support.hpp"
#include "tritime/dataset.hpp"
#include "tritime/error.hpp"
#include "tritime/oracle.hpp"

using namespace tritime;

TEST_CASE("oracle on a single triangle") {
  Dataset data(TemporalGraph::from_edges(3, testing::Triples{{0, 1, 10}, {0, 2, 15}, {1, 2, 20}}));
  SourceTriangle tri{};
  enumerate_source_triangles(data.dag(), [&](const SourceTriangle& t) { tri = t; });
  CHECK(oracle_count_triangle(tri, {15, 10, 10}, data.index()).total() == 1);
  CHECK(oracle_count_triangle(tri, {9, 10, 10}, data.index()).total() == 0);
  CHECK(oracle_count(data.index(), data.dag(), {15, 10, 10}) ==
        oracle_count_triangle(tri, {15, 10, 10}, data.index()));
  // 0->1, 0->2, 1->2: e2 on {a,c} leaving a, e3 entering c.
  CHECK(oracle_count(data.index(), data.dag(), {15, 10, 10})[0b100] == 1);
}

TEST_CASE("oracle on an empty graph") {
  Dataset data(TemporalGraph{});
  CHECK(oracle_count(data.index(), data.dag(), {10, 10, 10}).total() == 0);
}

TEST_CASE("oracle triple count stays within the cross product") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    testing::Triples edges;
    std::uniform_int_distribution<Timestamp> time(0, 50);
    const VertexId pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto& p : pairs) {
      for (int k = 0; k < 3; ++k) {
        const bool flip = rng() & 1;
        edges.emplace_back(flip ? p[1] : p[0], flip ? p[0] : p[1], time(rng));
      }
    }
    Dataset data(TemporalGraph::from_edges(3, edges));
    SourceTriangle tri{};
    enumerate_source_triangles(data.dag(), [&](const SourceTriangle& t) { tri = t; });
    const DeltaTriple d = testing::random_deltas(rng, 50);
    const auto counts = oracle_count_triangle(tri, d, data.index());
    CHECK(counts.total() <= 27);

    // Hand triple loop over the raw edge list.
    std::uint64_t expected = 0;
    for (auto& x : edges)
      for (auto& y : edges)
        for (auto& z : edges) {
          auto key = [](auto& e) {
            const VertexId a = std::get<0>(e), b = std::get<1>(e);
            return std::pair<VertexId, VertexId>(std::min(a, b), std::max(a, b));
          };
          if (key(x) != std::pair<VertexId, VertexId>{0, 1} ||
              key(y) != std::pair<VertexId, VertexId>{0, 2} ||
              key(z) != std::pair<VertexId, VertexId>{1, 2})
            continue;
          std::array<Timestamp, 3> t{std::get<2>(x), std::get<2>(y), std::get<2>(z)};
          std::sort(t.begin(), t.end());
          if (t[0] < t[1] && t[1] < t[2] && t[1] - t[0] <= d.d12 && t[2] - t[1] <= d.d23 &&
              t[2] - t[0] <= d.d13)
            ++expected;
        }
    CHECK(counts.total() == expected);
  }
}

TEST_CASE("oracle refuses over-budget inputs") {
  testing::Triples edges;
  for (int k = 0; k < 10; ++k) {
    edges.emplace_back(0, 1, k);
    edges.emplace_back(0, 2, k);
    edges.emplace_back(1, 2, k);
  }
  Dataset data(TemporalGraph::from_edges(3, edges));
  CHECK_NOTHROW(oracle_count(data.index(), data.dag(), {5, 5, 5}, 1000));
  CHECK_THROWS_AS(oracle_count(data.index(), data.dag(), {5, 5, 5}, 999), BudgetError);
}
