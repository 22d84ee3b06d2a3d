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

#include "tritime/temporal_count.hpp"

namespace tritime {

// Brute-force reference: tries every combination of one temporal edge per
// pair of the triangle (both directions), keeps strictly time-ordered
// triples that meet the raw delta constraints, and classifies them.
// Shares no range-counting code with count_all.
TypeCounts oracle_count_triangle(const SourceTriangle& tri,
                                 const DeltaTriple& deltas,
                                 const PairIndex& index);

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000'000;

// Sum of oracle_count_triangle over all static triangles. Throws BudgetError
// before doing any work when the summed edge-triple product exceeds `budget`.
TypeCounts oracle_count(const PairIndex& index, const OrientedGraph& dag,
                        const DeltaTriple& deltas,
                        std::uint64_t budget = kDefaultOracleBudget);

}  // namespace tritime
