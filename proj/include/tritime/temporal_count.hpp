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

#include <array>
#include <cstdint>

#include "tritime/degeneracy.hpp"
#include "tritime/range_count.hpp"
#include "tritime/temporal_graph.hpp"
#include "tritime/triangle_enum.hpp"
#include "tritime/triangle_type.hpp"

namespace tritime {

// Time constraints of a temporal triangle with edge times t1 < t2 < t3:
// t2 - t1 <= d12, t3 - t2 <= d23, t3 - t1 <= d13.
struct DeltaTriple {
  Timestamp d13 = 0;
  Timestamp d12 = 0;
  Timestamp d23 = 0;

  friend bool operator==(const DeltaTriple&, const DeltaTriple&) = default;
};

// Clamps to d12 <= d13, d23 <= d13, d13 <= d12 + d23. The constraints imply
// each clamp, so counts do not change. Throws std::invalid_argument on a
// negative component.
DeltaTriple normalize_deltas(DeltaTriple raw);

// Throws OverflowError instead of wrapping.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

class TypeCounts {
 public:
  std::uint64_t operator[](TypeCode code) const { return counts_[code.value]; }
  std::uint64_t operator[](std::size_t code) const { return counts_[code]; }

  void add(TypeCode code, std::uint64_t value) {
    counts_[code.value] = checked_add(counts_[code.value], value);
  }
  void merge(const TypeCounts& other) {
    for (std::size_t i = 0; i < 8; ++i) {
      counts_[i] = checked_add(counts_[i], other.counts_[i]);
    }
  }

  std::uint64_t total() const;
  std::uint64_t cyclic() const;
  std::uint64_t acyclic() const;

  const std::array<std::uint64_t, 8>& values() const { return counts_; }

  friend bool operator==(const TypeCounts&, const TypeCounts&) = default;

 private:
  std::array<std::uint64_t, 8> counts_{};
};

// Reusable prefix buffers plus the number of timestamps scanned linearly.
struct CountScratch {
  PrefixCounts first;
  PrefixCounts second;
  std::uint64_t scan_touches = 0;
};

// Sequence-level counters. s1, s2, s3 are the ascending timestamps of the
// edges allowed in time positions 1, 2 and 3; each returns the number of
// triples t1 < t2 < t3 satisfying the delta constraints. Deltas are
// normalized internally.
//
// vw3: s3 is the pair opposite the source vertex. Scans s1 and s2.
std::uint64_t count_vw3(TimeSequence s1, TimeSequence s2, TimeSequence s3,
                        const DeltaTriple& deltas, CountScratch& scratch);
// vw2: s2 is the opposite pair. Scans s1 and s3.
std::uint64_t count_vw2(TimeSequence s1, TimeSequence s2, TimeSequence s3,
                        const DeltaTriple& deltas, CountScratch& scratch);
// vw1: s1 is the opposite pair. Scans s2 and s3.
std::uint64_t count_vw1(TimeSequence s1, TimeSequence s2, TimeSequence s3,
                        const DeltaTriple& deltas, CountScratch& scratch);

// Both directions of each pair of a source triangle.
struct TriangleSequences {
  // [role][reversed]
  std::array<std::array<TimeSequence, 2>, 3> by_role;

  static TriangleSequences resolve(const SourceTriangle& tri,
                                   const PairIndex& index);

  TimeSequence get(PairRole role, Orientation rho) const {
    return by_role[static_cast<int>(role)][rho.reversed(role) ? 1 : 0];
  }
};

// Temporal triangles on one static triangle with the given ordering and
// orientation, dispatched on where the opposite pair sits in time.
std::uint64_t count_cell(const TriangleSequences& sequences,
                         const Ordering& ordering, Orientation orientation,
                         const DeltaTriple& deltas, CountScratch& scratch);

std::uint64_t count_cell(const SourceTriangle& tri, const Ordering& ordering,
                         Orientation orientation, const DeltaTriple& deltas,
                         const PairIndex& index, CountScratch& scratch);

struct CountOptions {
  // Workers sharded by source vertex; 0 or 1 runs on the calling thread.
  unsigned threads = 1;
};

struct CountResult {
  TypeCounts types;
  // cells[ordering][orientation], summed over all static triangles.
  std::array<std::array<std::uint64_t, 8>, 6> cells{};
  std::uint64_t static_triangles = 0;
  std::uint64_t scan_touches = 0;
  DeltaTriple deltas;  // normalized values actually used

  void merge(const CountResult& other);
};

// Counts every temporal triangle type over the whole graph.
CountResult count_all(const PairIndex& index, const OrientedGraph& dag,
                      const DeltaTriple& deltas,
                      const CountOptions& options = {});

}  // namespace tritime
