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

#include "tritime/temporal_count.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "tritime/error.hpp"

namespace tritime {

DeltaTriple normalize_deltas(DeltaTriple raw) {
  if (raw.d13 < 0 || raw.d12 < 0 || raw.d23 < 0) {
    throw std::invalid_argument("delta components must be non-negative");
  }
  DeltaTriple d;
  d.d12 = std::min(raw.d12, raw.d13);
  d.d23 = std::min(raw.d23, raw.d13);
  const TimeBound sum = TimeBound{d.d12} + d.d23;
  d.d13 = static_cast<Timestamp>(std::min<TimeBound>(raw.d13, sum));
  return d;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw OverflowError("64-bit temporal triangle counter overflow");
  }
  return a + b;
}

std::uint64_t TypeCounts::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts_) sum = checked_add(sum, c);
  return sum;
}

std::uint64_t TypeCounts::cyclic() const {
  return checked_add(counts_[0b001], counts_[0b110]);
}

std::uint64_t TypeCounts::acyclic() const {
  std::uint64_t sum = 0;
  for (std::uint8_t i = 0; i < 8; ++i) {
    if (!TypeCode{i}.cyclic()) sum = checked_add(sum, counts_[i]);
  }
  return sum;
}

namespace {

using Wide = __int128;

std::uint64_t narrow(Wide total) {
  if (total < 0 || total > Wide{std::numeric_limits<std::uint64_t>::max()}) {
    throw OverflowError("per-cell temporal triangle count out of range");
  }
  return static_cast<std::uint64_t>(total);
}

std::size_t at_least(std::size_t x, std::size_t floor) {
  return std::max(x, floor);
}

}  // namespace

std::uint64_t count_vw3(TimeSequence s1, TimeSequence s2, TimeSequence s3,
                        const DeltaTriple& deltas, CountScratch& scratch) {
  if (s1.empty() || s2.empty() || s3.empty()) return 0;
  const DeltaTriple d = normalize_deltas(deltas);
  auto& forward = scratch.first;
  auto& unbounded = scratch.second;
  forward.assign(s1, s3, {Window::Kind::Forward, d.d13, false});
  unbounded.assign(s1, s3, {Window::Kind::ForwardUnbounded, 0, false});
  scratch.scan_touches += s1.size() + s2.size();

  Wide total = 0;
  for (const Timestamp t2 : s2) {
    const TimeBound t = t2;
    // e1 candidates: t1 in [t2 - d12, t2).
    const std::size_t first = first_at_least(s1, t - d.d12);
    const std::size_t last = at_least(first_at_least(s1, t), first);
    // Up to `split`, t1 + d13 <= t2 + d23 bounds e3; past it, t2 + d23 does.
    const std::size_t split = std::clamp(
        first_greater(s1, t - d.d13 + d.d23), first, last);

    // sum of |(t2, t1 + d13]| = |[t1, t1 + d13]| - |[t1, inf)| + |(t2, inf)|
    total += Wide(forward.range(first, split)) -
             Wide(unbounded.range(first, split)) +
             Wide(split - first) * edge_count(Interval::greater_than(t), s3);
    total += Wide(last - split) *
             edge_count(Interval::left_open(t, t + d.d23), s3);
  }
  return narrow(total);
}

std::uint64_t count_vw2(TimeSequence s1, TimeSequence s2, TimeSequence s3,
                        const DeltaTriple& deltas, CountScratch& scratch) {
  if (s1.empty() || s2.empty() || s3.empty()) return 0;
  const DeltaTriple d = normalize_deltas(deltas);
  auto& recent = scratch.first;     // |[t3 - d23, t3)| in s2
  auto& earlier = scratch.second;   // |(-inf, t3)| in s2
  recent.assign(s3, s2, {Window::Kind::Backward, d.d23, true});
  earlier.assign(s3, s2, {Window::Kind::BackwardUnbounded, 0, true});
  scratch.scan_touches += s1.size() + s3.size();

  const Timestamp low_gap = std::min(d.d12, d.d23);
  const Timestamp high_gap = std::max(d.d12, d.d23);

  Wide total = 0;
  for (const Timestamp t1 : s1) {
    const TimeBound t = t1;
    // e3 candidates t3 in (t1, t1 + d13] split at t1 + low_gap and
    // t1 + high_gap.
    const std::size_t first = first_greater(s3, t);
    const std::size_t low_end = at_least(first_greater(s3, t + low_gap), first);
    const std::size_t mid_end =
        at_least(first_greater(s3, t + high_gap), low_end);
    const std::size_t last = at_least(first_greater(s3, t + d.d13), mid_end);

    // t2 in (t1, t3)
    total += Wide(earlier.range(first, low_end)) -
             Wide(low_end - first) * edge_count(Interval::at_most(t), s2);

    if (d.d12 <= d.d23) {
      // t2 in (t1, t1 + d12]
      total += Wide(mid_end - low_end) *
               edge_count(Interval::left_open(t, t + d.d12), s2);
    } else {
      // t2 in [t3 - d23, t3)
      total += Wide(recent.range(low_end, mid_end));
    }

    // t2 in [t3 - d23, t1 + d12]
    total += Wide(recent.range(mid_end, last)) -
             Wide(earlier.range(mid_end, last)) +
             Wide(last - mid_end) * edge_count(Interval::at_most(t + d.d12), s2);
  }
  return narrow(total);
}

std::uint64_t count_vw1(TimeSequence s1, TimeSequence s2, TimeSequence s3,
                        const DeltaTriple& deltas, CountScratch& scratch) {
  if (s1.empty() || s2.empty() || s3.empty()) return 0;
  const DeltaTriple d = normalize_deltas(deltas);
  auto& window = scratch.first;     // |[t3 - d13, t3]| in s1
  auto& unbounded = scratch.second; // |(-inf, t3]| in s1
  window.assign(s3, s1, {Window::Kind::Backward, d.d13, false});
  unbounded.assign(s3, s1, {Window::Kind::BackwardUnbounded, 0, false});
  scratch.scan_touches += s2.size() + s3.size();

  Wide total = 0;
  for (const Timestamp t2 : s2) {
    const TimeBound t = t2;
    // e3 candidates t3 in (t2, t2 + d23]; below t2 + d13 - d12 the d12 gap
    // binds e1, above it the d13 span does.
    const std::size_t first = first_greater(s3, t);
    const std::size_t split =
        at_least(first_greater(s3, t + d.d13 - d.d12), first);
    const std::size_t last = at_least(first_greater(s3, t + d.d23), split);

    // t1 in [t2 - d12, t2)
    total += Wide(split - first) *
             edge_count(Interval::right_open(t - d.d12, t), s1);
    // t1 in [t3 - d13, t2)
    total += Wide(window.range(split, last)) -
             Wide(unbounded.range(split, last)) +
             Wide(last - split) * edge_count(Interval::less_than(t), s1);
  }
  return narrow(total);
}

TriangleSequences TriangleSequences::resolve(const SourceTriangle& tri,
                                             const PairIndex& index) {
  TriangleSequences s;
  s.by_role[static_cast<int>(PairRole::UV)] = {index.sequence(tri.u, tri.v),
                                               index.sequence(tri.v, tri.u)};
  s.by_role[static_cast<int>(PairRole::UW)] = {index.sequence(tri.u, tri.w),
                                               index.sequence(tri.w, tri.u)};
  s.by_role[static_cast<int>(PairRole::VW)] = {index.sequence(tri.v, tri.w),
                                               index.sequence(tri.w, tri.v)};
  return s;
}

std::uint64_t count_cell(const TriangleSequences& sequences,
                         const Ordering& ordering, Orientation orientation,
                         const DeltaTriple& deltas, CountScratch& scratch) {
  const TimeSequence s1 = sequences.get(ordering.at(0), orientation);
  const TimeSequence s2 = sequences.get(ordering.at(1), orientation);
  const TimeSequence s3 = sequences.get(ordering.at(2), orientation);
  if (s1.empty() || s2.empty() || s3.empty()) return 0;
  switch (ordering.position_of(PairRole::VW)) {
    case 2:
      return count_vw3(s1, s2, s3, deltas, scratch);
    case 1:
      return count_vw2(s1, s2, s3, deltas, scratch);
    default:
      return count_vw1(s1, s2, s3, deltas, scratch);
  }
}

std::uint64_t count_cell(const SourceTriangle& tri, const Ordering& ordering,
                         Orientation orientation, const DeltaTriple& deltas,
                         const PairIndex& index, CountScratch& scratch) {
  return count_cell(TriangleSequences::resolve(tri, index), ordering,
                    orientation, deltas, scratch);
}

void CountResult::merge(const CountResult& other) {
  types.merge(other.types);
  for (std::size_t p = 0; p < 6; ++p) {
    for (std::size_t r = 0; r < 8; ++r) {
      cells[p][r] = checked_add(cells[p][r], other.cells[p][r]);
    }
  }
  static_triangles = checked_add(static_triangles, other.static_triangles);
  scan_touches = checked_add(scan_touches, other.scan_touches);
}

namespace {

void count_range(const PairIndex& index, const OrientedGraph& dag,
                 const DeltaTriple& deltas, VertexId first, VertexId last,
                 CountScratch& scratch, CountResult& result) {
  const ClassificationTable& table = classification_table();
  result.static_triangles += enumerate_source_triangles(
      dag,
      [&](const SourceTriangle& tri) {
        const auto sequences = TriangleSequences::resolve(tri, index);
        for (const Ordering& pi : kOrderings) {
          for (std::uint8_t code = 0; code < 8; ++code) {
            const std::uint64_t c =
                count_cell(sequences, pi, Orientation{code}, deltas, scratch);
            if (c == 0) continue;
            result.cells[pi.index][code] =
                checked_add(result.cells[pi.index][code], c);
            result.types.add(table[pi.index][code], c);
          }
        }
      },
      first, last);
  result.scan_touches = scratch.scan_touches;
}

}  // namespace

CountResult count_all(const PairIndex& index, const OrientedGraph& dag,
                      const DeltaTriple& deltas, const CountOptions& options) {
  const DeltaTriple d = normalize_deltas(deltas);
  const auto n = static_cast<VertexId>(dag.num_vertices());

  CountResult result;
  result.deltas = d;
  if (options.threads <= 1 || n < 2) {
    CountScratch scratch;
    count_range(index, dag, d, 0, n, scratch, result);
    result.deltas = d;
    return result;
  }

  // Small chunks handed out dynamically; triangle work is highly skewed.
  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::vector<CountResult> partial(options.threads);
  std::vector<std::exception_ptr> errors(options.threads);
  std::vector<std::thread> workers;
  workers.reserve(options.threads);
  for (unsigned t = 0; t < options.threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        CountScratch scratch;
        while (true) {
          const std::uint64_t begin = next.fetch_add(kChunk);
          if (begin >= n) break;
          const std::uint64_t end = std::min<std::uint64_t>(n, begin + kChunk);
          CountResult chunk;
          count_range(index, dag, d, static_cast<VertexId>(begin),
                      static_cast<VertexId>(end), scratch, chunk);
          chunk.scan_touches = 0;
          partial[t].merge(chunk);
        }
        partial[t].scan_touches = scratch.scan_touches;
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& p : partial) result.merge(p);
  result.deltas = d;
  return result;
}

}  // namespace tritime
