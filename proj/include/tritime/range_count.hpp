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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tritime/temporal_graph.hpp"

namespace tritime {

// Window endpoints are computed in 128 bits: t + delta never wraps for
// 64-bit inputs.
using TimeBound = __int128;

inline constexpr TimeBound kNegInfinity = -(TimeBound{1} << 100);
inline constexpr TimeBound kPosInfinity = TimeBound{1} << 100;

using TimeSequence = std::span<const Timestamp>;

// Index of the first element >= x.
inline std::size_t first_at_least(TimeSequence s, TimeBound x) {
  return static_cast<std::size_t>(
      std::lower_bound(s.begin(), s.end(), x,
                       [](Timestamp a, TimeBound b) { return a < b; }) -
      s.begin());
}

// Index of the first element > x.
inline std::size_t first_greater(TimeSequence s, TimeBound x) {
  return static_cast<std::size_t>(
      std::upper_bound(s.begin(), s.end(), x,
                       [](TimeBound a, Timestamp b) { return a < b; }) -
      s.begin());
}

struct Interval {
  TimeBound lo = kNegInfinity;
  TimeBound hi = kPosInfinity;
  bool lo_open = false;
  bool hi_open = false;

  static Interval closed(TimeBound a, TimeBound b) { return {a, b, false, false}; }
  static Interval left_open(TimeBound a, TimeBound b) { return {a, b, true, false}; }
  static Interval right_open(TimeBound a, TimeBound b) { return {a, b, false, true}; }
  static Interval open(TimeBound a, TimeBound b) { return {a, b, true, true}; }
  static Interval at_least(TimeBound a) { return {a, kPosInfinity, false, false}; }
  static Interval greater_than(TimeBound a) { return {a, kPosInfinity, true, false}; }
  static Interval at_most(TimeBound b) { return {kNegInfinity, b, false, false}; }
  static Interval less_than(TimeBound b) { return {kNegInfinity, b, false, true}; }

  // Index range [begin, end) of `s` inside the interval; begin <= end.
  std::pair<std::size_t, std::size_t> index_range(TimeSequence s) const {
    const std::size_t begin = lo_open ? first_greater(s, lo) : first_at_least(s, lo);
    const std::size_t end = hi_open ? first_at_least(s, hi) : first_greater(s, hi);
    return {begin, std::max(begin, end)};
  }
};

// Number of timestamps of the sorted sequence inside the interval. An empty
// interval yields 0.
inline std::size_t edge_count(const Interval& window, TimeSequence s) {
  auto [begin, end] = window.index_range(s);
  return end - begin;
}

// Per-element window anchored at a timestamp t:
//   Forward            [t, t+delta]     or (t, t+delta]
//   ForwardUnbounded   [t, inf)         or (t, inf)
//   Backward           [t-delta, t]     or [t-delta, t)
//   BackwardUnbounded  (-inf, t]        or (-inf, t)
// the second form when exclude_anchor is set.
struct Window {
  enum class Kind { Forward, ForwardUnbounded, Backward, BackwardUnbounded };

  Kind kind = Kind::Forward;
  Timestamp delta = 0;
  bool exclude_anchor = false;

  Interval at(Timestamp t) const {
    const TimeBound a = t;
    switch (kind) {
      case Kind::Forward:
        return {a, a + delta, exclude_anchor, false};
      case Kind::ForwardUnbounded:
        return {a, kPosInfinity, exclude_anchor, false};
      case Kind::Backward:
        return {a - delta, a, false, exclude_anchor};
      case Kind::BackwardUnbounded:
        return {kNegInfinity, a, false, exclude_anchor};
    }
    return {};
  }
};

// Cumulative window counts of `target` over prefixes of `source`:
// at(l) = sum over r < l of edge_count(window.at(source[r]), target).
// Buffers are reused across assign() calls.
class PrefixCounts {
 public:
  PrefixCounts() = default;
  PrefixCounts(TimeSequence source, TimeSequence target, const Window& window) {
    assign(source, target, window);
  }

  void assign(TimeSequence source, TimeSequence target, const Window& window) {
    values_.resize(source.size() + 1);
    values_[0] = 0;
    for (std::size_t r = 0; r < source.size(); ++r) {
      values_[r + 1] = values_[r] + edge_count(window.at(source[r]), target);
    }
  }

  std::size_t size() const { return values_.size(); }
  std::uint64_t at(std::size_t l) const { return values_[l]; }

  // Sum over source elements in the 0-based half-open range [begin, end).
  std::uint64_t range(std::size_t begin, std::size_t end) const {
    return end > begin ? values_[end] - values_[begin] : 0;
  }

  std::span<const std::uint64_t> values() const { return values_; }

 private:
  std::vector<std::uint64_t> values_{0};
};

inline PrefixCounts build_prefix(TimeSequence source, TimeSequence target,
                                 const Window& window) {
  return PrefixCounts(source, target, window);
}

}  // namespace tritime
