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
#include <string>

#include "tritime/temporal_graph.hpp"

namespace tritime {

// The three vertex pairs of a source triangle <u, v, w>.
enum class PairRole : std::uint8_t { UV = 0, UW = 1, VW = 2 };

// Temporal ordering: which pair carries the first, second and third edge.
// Indices 0..5; 0 and 1 put VW last, 2 and 3 put VW second, 4 and 5 put VW
// first, and even indices place UV before UW.
struct Ordering {
  std::uint8_t index = 0;
  std::array<PairRole, 3> roles{PairRole::UV, PairRole::UW, PairRole::VW};

  PairRole at(int position) const { return roles[position]; }
  int position_of(PairRole role) const {
    for (int i = 0; i < 3; ++i) {
      if (roles[i] == role) return i;
    }
    return -1;
  }

  friend bool operator==(const Ordering&, const Ordering&) = default;
};

inline constexpr std::array<Ordering, 6> kOrderings = {{
    {0, {PairRole::UV, PairRole::UW, PairRole::VW}},
    {1, {PairRole::UW, PairRole::UV, PairRole::VW}},
    {2, {PairRole::UV, PairRole::VW, PairRole::UW}},
    {3, {PairRole::UW, PairRole::VW, PairRole::UV}},
    {4, {PairRole::VW, PairRole::UV, PairRole::UW}},
    {5, {PairRole::VW, PairRole::UW, PairRole::UV}},
}};

// Orientation: one bit per pair role (bit 0 UV, bit 1 UW, bit 2 VW). A clear
// bit directs the pair from its lower-rank to its higher-rank vertex
// (u->v, u->w, v->w).
struct Orientation {
  std::uint8_t code = 0;

  bool reversed(PairRole role) const {
    return (code >> static_cast<int>(role)) & 1u;
  }
  // u->v->w->u and its reverse.
  bool cyclic() const { return code == 0b010 || code == 0b101; }

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Canonical directed temporal triangle type. With time-ordered edges
// e1 = (a -> b), e2, e3 and c the vertex not on e1:
//   bit 2: e2 lies on {a, c}
//   bit 1: e2 leaves c
//   bit 0: e3 leaves c
// Codes 0b001 and 0b110 are the two directed 3-cycles.
struct TypeCode {
  std::uint8_t value = 0;

  bool cyclic() const { return value == 0b001 || value == 0b110; }
  // "type<value>_cyclic" or "type<value>_acyclic".
  std::string name() const;

  friend bool operator==(const TypeCode&, const TypeCode&) = default;
};

struct DirectedEdge {
  VertexId from;
  VertexId to;
};

// Type of three time-ordered edges covering the three pairs of a triangle.
// Throws std::invalid_argument when they do not.
TypeCode type_code_of(DirectedEdge e1, DirectedEdge e2, DirectedEdge e3);

using ClassificationTable = std::array<std::array<TypeCode, 8>, 6>;

// table[ordering.index][orientation.code], built once on first use.
const ClassificationTable& classification_table();

inline TypeCode classify(const Ordering& ordering, Orientation orientation) {
  return classification_table()[ordering.index][orientation.code];
}

}  // namespace tritime
