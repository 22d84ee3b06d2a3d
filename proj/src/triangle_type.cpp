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

#include "tritime/triangle_type.hpp"

#include <stdexcept>

namespace tritime {

std::string TypeCode::name() const {
  return "type" + std::to_string(value) + (cyclic() ? "_cyclic" : "_acyclic");
}

namespace {

bool touches(DirectedEdge e, VertexId x) { return e.from == x || e.to == x; }

bool same_pair(DirectedEdge e, VertexId x, VertexId y) {
  return (e.from == x && e.to == y) || (e.from == y && e.to == x);
}

}  // namespace

TypeCode type_code_of(DirectedEdge e1, DirectedEdge e2, DirectedEdge e3) {
  const VertexId a = e1.from;
  const VertexId b = e1.to;
  VertexId c;
  if (touches(e2, a) && !touches(e2, b)) {
    c = e2.from == a ? e2.to : e2.from;
  } else if (touches(e2, b) && !touches(e2, a)) {
    c = e2.from == b ? e2.to : e2.from;
  } else {
    throw std::invalid_argument("second edge must share exactly one vertex");
  }
  if (a == b || c == a || c == b) {
    throw std::invalid_argument("triangle needs three distinct vertices");
  }
  const bool e2_on_ac = touches(e2, a);
  const VertexId other = e2_on_ac ? b : a;
  if (!same_pair(e3, other, c)) {
    throw std::invalid_argument("third edge must close the triangle");
  }
  std::uint8_t code = 0;
  if (e2_on_ac) code |= 0b100;
  if (e2.from == c) code |= 0b010;
  if (e3.from == c) code |= 0b001;
  return {code};
}

namespace {

ClassificationTable build_table() {
  constexpr VertexId u = 0, v = 1, w = 2;
  auto edge_for = [&](PairRole role, Orientation rho) -> DirectedEdge {
    DirectedEdge e{};
    switch (role) {
      case PairRole::UV: e = {u, v}; break;
      case PairRole::UW: e = {u, w}; break;
      case PairRole::VW: e = {v, w}; break;
    }
    if (rho.reversed(role)) std::swap(e.from, e.to);
    return e;
  };

  ClassificationTable table{};
  for (const Ordering& pi : kOrderings) {
    for (std::uint8_t code = 0; code < 8; ++code) {
      const Orientation rho{code};
      table[pi.index][code] =
          type_code_of(edge_for(pi.at(0), rho), edge_for(pi.at(1), rho),
                       edge_for(pi.at(2), rho));
    }
  }
  return table;
}

}  // namespace

const ClassificationTable& classification_table() {
  static const ClassificationTable table = build_table();
  return table;
}

}  // namespace tritime
