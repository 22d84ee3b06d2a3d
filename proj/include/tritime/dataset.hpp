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

#include <filesystem>
#include <memory>

#include "tritime/degeneracy.hpp"
#include "tritime/temporal_graph.hpp"

namespace tritime {

// Every derived structure the counters need, built once from a graph.
// Not copyable or movable: the oriented graph refers to the static graph.
class Dataset {
 public:
  explicit Dataset(TemporalGraph graph)
      : graph_(std::move(graph)),
        index_(graph_),
        static_graph_(index_),
        ordering_(degeneracy_order(static_graph_)),
        dag_(static_graph_, ordering_) {}

  Dataset(const Dataset&) = delete;
  Dataset& operator=(const Dataset&) = delete;

  static std::unique_ptr<Dataset> load(const std::filesystem::path& path) {
    return std::make_unique<Dataset>(read_edge_list_file(path));
  }

  const TemporalGraph& graph() const { return graph_; }
  const PairIndex& index() const { return index_; }
  const StaticGraph& static_graph() const { return static_graph_; }
  const DegeneracyOrdering& ordering() const { return ordering_; }
  const OrientedGraph& dag() const { return dag_; }

 private:
  TemporalGraph graph_;
  PairIndex index_;
  StaticGraph static_graph_;
  DegeneracyOrdering ordering_;
  OrientedGraph dag_;
};

}  // namespace tritime
