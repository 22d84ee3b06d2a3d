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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tritime {

using VertexId = std::uint32_t;
using Timestamp = std::int64_t;

// A directed timestamped edge. `index` is the position among kept edges in
// input order.
struct TemporalEdge {
  VertexId src = 0;
  VertexId dst = 0;
  Timestamp timestamp = 0;
  std::size_t index = 0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

struct IngestOptions {
  char comment = '#';
  // Exceeding this many distinct labels raises CapacityError.
  std::uint64_t max_vertices = std::uint64_t{1} << 32;
};

struct IngestDiagnostics {
  std::size_t lines_read = 0;
  std::size_t edges_kept = 0;
  std::size_t self_loops_dropped = 0;
  double parse_ms = 0.0;
};

// Serialized with keys edges_kept, lines_read, parse_ms, self_loops_dropped.
std::string diagnostics_json(const IngestDiagnostics& diagnostics);

// Directed temporal multigraph with dense vertex ids assigned in order of
// first appearance. Immutable once built.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  // Vertices are 0..num_vertices-1 and labeled by their decimal id.
  // Self-loops are dropped and recorded in the diagnostics.
  static TemporalGraph from_edges(
      std::size_t num_vertices,
      std::span<const std::tuple<VertexId, VertexId, Timestamp>> edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const TemporalEdge> edges() const { return edges_; }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find(std::string_view label) const;

  // (min, max) timestamp; (0, 0) for a graph without edges.
  std::pair<Timestamp, Timestamp> time_span() const { return time_span_; }

  const IngestDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  friend class TemporalGraphBuilder;

  std::vector<TemporalEdge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
  std::pair<Timestamp, Timestamp> time_span_{0, 0};
  IngestDiagnostics diagnostics_;
};

class TemporalGraphBuilder {
 public:
  explicit TemporalGraphBuilder(std::uint64_t max_vertices = std::uint64_t{1}
                                                             << 32)
      : max_vertices_(max_vertices) {}

  // Returns the dense id for `label`, creating it on first sight.
  VertexId intern(std::string_view label);

  // Returns false (and counts a dropped self-loop) when src == dst.
  bool add_edge(VertexId src, VertexId dst, Timestamp timestamp);
  bool add_edge(std::string_view src, std::string_view dst,
                Timestamp timestamp);

  void note_line() { ++graph_.diagnostics_.lines_read; }
  void set_parse_ms(double ms) { graph_.diagnostics_.parse_ms = ms; }

  TemporalGraph build() &&;

 private:
  TemporalGraph graph_;
  std::uint64_t max_vertices_;
};

// Whitespace-separated "src dst timestamp" lines; '#' starts a comment line.
// Throws ParseError on malformed lines and CapacityError past 2^32 vertices.
TemporalGraph parse_edge_list(std::string_view text,
                              const IngestOptions& options = {});
TemporalGraph parse_edge_list(std::istream& in,
                              const IngestOptions& options = {});

// Reads a file, transparently inflating gzip input (detected by magic bytes).
// Throws IoError when the file cannot be read or decompressed.
std::string read_input_bytes(const std::filesystem::path& path);
TemporalGraph read_edge_list_file(const std::filesystem::path& path,
                                  const IngestOptions& options = {});

// CSR map from ordered vertex pair (a, b) to the ascending timestamps of all
// temporal edges a -> b.
class PairIndex {
 public:
  using Sequence = std::span<const Timestamp>;

  struct Pair {
    VertexId src;
    VertexId dst;
    Sequence timestamps;
  };

  PairIndex() = default;
  explicit PairIndex(const TemporalGraph& graph);

  // Empty span when there is no edge a -> b.
  Sequence sequence(VertexId a, VertexId b) const;
  std::size_t multiplicity(VertexId a, VertexId b) const {
    return sequence(a, b).size();
  }

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_pairs() const { return keys_.size(); }
  std::size_t num_timestamps() const { return timestamps_.size(); }
  std::size_t max_multiplicity() const { return max_multiplicity_; }

  // Pairs are ordered by (src, dst).
  Pair pair(std::size_t i) const;

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::size_t num_vertices_ = 0;
  std::size_t max_multiplicity_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Timestamp> timestamps_;
  std::unordered_map<std::uint64_t, std::uint32_t> slot_;
};

PairIndex build_pair_index(const TemporalGraph& graph);

// Underlying undirected simple graph: {a, b} is an edge iff some temporal
// edge joins a and b in either direction.
class StaticGraph {
 public:
  StaticGraph() = default;
  explicit StaticGraph(const PairIndex& index);

  // Builds directly from undirected edges; duplicates and self-loops are
  // ignored.
  static StaticGraph from_edges(
      std::size_t num_vertices,
      std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  // Sorted ascending by vertex id.
  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }

  bool has_edge(VertexId a, VertexId b) const {
    return a != b && edge_set_.contains(key(a, b));
  }

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
  void build(std::size_t num_vertices,
             std::vector<std::pair<VertexId, VertexId>> edges);

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::unordered_set<std::uint64_t> edge_set_;
};

StaticGraph extract_static_graph(const PairIndex& index);

}  // namespace tritime
