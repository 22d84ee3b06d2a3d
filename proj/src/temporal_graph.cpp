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

#include "tritime/temporal_graph.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iterator>
#include <limits>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "tritime/error.hpp"

namespace tritime {

std::string diagnostics_json(const IngestDiagnostics& diagnostics) {
  nlohmann::json j;
  j["lines_read"] = diagnostics.lines_read;
  j["edges_kept"] = diagnostics.edges_kept;
  j["self_loops_dropped"] = diagnostics.self_loops_dropped;
  j["parse_ms"] = diagnostics.parse_ms;
  return j.dump();
}

TemporalGraph TemporalGraph::from_edges(
    std::size_t num_vertices,
    std::span<const std::tuple<VertexId, VertexId, Timestamp>> edges) {
  TemporalGraphBuilder builder;
  for (std::size_t v = 0; v < num_vertices; ++v) {
    builder.intern(std::to_string(v));
  }
  for (const auto& [src, dst, t] : edges) {
    if (src >= num_vertices || dst >= num_vertices) {
      throw std::out_of_range("edge endpoint outside [0, num_vertices)");
    }
    builder.add_edge(src, dst, t);
  }
  return std::move(builder).build();
}

std::optional<VertexId> TemporalGraph::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

VertexId TemporalGraphBuilder::intern(std::string_view label) {
  auto [it, inserted] = graph_.ids_.try_emplace(
      std::string(label), static_cast<VertexId>(graph_.labels_.size()));
  if (inserted) {
    if (graph_.labels_.size() >= max_vertices_) {
      graph_.ids_.erase(it);
      throw CapacityError("more than " + std::to_string(max_vertices_) +
                          " distinct vertices");
    }
    graph_.labels_.emplace_back(label);
  }
  return it->second;
}

bool TemporalGraphBuilder::add_edge(VertexId src, VertexId dst,
                                    Timestamp timestamp) {
  if (src == dst) {
    ++graph_.diagnostics_.self_loops_dropped;
    return false;
  }
  auto& edges = graph_.edges_;
  if (edges.empty()) {
    graph_.time_span_ = {timestamp, timestamp};
  } else {
    graph_.time_span_.first = std::min(graph_.time_span_.first, timestamp);
    graph_.time_span_.second = std::max(graph_.time_span_.second, timestamp);
  }
  edges.push_back({src, dst, timestamp, edges.size()});
  ++graph_.diagnostics_.edges_kept;
  return true;
}

bool TemporalGraphBuilder::add_edge(std::string_view src, std::string_view dst,
                                    Timestamp timestamp) {
  VertexId a = intern(src);
  VertexId b = intern(dst);
  return add_edge(a, b, timestamp);
}

TemporalGraph TemporalGraphBuilder::build() && { return std::move(graph_); }

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

TemporalGraph parse_edge_list(std::string_view text,
                              const IngestOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  TemporalGraphBuilder builder(options.max_vertices);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    builder.note_line();

    std::string_view fields[3];
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size() || line[i] == options.comment) continue;
    while (i < line.size()) {
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      if (count == 3) {
        throw ParseError(line_no, "expected 3 fields, found more");
      }
      fields[count++] = line.substr(i, j - i);
      i = j;
      while (i < line.size() && is_space(line[i])) ++i;
    }
    if (count != 3) {
      throw ParseError(line_no,
                       "expected 3 fields, found " + std::to_string(count));
    }

    Timestamp t = 0;
    const char* first = fields[2].data();
    const char* last = first + fields[2].size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, t);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError(line_no, "invalid timestamp '" +
                                    std::string(fields[2]) + "'");
    }
    builder.add_edge(fields[0], fields[1], t);
  }

  const auto stop = std::chrono::steady_clock::now();
  builder.set_parse_ms(
      std::chrono::duration<double, std::milli>(stop - start).count());
  return std::move(builder).build();
}

TemporalGraph parse_edge_list(std::istream& in, const IngestOptions& options) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("read failed");
  return parse_edge_list(text, options);
}

namespace {

std::string inflate_gzip(std::string_view compressed) {
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) {
    throw IoError("zlib initialization failed");
  }
  std::string out;
  char buffer[1 << 16];
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  zs.avail_in = static_cast<uInt>(compressed.size());
  int rc = Z_OK;
  while (true) {
    zs.next_out = reinterpret_cast<Bytef*>(buffer);
    zs.avail_out = sizeof(buffer);
    rc = inflate(&zs, Z_NO_FLUSH);
    out.append(buffer, sizeof(buffer) - zs.avail_out);
    if (rc == Z_STREAM_END) {
      // Concatenated gzip members.
      if (zs.avail_in == 0) break;
      if (inflateReset(&zs) != Z_OK) break;
      continue;
    }
    if (rc != Z_OK) break;
    if (zs.avail_in == 0 && zs.avail_out != 0) break;
  }
  inflateEnd(&zs);
  if (rc != Z_STREAM_END) throw IoError("corrupt or truncated gzip stream");
  return out;
}

}  // namespace

std::string read_input_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::string bytes{std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0x1f &&
      static_cast<unsigned char>(bytes[1]) == 0x8b) {
    return inflate_gzip(bytes);
  }
  return bytes;
}

TemporalGraph read_edge_list_file(const std::filesystem::path& path,
                                  const IngestOptions& options) {
  return parse_edge_list(read_input_bytes(path), options);
}

PairIndex::PairIndex(const TemporalGraph& graph)
    : num_vertices_(graph.num_vertices()) {
  auto edges = graph.edges();
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const auto& x = edges[a];
                     const auto& y = edges[b];
                     return std::tie(x.src, x.dst, x.timestamp) <
                            std::tie(y.src, y.dst, y.timestamp);
                   });

  timestamps_.reserve(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& e = edges[order[i]];
    std::uint64_t k = key(e.src, e.dst);
    if (keys_.empty() || keys_.back() != k) {
      if (!keys_.empty()) offsets_.push_back(timestamps_.size());
      keys_.push_back(k);
    }
    timestamps_.push_back(e.timestamp);
  }
  if (!keys_.empty()) offsets_.push_back(timestamps_.size());

  slot_.reserve(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    slot_.emplace(keys_[i], static_cast<std::uint32_t>(i));
    max_multiplicity_ = std::max(max_multiplicity_, offsets_[i + 1] - offsets_[i]);
  }
}

PairIndex::Sequence PairIndex::sequence(VertexId a, VertexId b) const {
  auto it = slot_.find(key(a, b));
  if (it == slot_.end()) return {};
  const std::size_t i = it->second;
  return {timestamps_.data() + offsets_[i], timestamps_.data() + offsets_[i + 1]};
}

PairIndex::Pair PairIndex::pair(std::size_t i) const {
  return {static_cast<VertexId>(keys_.at(i) >> 32),
          static_cast<VertexId>(keys_[i] & 0xffffffffu),
          {timestamps_.data() + offsets_[i], timestamps_.data() + offsets_[i + 1]}};
}

PairIndex build_pair_index(const TemporalGraph& graph) {
  return PairIndex(graph);
}

StaticGraph::StaticGraph(const PairIndex& index) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(index.num_pairs());
  for (std::size_t i = 0; i < index.num_pairs(); ++i) {
    auto p = index.pair(i);
    edges.emplace_back(p.src, p.dst);
  }
  build(index.num_vertices(), std::move(edges));
}

StaticGraph StaticGraph::from_edges(
    std::size_t num_vertices,
    std::span<const std::pair<VertexId, VertexId>> edges) {
  StaticGraph g;
  g.build(num_vertices, {edges.begin(), edges.end()});
  return g;
}

void StaticGraph::build(std::size_t num_vertices,
                        std::vector<std::pair<VertexId, VertexId>> edges) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::size_t> degree(num_vertices, 0);
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  offsets_.assign(num_vertices + 1, 0);
  for (std::size_t v = 0; v < num_vertices; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  neighbors_.assign(offsets_.back(), 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (a, b) with a < b, so every neighbor list comes out
  // ascending: lower neighbors arrive before higher ones.
  for (const auto& [a, b] : edges) neighbors_[fill[b]++] = a;
  for (const auto& [a, b] : edges) neighbors_[fill[a]++] = b;

  edge_set_.clear();
  edge_set_.reserve(edges.size());
  for (const auto& [a, b] : edges) edge_set_.insert(key(a, b));
}

StaticGraph extract_static_graph(const PairIndex& index) {
  return StaticGraph(index);
}

}  // namespace tritime
