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
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tritime/dataset.hpp"
#include "tritime/temporal_count.hpp"

namespace tritime::cli {

enum ExitCode : int {
  kOk = 0,
  kOtherError = 1,
  kUsageError = 2,
  kInputError = 3,  // malformed edge list or vertex capacity exceeded
  kIoError = 4,
  kOverflowError = 5,
  kBudgetError = 6,
};

struct DatasetStats {
  std::uint64_t vertices = 0;
  std::uint64_t temporal_edges = 0;
  std::uint64_t static_edges = 0;
  std::uint64_t static_triangles = 0;
  std::uint64_t degeneracy = 0;
  std::uint64_t max_multiplicity = 0;
  Timestamp time_span = 0;  // max - min timestamp
  double time_span_years = 0.0;  // time_span in seconds over 365.25 days
};

DatasetStats compute_stats(const Dataset& dataset);

enum class Component { D13, D12, D23 };

struct SweepSpec {
  Component vary = Component::D23;
  Timestamp start = 0;
  Timestamp stop = 0;
  Timestamp step = 1;
  DeltaTriple fixed;  // the varied component is ignored
  bool split_cyclic = false;
};

// Sweep points start, start + step, ... up to stop. Throws
// std::invalid_argument unless step > 0 and start <= stop.
std::vector<Timestamp> sweep_points(const SweepSpec& spec);

// "delta_varied,value,<8 type columns>,total[,cyclic,acyclic]" then one row
// per sweep point.
void write_sweep_csv(const Dataset& dataset, const SweepSpec& spec,
                     std::ostream& out, unsigned threads = 1);

// Integer time units with an optional s/m/h/d suffix (converted to seconds).
// Throws std::invalid_argument on malformed or negative input.
Timestamp parse_duration(std::string_view text);

// Entry point behind the `tritime` binary; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tritime::cli
