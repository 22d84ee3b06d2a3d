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

#include "tritime/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "tritime/error.hpp"
#include "tritime/oracle.hpp"

namespace tritime::cli {

using nlohmann::json;

DatasetStats compute_stats(const Dataset& dataset) {
  DatasetStats s;
  s.vertices = dataset.graph().num_vertices();
  s.temporal_edges = dataset.graph().num_edges();
  s.static_edges = dataset.static_graph().num_edges();
  s.static_triangles = count_static_triangles(dataset.dag());
  s.degeneracy = dataset.ordering().kappa;
  s.max_multiplicity = dataset.index().max_multiplicity();
  const auto [lo, hi] = dataset.graph().time_span();
  s.time_span = hi - lo;
  s.time_span_years = static_cast<double>(s.time_span) / (365.25 * 86400.0);
  return s;
}

std::vector<Timestamp> sweep_points(const SweepSpec& spec) {
  if (spec.step <= 0) throw std::invalid_argument("sweep step must be > 0");
  if (spec.start > spec.stop) {
    throw std::invalid_argument("sweep start must not exceed stop");
  }
  std::vector<Timestamp> points;
  for (__int128 v = spec.start; v <= spec.stop; v += spec.step) {
    points.push_back(static_cast<Timestamp>(v));
  }
  return points;
}

namespace {

const char* component_name(Component c) {
  switch (c) {
    case Component::D13: return "d13";
    case Component::D12: return "d12";
    case Component::D23: return "d23";
  }
  return "";
}

DeltaTriple with_component(DeltaTriple d, Component c, Timestamp value) {
  switch (c) {
    case Component::D13: d.d13 = value; break;
    case Component::D12: d.d12 = value; break;
    case Component::D23: d.d23 = value; break;
  }
  return d;
}

std::vector<std::string> type_names() {
  std::vector<std::string> names;
  for (std::uint8_t i = 0; i < 8; ++i) names.push_back(TypeCode{i}.name());
  return names;
}

}  // namespace

void write_sweep_csv(const Dataset& dataset, const SweepSpec& spec,
                     std::ostream& out, unsigned threads) {
  const auto points = sweep_points(spec);
  out << "delta_varied,value";
  for (const auto& name : type_names()) out << ',' << name;
  out << ",total";
  if (spec.split_cyclic) out << ",cyclic,acyclic";
  out << '\n';
  for (const Timestamp value : points) {
    const DeltaTriple d = with_component(spec.fixed, spec.vary, value);
    const CountResult r =
        count_all(dataset.index(), dataset.dag(), d, {threads});
    out << component_name(spec.vary) << ',' << value;
    for (std::size_t i = 0; i < 8; ++i) out << ',' << r.types[i];
    out << ',' << r.types.total();
    if (spec.split_cyclic) {
      out << ',' << r.types.cyclic() << ',' << r.types.acyclic();
    }
    out << '\n';
  }
}

Timestamp parse_duration(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty duration");
  std::int64_t scale = 1;
  switch (text.back()) {
    case 's': scale = 1; text.remove_suffix(1); break;
    case 'm': scale = 60; text.remove_suffix(1); break;
    case 'h': scale = 3600; text.remove_suffix(1); break;
    case 'd': scale = 86400; text.remove_suffix(1); break;
    default: break;
  }
  Timestamp value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("invalid duration '" + std::string(text) + "'");
  }
  if (value < 0) throw std::invalid_argument("duration must be non-negative");
  if (value > std::numeric_limits<Timestamp>::max() / scale) {
    throw std::invalid_argument("duration too large");
  }
  return value * scale;
}

namespace {

json delta_json(const DeltaTriple& d) {
  return {{"d13", d.d13}, {"d12", d.d12}, {"d23", d.d23}};
}

json counts_report(const TypeCounts& counts, const DeltaTriple& raw,
                   const DeltaTriple& normalized, bool oracle) {
  json by_type = json::object();
  for (std::uint8_t i = 0; i < 8; ++i) {
    by_type[TypeCode{i}.name()] = counts[i];
  }
  return {{"counts", by_type},
          {"total", counts.total()},
          {"cyclic", counts.cyclic()},
          {"acyclic", counts.acyclic()},
          {"delta", {{"raw", delta_json(raw)},
                     {"normalized", delta_json(normalized)}}},
          {"oracle", oracle}};
}

void write_counts_tsv(std::ostream& out, const TypeCounts& counts,
                      const DeltaTriple& normalized, bool oracle) {
  out << "d13\td12\td23";
  for (const auto& name : type_names()) out << '\t' << name;
  out << "\ttotal\tcyclic\tacyclic\toracle\n";
  out << normalized.d13 << '\t' << normalized.d12 << '\t' << normalized.d23;
  for (std::size_t i = 0; i < 8; ++i) out << '\t' << counts[i];
  out << '\t' << counts.total() << '\t' << counts.cyclic() << '\t'
      << counts.acyclic() << '\t' << (oracle ? "true" : "false") << '\n';
}

json stats_report(const DatasetStats& s) {
  return {{"vertices", s.vertices},
          {"temporal_edges", s.temporal_edges},
          {"static_edges", s.static_edges},
          {"static_triangles", s.static_triangles},
          {"degeneracy", s.degeneracy},
          {"max_multiplicity", s.max_multiplicity},
          {"time_span", s.time_span},
          {"time_span_years", s.time_span_years}};
}

void write_stats_tsv(std::ostream& out, const DatasetStats& s) {
  out << "vertices\ttemporal_edges\tstatic_edges\tstatic_triangles\t"
         "degeneracy\tmax_multiplicity\ttime_span\ttime_span_years\n";
  json years = s.time_span_years;
  out << s.vertices << '\t' << s.temporal_edges << '\t' << s.static_edges
      << '\t' << s.static_triangles << '\t' << s.degeneracy << '\t'
      << s.max_multiplicity << '\t' << s.time_span << '\t' << years.dump()
      << '\n';
}

struct DeltaFlags {
  std::string d13 = "3600";
  std::string d12 = "3600";
  std::string d23 = "3600";

  DeltaTriple parse() const {
    return {parse_duration(d13), parse_duration(d12), parse_duration(d23)};
  }
};

void add_delta_flags(CLI::App* cmd, DeltaFlags& flags) {
  cmd->add_option("--d13", flags.d13, "Max span between first and last edge")
      ->capture_default_str();
  cmd->add_option("--d12", flags.d12, "Max gap between first and second edge")
      ->capture_default_str();
  cmd->add_option("--d23", flags.d23, "Max gap between second and third edge")
      ->capture_default_str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact temporal triangle counting"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "json";
  unsigned threads = 1;
  bool diagnostics = false;
  bool timing = false;
  DeltaFlags deltas;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "Edge list (src dst timestamp), optionally gzipped")
        ->required();
    cmd->add_flag("--diagnostics", diagnostics,
                  "Write ingestion diagnostics JSON to stderr");
  };

  auto* stats = app.add_subcommand("stats", "Dataset statistics");
  add_common(stats);
  stats->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  auto* count = app.add_subcommand("count", "Count temporal triangles by type");
  add_common(count);
  add_delta_flags(count, deltas);
  count->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  count->add_option("--threads", threads)->check(CLI::Range(1u, 1024u));
  count->add_flag("--timing", timing, "Embed wall_time_ms in the JSON report");

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference count");
  add_common(oracle);
  add_delta_flags(oracle, deltas);
  oracle->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  std::uint64_t budget = kDefaultOracleBudget;
  oracle->add_option("--oracle-budget", budget, "Max edge triples examined")
      ->capture_default_str();
  oracle->add_flag("--timing", timing, "Embed wall_time_ms in the JSON report");

  auto* sweep = app.add_subcommand("sweep", "Counts over a range of one delta");
  add_common(sweep);
  add_delta_flags(sweep, deltas);
  std::string vary = "d23";
  std::string from = "0", to, step;
  std::string output = "-";
  bool split = false;
  sweep->add_option("--vary", vary)
      ->check(CLI::IsMember({"d13", "d12", "d23"}))
      ->capture_default_str();
  sweep->add_option("--from", from)->capture_default_str();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--step", step)->required();
  sweep->add_option("--output", output, "CSV path, '-' for stdout")
      ->capture_default_str();
  sweep->add_flag("--split-cyclic", split, "Add cyclic and acyclic subtotals");
  sweep->add_option("--threads", threads)->check(CLI::Range(1u, 1024u));

  std::vector<const char*> argv{"tritime"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    auto dataset = Dataset::load(input);
    if (diagnostics) {
      err << diagnostics_json(dataset->graph().diagnostics()) << '\n';
    }

    if (stats->parsed()) {
      const DatasetStats s = compute_stats(*dataset);
      if (format == "tsv") {
        write_stats_tsv(out, s);
      } else {
        out << stats_report(s).dump(2) << '\n';
      }
      return kOk;
    }

    const DeltaTriple raw = deltas.parse();
    if (count->parsed() || oracle->parsed()) {
      const bool is_oracle = oracle->parsed();
      const DeltaTriple normalized = normalize_deltas(raw);
      const TypeCounts counts =
          is_oracle ? oracle_count(dataset->index(), dataset->dag(), raw, budget)
                    : count_all(dataset->index(), dataset->dag(), raw,
                                {threads})
                          .types;
      const double ms = elapsed_ms(start);
      if (format == "tsv") {
        write_counts_tsv(out, counts, normalized, is_oracle);
      } else {
        json report = counts_report(counts, raw, normalized, is_oracle);
        if (timing) report["wall_time_ms"] = ms;
        out << report.dump(2) << '\n';
      }
      if (!timing) err << "wall_time_ms " << ms << '\n';
      return kOk;
    }

    SweepSpec spec;
    spec.vary = vary == "d13"   ? Component::D13
                : vary == "d12" ? Component::D12
                                : Component::D23;
    spec.start = parse_duration(from);
    spec.stop = parse_duration(to);
    spec.step = parse_duration(step);
    spec.fixed = raw;
    spec.split_cyclic = split;
    if (output == "-") {
      write_sweep_csv(*dataset, spec, out, threads);
    } else {
      std::ofstream file(output);
      if (!file) throw IoError("cannot write '" + output + "'");
      write_sweep_csv(*dataset, spec, file, threads);
      if (!file) throw IoError("write failed for '" + output + "'");
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kInputError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kOverflowError;
  } catch (const BudgetError& e) {
    err << "refused: " << e.what() << '\n';
    return kBudgetError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOtherError;
  }
}

}  // namespace tritime::cli
