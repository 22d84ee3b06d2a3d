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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "tritime/cli.hpp"

using namespace tritime;
using nlohmann::json;

namespace {

const std::string kData = TRITIME_TEST_DATA;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "tritime_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_edges(const std::string& name, const testing::Triples& edges) {
  const auto path = scratch_dir() / name;
  std::ofstream f(path);
  for (const auto& [a, b, t] : edges) f << a << ' ' << b << ' ' << t << '\n';
  return path.string();
}

}  // namespace

TEST_CASE("parse_duration") {
  CHECK(cli::parse_duration("42") == 42);
  CHECK(cli::parse_duration("90s") == 90);
  CHECK(cli::parse_duration("10m") == 600);
  CHECK(cli::parse_duration("1h") == 3600);
  CHECK(cli::parse_duration("2d") == 172800);
  CHECK_THROWS_AS(cli::parse_duration(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_duration("h"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_duration("-5"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_duration("1.5h"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_duration("9223372036854775807d"), std::invalid_argument);
}

TEST_CASE("sweep points") {
  cli::SweepSpec spec;
  spec.start = 0;
  spec.stop = 3600;
  spec.step = 600;
  CHECK(cli::sweep_points(spec).size() == 7);
  spec.step = 0;
  CHECK_THROWS_AS(cli::sweep_points(spec), std::invalid_argument);
  spec.step = 1;
  spec.start = 10;
  spec.stop = 5;
  CHECK_THROWS_AS(cli::sweep_points(spec), std::invalid_argument);
}

TEST_CASE("stats on the triangle file") {
  auto r = call({"stats", "--input", kData + "/triangle.txt"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["vertices"] == 3);
  CHECK(j["temporal_edges"] == 3);
  CHECK(j["static_edges"] == 3);
  CHECK(j["static_triangles"] == 1);
  CHECK(j["degeneracy"] == 2);
  CHECK(j["max_multiplicity"] == 1);
  CHECK(j["time_span"] == 20);

  auto tsv = call({"stats", "--input", kData + "/triangle.txt", "--format", "tsv"});
  CHECK(tsv.code == 0);
  CHECK(tsv.out.rfind("vertices\t", 0) == 0);
}

TEST_CASE("count reports") {
  const std::string file = kData + "/triangle.txt";
  auto hit = call({"count", "--input", file, "--d13", "30", "--d12", "15", "--d23", "15"});
  REQUIRE(hit.code == 0);
  auto j = json::parse(hit.out);
  CHECK(j["total"] == 1);
  CHECK(j["cyclic"] == 1);
  CHECK(j["oracle"] == false);
  CHECK(j.find("wall_time_ms") == j.end());

  auto miss = call({"count", "--input", file, "--d13", "15", "--d12", "15", "--d23", "15"});
  CHECK(json::parse(miss.out)["total"] == 0);

  auto clamped = call({"count", "--input", file, "--d13", "100", "--d12", "10", "--d23", "20"});
  auto d = json::parse(clamped.out)["delta"];
  CHECK(d["raw"]["d13"] == 100);
  CHECK(d["normalized"] == json{{"d13", 30}, {"d12", 10}, {"d23", 20}});

  auto multi = call({"count", "--input", kData + "/triangle_multi.txt", "--d13", "30",
                     "--d12", "15", "--d23", "15"});
  CHECK(json::parse(multi.out)["total"] == 2);

  auto gz = call({"count", "--input", kData + "/triangle.txt.gz", "--d13", "30", "--d12",
                  "15", "--d23", "15"});
  CHECK(json::parse(gz.out)["total"] == 1);

  auto timed = call({"count", "--input", file, "--timing"});
  CHECK(json::parse(timed.out).contains("wall_time_ms"));
}

TEST_CASE("count output is byte-identical across runs and thread counts") {
  std::mt19937_64 rng(6);
  auto edges = testing::random_triples(rng, 60, 3000, 50'000, 0.05);
  const auto path = write_edges("determinism.txt", edges);
  const std::vector<std::string> base{"count", "--input", path, "--d13", "2h",
                                      "--d12", "1h", "--d23", "1h"};
  const auto first = call(base);
  REQUIRE(first.code == 0);
  CHECK(call(base).out == first.out);
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  CHECK(call(threaded).out == first.out);
}

TEST_CASE("oracle subcommand mirrors count") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(3, 30), md(0, 300);
    auto edges = testing::random_triples(rng, nd(rng), md(rng), 10'000, 0.05);
    const auto path = write_edges("fixture_" + std::to_string(trial) + ".txt", edges);
    const auto d = testing::random_deltas(rng, 5000);
    const std::vector<std::string> flags{"--input", path, "--d13", std::to_string(d.d13),
                                         "--d12", std::to_string(d.d12), "--d23",
                                         std::to_string(d.d23)};
    std::vector<std::string> c{"count"}, o{"oracle"};
    c.insert(c.end(), flags.begin(), flags.end());
    o.insert(o.end(), flags.begin(), flags.end());
    auto fast = json::parse(call(c).out);
    auto slow = json::parse(call(o).out);
    CHECK(slow["oracle"] == true);
    fast.erase("oracle");
    slow.erase("oracle");
    CHECK(fast == slow);
  }
}

TEST_CASE("oracle refuses over budget") {
  auto r = call({"oracle", "--input", kData + "/triangle_multi.txt", "--oracle-budget", "1"});
  CHECK(r.code == cli::kBudgetError);
  CHECK(r.out.empty());
}

TEST_CASE("sweep over d23") {
  std::mt19937_64 rng(21);
  auto edges = testing::random_triples(rng, 40, 2000, 20'000, 0.05);
  const auto path = write_edges("sweep.txt", edges);
  auto r = call({"sweep", "--input", path, "--vary", "d23", "--from", "0", "--to", "60m",
                 "--step", "10m", "--d13", "2h", "--d12", "1h", "--split-cyclic"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line ==
        "delta_varied,value,type0_acyclic,type1_cyclic,type2_acyclic,type3_acyclic,"
        "type4_acyclic,type5_acyclic,type6_cyclic,type7_acyclic,total,cyclic,acyclic");
  std::vector<std::uint64_t> totals;
  std::string last;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    REQUIRE(cells.size() == 13);
    CHECK(cells[0] == "d23");
    totals.push_back(std::stoull(cells[10]));
    CHECK(std::stoull(cells[11]) + std::stoull(cells[12]) == totals.back());
    last = line;
  }
  REQUIRE(totals.size() == 7);
  CHECK(std::is_sorted(totals.begin(), totals.end()));
  CHECK(totals.back() > 0);

  auto single = call({"count", "--input", path, "--d13", "2h", "--d12", "1h", "--d23", "1h"});
  CHECK(json::parse(single.out)["total"] == totals.back());

  const auto csv = (scratch_dir() / "sweep.csv").string();
  auto to_file = call({"sweep", "--input", path, "--to", "60m", "--step", "10m", "--d13", "2h",
                       "--d12", "1h", "--split-cyclic", "--output", csv});
  CHECK(to_file.code == 0);
  std::ifstream f(csv);
  std::stringstream body;
  body << f.rdbuf();
  CHECK(body.str() == r.out);
}

TEST_CASE("sweep on an empty graph") {
  auto r = call({"sweep", "--input", kData + "/empty.txt", "--to", "10", "--step", "5"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.substr(line.rfind(',') + 1) == "0");
  }
  CHECK(rows == 3);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == cli::kUsageError);
  CHECK(call({"count"}).code == cli::kUsageError);
  CHECK(call({"count", "--input", kData + "/triangle.txt", "--d13", "-3"}).code ==
        cli::kUsageError);
  CHECK(call({"count", "--input", kData + "/missing.txt"}).code == cli::kIoError);

  const auto bad = scratch_dir() / "bad.txt";
  std::ofstream(bad) << "1 2 3\n1 2\n";
  auto r = call({"count", "--input", bad.string()});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("2") != std::string::npos);

  auto sweep = call({"sweep", "--input", kData + "/triangle.txt", "--to", "10", "--step", "0"});
  CHECK(sweep.code == cli::kUsageError);

  auto diag = call({"stats", "--input", kData + "/triangle.txt", "--diagnostics"});
  CHECK(diag.code == 0);
  CHECK(json::parse(diag.err.substr(0, diag.err.find('\n'))).is_object());
}
