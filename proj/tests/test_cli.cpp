// Copyright 2026 The mubhadamard Authors
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
#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "hadamard/cli.hpp"
#include "support.hpp"

using namespace hadamard;
namespace fs = std::filesystem;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mubhad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "mubhad_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}
}  // namespace

TEST_CASE("gen then defect matches the library", "[cli]") {
  const std::string a = write_file("s9_assign.json", R"({"p":3,"q":3,"K":["I","I","Hy"],"L":["F","F","Hw"]})");
  const Result g = run_cli({"gen", "--assignment", a});
  REQUIRE(g.code == 0);
  const std::string m = write_file("s9.json", g.out);
  const auto parsed = io::exponent_matrix_from_json(nlohmann::json::parse(g.out));
  CHECK(parsed == catalog_matrix(lookup("S9")));
  const Result d = run_cli({"defect", "--float", m});
  REQUIRE(d.code == 0);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(j["defect"] == 0);
  CHECK(j["mode"] == "float");
  CHECK(j["variables"] == 64);
  const Result de = run_cli({"defect", "--exact", m});
  CHECK(nlohmann::json::parse(de.out)["rank"] == exact_defect(parsed).rank);
}

TEST_CASE("butson, unitary, haagerup and dephase verbs", "[cli]") {
  const std::string sp10 = write_file("sp10.json", run_cli({"gen", "--catalog", "Sp10"}).out);
  const Result b = run_cli({"butson", sp10});
  CHECK(b.code == 0);
  CHECK(b.out == "10\n");
  CHECK(run_cli({"unitary", sp10}).code == 0);
  const Result h = run_cli({"haagerup", sp10});
  CHECK(nlohmann::json::parse(h.out)["fingerprint"] == fingerprint(haagerup_set(catalog_matrix(lookup("Sp10")))));
  const std::string raw = write_file("raw.json", R"({"d":2,"root":4,"exponents":[[1,2],[3,2]],"raw":true})");
  const Result dp = run_cli({"dephase", raw});
  REQUIRE(dp.code == 0);
  const auto j = nlohmann::json::parse(dp.out);
  CHECK(j["exponents"] == nlohmann::json::parse("[[0,0],[0,2]]"));
  CHECK_FALSE(j.contains("raw"));
  const std::string bad = write_file("bad.json", R"({"d":2,"root":2,"exponents":[[0,0],[0,0]]})");
  CHECK(run_cli({"unitary", bad}).code == 1);
}

TEST_CASE("float matrices round trip", "[cli]") {
  const std::string f = write_file("trivial.json", io::to_json(trivial_family(2, 2, Eigen::MatrixXd::Constant(1, 1, 0.4))).dump());
  const Result d = run_cli({"defect", f});
  REQUIRE(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["defect"] == 1);
  CHECK(run_cli({"defect", "--exact", f}).code == 2);
  CHECK(run_cli({"butson", f}).code == 1);
}

TEST_CASE("malformed input exits with 2", "[cli]") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"butson", "/nonexistent/file.json"}).code == 2);
  CHECK(run_cli({"butson", write_file("junk.json", "{not json")}).code == 2);
  CHECK(run_cli({"butson", write_file("ragged.json", R"({"root":2,"exponents":[[0,0],[0]]})")}).code == 2);
  const std::string clash = write_file("clash.json", R"({"p":2,"q":5,"K":["I","H1"],"L":["F","H1"]})");
  const Result r = run_cli({"gen", "--assignment", clash});
  CHECK(r.code == 2);
  CHECK(r.err.find("K[1]") != std::string::npos);
  CHECK(run_cli({"mub", "--q", "6"}).code == 2);
  CHECK(run_cli({"defect", "--exact", "--float", write_file("f2.json", io::to_json(fourier(2)).dump())}).code == 2);
}

TEST_CASE("mub, compare, search and catalog verbs", "[cli]") {
  const Result m = run_cli({"mub", "--q", "5"});
  REQUIRE(m.code == 0);
  CHECK(nlohmann::json::parse(m.out)["bases"].size() == 6);
  const std::string s10 = write_file("s10.json", run_cli({"gen", "--catalog", "S10"}).out);
  const std::string b10 = write_file("b10.json", run_cli({"gen", "--catalog", "B10"}).out);
  const Result c = run_cli({"compare", s10, b10});
  CHECK(nlohmann::json::parse(c.out)["verdict"] == "inconclusive");
  const std::string f10 = write_file("f10.json", io::to_json(fourier(10)).dump());
  CHECK(nlohmann::json::parse(run_cli({"compare", s10, f10}).out)["verdict"] == "inequivalent");
  const Result s = run_cli({"search", "--p", "2", "--q", "3", "--budget", "100"});
  REQUIRE(s.code == 0);
  const auto sj = nlohmann::json::parse(s.out);
  CHECK(sj["partial"] == false);
  CHECK(sj["isolated"].get<int>() >= 1);
  const Result v = run_cli({"catalog", "verify", "--name", "S15"});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["passed"] == true);
  const Result t = run_cli({"catalog", "verify", "--name", "B10", "--table"});
  CHECK(t.out.find("B10  PASS") == 0);
  CHECK(nlohmann::json::parse(run_cli({"catalog", "list"}).out).size() == catalog().size());
}

TEST_CASE("outputs are byte-for-byte deterministic", "[cli]") {
  const Result a = run_cli({"search", "--p", "3", "--q", "3", "--budget", "50"});
  const Result b = run_cli({"search", "--p", "3", "--q", "3", "--budget", "50", "--threads", "2"});
  CHECK(a.out == b.out);
  CHECK(run_cli({"mub", "--q", "7"}).out == run_cli({"mub", "--q", "7"}).out);
}
