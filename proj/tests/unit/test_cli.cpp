// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include <sys/wait.h>

#include <catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QFORCE_CLI) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

double field(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0) return std::stod(line.substr(key.size() + 1));
  }
  FAIL("no line starting with " << key << " in:\n" << out);
  return 0.0;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("qforce_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

const char* kH2 = "2\nH2\nH 0 0 0\nH 0 0 0.7414\n";

}  // namespace

TEST_CASE("missing geometry file is reported with its path") {
  const Run r = run("energy --geometry /nonexistent/dir/h2.xyz 2>&1");
  CHECK(r.status != 0);
  CHECK_THAT(r.out, ContainsSubstring("/nonexistent/dir/h2.xyz"));
  CHECK(run("energy 2>&1").status != 0);
  CHECK(run("teleport 2>&1").status != 0);
}

TEST_CASE("bad configuration exits nonzero") {
  const TempDir dir;
  const std::string geom = dir.file("h2.xyz", kH2);
  const std::string cfg = dir.file("bad.json", R"({"mapping":"klein"})");
  const Run r = run("energy --geometry " + geom + " --config " + cfg + " 2>&1");
  CHECK(r.status != 0);
  CHECK_THAT(r.out, ContainsSubstring("klein"));
}

TEST_CASE("energy, forces and spectrum agree") {
  const TempDir dir;
  const std::string geom = dir.file("h2.xyz", kH2);
  const Run e = run("energy --geometry " + geom);
  REQUIRE(e.status == 0);
  const double energy = field(e.out, "energy_hartree");
  CHECK_THAT(energy, WithinAbs(-1.137270174661, 1e-6));
  CHECK_THAT(e.out, ContainsSubstring("qubit_order little_endian"));

  const Run s = run("spectrum --geometry " + geom);
  REQUIRE(s.status == 0);
  CHECK_THAT(field(s.out, "eigenvalue_0"), WithinAbs(energy, 1e-6));
  CHECK(field(s.out, "eigenvalue_3") >= field(s.out, "eigenvalue_2"));
  CHECK_THAT(s.out, !ContainsSubstring("eigenvalue_4"));

  const Run f = run("forces --geometry " + geom);
  REQUIRE(f.status == 0);
  CHECK_THAT(field(f.out, "energy_hartree"), WithinAbs(energy, 1e-12));
}

TEST_CASE("serve matches the one-shot CLI and exits cleanly") {
  const TempDir dir;
  const std::string geom = dir.file("h2.xyz", kH2);
  const double cli = field(run("energy --geometry " + geom).out, "energy_hartree");
  const std::string requests = dir.file(
      "requests.jsonl",
      R"({"op":"energy","geometry":{"symbols":["H","H"],"positions":[[0,0,0],[0,0,0.7414]]}})"
      "\n"
      R"({"op":"init","config":{}})"
      "\n"
      R"({"op":"energy","geometry":{"symbols":["H","H"],"positions":[[0,0,0],[0,0,0.7414]]}})"
      "\n"
      R"({"op":"shutdown"})"
      "\n");
  const Run r = run("serve < " + requests);
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::vector<nlohmann::json> replies;
  std::string line;
  while (std::getline(in, line)) replies.push_back(nlohmann::json::parse(line));
  REQUIRE(replies.size() == 4);
  CHECK(replies[0]["error"] == "not initialized");
  CHECK(replies[1]["ok"] == true);
  CHECK_THAT(replies[2]["energy_hartree"].get<double>(), WithinAbs(cli, 1e-12));
  CHECK(replies[3]["ok"] == true);
}

TEST_CASE("optimize writes the trajectory files") {
  const TempDir dir;
  const std::string geom = dir.file("h2.xyz", "2\n\nH 0 0 0\nH 0 0 0.85\n");
  const std::string cfg = dir.file("cfg.json", R"({"report_bonds":[[0,1]]})");
  const Run r = run("optimize --geometry " + geom + " --config " + cfg + " --output " + dir.path().string());
  REQUIRE(r.status == 0);
  std::ifstream table(dir.path() / "trajectory.tsv");
  std::string header;
  std::getline(table, header);
  CHECK(header == "iter\tenergy_hartree\tfmax\tfnorm\tr_0_1");
  CHECK(fs::file_size(dir.path() / "trajectory.xyz") > 0);

  const std::string tight = dir.file("tight.json", R"({"max_opt_steps":1})");
  CHECK(run("optimize --geometry " + geom + " --config " + tight + " --output " + dir.path().string() + " 2>&1").status == 3);
}
