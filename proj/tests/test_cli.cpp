// Copyright 2026 The Privwrap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t nread;
  while ((nread = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, nread);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kCli = PRIVWRAP_CLI_PATH;
const std::string kScratch = PRIVWRAP_SCRATCH_DIR;

std::string write_dataset(const std::string& name, int n) {
  const std::string path = kScratch + "/" + name;
  std::ofstream f(path);
  for (int i = 0; i < n; ++i) f << "el" << char('a' + i) << "\n";
  return path;
}

std::string write_file(const std::string& name, const std::string& content,
                       bool executable = false) {
  const std::string path = kScratch + "/" + name;
  std::ofstream f(path);
  f << content;
  f.close();
  if (executable) {
    REQUIRE(system(("chmod +x " + path).c_str()) == 0);
  }
  return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("wrap autosense on a constant reports the constant") {
  const std::string data = write_dataset("d10.txt", 10);
  const RunResult r = run(kCli + " wrap --mechanism autosense --dataset " +
                          data +
                          " --blackbox builtin:constant:5 --range list:0..10"
                          " --epsilon 2 --beta 0.1 --seed 7");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mechanism"] == "autosense");
  CHECK(j["result"] == 5.0);
  CHECK(j["profile"] == "paper-faithful");
  CHECK(j["released"].contains("ell"));
  CHECK(j["queries"].get<std::uint64_t>() > 0);
}

TEST_CASE("reports are byte-identical across reruns with the same seed") {
  const std::string data = write_dataset("d12.txt", 12);
  const std::string cmd = kCli +
                          " wrap --mechanism subset-extension --dataset " +
                          data +
                          " --blackbox builtin:count --epsilon 3 --delta 0.05"
                          " --c 1 --unsafe-test-constants --seed 42";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  // A different seed changes the draw.
  const RunResult c = run(cmd + "1");
  CHECK(a.out != c.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["profile"] == "test-constants");
}

TEST_CASE("bottom results exit 0 and say so") {
  const std::string data = write_dataset("d12b.txt", 12);
  // Parity jumps make the stable family empty in the reduced profile.
  const std::string plugin = write_file(
      "parity.sh",
      "#!/bin/sh\nwhile IFS= read -r l; do set -- $l; echo $(( ($# % 2) * 1000 )); done\n",
      true);
  const RunResult r = run(kCli + " wrap --mechanism tahoe --dataset " + data +
                          " --blackbox 'plugin:" + plugin +
                          "' --epsilon 1 --delta 0.05 --c 1"
                          " --unsafe-test-constants --seed 3");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"] == "bottom");
}

TEST_CASE("plugin protocol computes count over the wire") {
  const std::string data = write_dataset("d8.txt", 8);
  const std::string plugin = write_file(
      "count.sh", "#!/bin/sh\nwhile IFS= read -r l; do set -- $l; echo $#; done\n",
      true);
  const std::string direct = run(kCli + " oracle down-sensitivity --dataset " +
                                 data + " --blackbox builtin:count --lambda 3")
                                 .out;
  const RunResult r = run(kCli + " oracle down-sensitivity --dataset " + data +
                          " --blackbox 'plugin:" + plugin + "' --lambda 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == direct);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 3.0);
}

TEST_CASE("garbage and hanging plugins exit 3") {
  const std::string data = write_dataset("d6.txt", 6);
  const std::string garbage = write_file(
      "garbage.sh", "#!/bin/sh\nwhile IFS= read -r l; do echo not-a-number; done\n",
      true);
  const RunResult g = run(kCli + " wrap --mechanism tahoe --dataset " + data +
                          " --blackbox 'plugin:" + garbage +
                          "' --epsilon 1 --delta 0.05 --unsafe-test-constants"
                          " --seed 5");
  CHECK(g.exit_code == 3);
  // The failure report still carries the partial ledger.
  const auto j = nlohmann::json::parse(g.out);
  CHECK(j["error"] == "plugin");
  CHECK(j.contains("queries"));

  const std::string hang =
      write_file("hang.sh", "#!/bin/sh\nread l\nsleep 30\n", true);
  const RunResult h = run(kCli + " wrap --mechanism tahoe --dataset " + data +
                          " --blackbox 'plugin:" + hang +
                          "' --epsilon 1 --delta 0.05 --unsafe-test-constants"
                          " --plugin-timeout 0.3 --seed 5");
  CHECK(h.exit_code == 3);
}

TEST_CASE("parameter and budget errors use distinct exit codes") {
  const std::string data = write_dataset("d6c.txt", 6);
  const RunResult bad = run(kCli + " wrap --mechanism no-such --dataset " +
                            data + " --blackbox builtin:count --seed 1");
  CHECK(bad.exit_code == 2);
  const RunResult tiny = run(kCli + " wrap --mechanism tahoe --dataset " +
                             data +
                             " --blackbox builtin:count --epsilon 1"
                             " --delta 0.05 --budget 10 --seed 1");
  CHECK(tiny.exit_code == 4);
}

TEST_CASE("multiset datasets are adapted before wrapping") {
  const std::string path = kScratch + "/ms.txt";
  {
    std::ofstream f(path);
    f << "5\n5\n7\n7\n7\n";
  }
  const RunResult r = run(kCli + " oracle down-sensitivity --dataset " + path +
                          " --multiset --blackbox builtin:sum-clamped"
                          " --lambda 1");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 7.0);  // dropping one "7" moves the sum the most
  // Without the flag, duplicate ids are rejected.
  const RunResult dup = run(kCli + " oracle down-sensitivity --dataset " +
                            path + " --blackbox builtin:sum-clamped --lambda 1");
  CHECK(dup.exit_code == 2);
}

TEST_CASE("json array datasets load") {
  const std::string path = kScratch + "/arr.json";
  {
    std::ofstream f(path);
    f << "[\"a\", \"b\", \"c\"]\n";
  }
  const RunResult r = run(kCli + " oracle down-sensitivity --dataset " + path +
                          " --blackbox builtin:count --lambda 2");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == 2.0);
}

TEST_CASE("bench aggregates over disjoint seeds") {
  const std::string data = write_dataset("d10b.txt", 10);
  const RunResult r = run(kCli + " bench --mechanism subset-extension"
                          " --dataset " + data +
                          " --blackbox builtin:count --epsilon 3 --delta 0.05"
                          " --unsafe-test-constants --trials 50 --threads 1"
                          " --seed 11");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["trials"] == 50);
  CHECK(j["bottoms"] == 0);
  CHECK(std::abs(j["mean"].get<double>() - 10.0) < 40.0);
}

TEST_SUITE_END();
