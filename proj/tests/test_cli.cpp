// Copyright 2026 The mgn Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef MGN_CLI_PATH
#error "MGN_CLI_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
  int exitCode = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(MGN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempFile {
  explicit TempFile(const std::string& name)
      : path(std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

}  // namespace

TEST_CASE("eval prints exact rationals", "[cli]") {
  CHECK(run("eval --g 1 --n 2 --b 2,2").out == "17/12\n");
  CHECK(run("eval --g 0 --n 3 --b 1,1,1").out == "0\n");
  CHECK(run("eval --g 0 --n 4 --b 2,2,2,2").out == "6\n");
  CHECK(run("eval --g 1 --n 1 --b 4 --kind n").out == "1/4\n");
}

TEST_CASE("chi subcommand", "[cli]") {
  CHECK(run("chi --g 0 --n 5 --closed").out == "7\n");
  CHECK(run("chi --g 1 --n 1 --open").out == "-1/12\n");
  const auto both = run("chi --g 1 --n 2");
  const auto j = nlohmann::json::parse(both.out);
  CHECK(j.at("open").get<std::string>() == "1/12");
  CHECK(j.at("closed").get<std::string>() == "1/2");
}

TEST_CASE("census and dualgraphs emit JSON", "[cli]") {
  const auto r = run("census --g 1 --n 1 --b 4");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("count").get<std::string>() == "1/4");
  CHECK(j.at("halfEdges").get<long long>() == 4);
  CHECK(j.at("structures").get<long long>() == 6);

  const auto d = run("dualgraphs --g 1 --n 2");
  const auto dj = nlohmann::json::parse(d.out);
  CHECK(dj.at("count").get<int>() == 5);
  CHECK(dj.at("autOrders") == nlohmann::json({1, 1, 2, 2, 2}));

  const auto list = run("dualgraphs --g 1 --n 1 --list");
  CHECK(nlohmann::json::parse(list.out).size() == 2);
}

TEST_CASE("poly subcommand formats", "[cli]") {
  CHECK(run("poly --g 1 --n 1 --k 0").out == "1/48*b1^2 + 5/12\n");
  const auto j = nlohmann::json::parse(run("poly --g 1 --n 1 --k 0 --format json").out);
  CHECK(j.at("g") == 1);
  CHECK(j.at("k") == 0);
  CHECK(j.at("terms").size() == 2);
}

TEST_CASE("series subcommand", "[cli]") {
  CHECK(run("series --which f0 --order 5").out ==
        "x + 1/2*x^2 + 1/3*x^3 + 7/24*x^4 + 17/60*x^5\n");
  CHECK(run("series --which f1 --order 2").out == "5/12 + 1/2*x + 17/24*x^2\n");
  CHECK(run("series --which pde --order 1").out == "0\n");
}

TEST_CASE("warm and cold caches give byte-identical output", "[cli]") {
  TempFile cache("mgn_cli_cache.json");
  const std::string cold = run("eval --g 1 --n 2 --b 2,2 --cache " + cache.path).out;
  const auto fit = run("fit --max-level 2 --cache " + cache.path);
  CHECK(fit.exitCode == 0);
  const std::string warm = run("eval --g 1 --n 2 --b 2,2 --cache " + cache.path).out;
  CHECK(cold == warm);
  CHECK(cold == "17/12\n");
  const std::string poly1 = run("poly --g 1 --n 2 --k 0 --format json --cache " + cache.path).out;
  const std::string poly2 = run("poly --g 1 --n 2 --k 0 --format json").out;
  CHECK(poly1 == poly2);
}

TEST_CASE("errors exit nonzero", "[cli]") {
  CHECK(run("eval --g 0 --n 2 --b 1,1").exitCode != 0);
  CHECK(run("census --g 0 --n 3 --b 10,10,10").exitCode != 0);
  CHECK(run("eval --g 0 --n 4 --b 1,2").exitCode != 0);
}
