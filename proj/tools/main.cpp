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

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgn/mgn.hpp"

namespace {

using nlohmann::ordered_json;

std::string defaultCachePath() {
  const char* env = std::getenv("MGN_CACHE");
  return env ? std::string(env) : std::string();
}

// Loads the cache when one is configured and extends it to the requested
// level in memory. Only `fit` writes the cache back.
mgn::ValueStore ensureStore(int level, const std::string& cachePath) {
  mgn::ValueStore store;
  if (!cachePath.empty()) {
    if (auto loaded = mgn::ValueStore::load(cachePath)) store = std::move(*loaded);
  }
  if (store.maxLevel < level || !store.hasLevel(mgn::LevelKey{0, 3}))
    store = mgn::pipelineRun(level, std::move(store));
  return store;
}

std::vector<long long> parseBList(const std::string& csv) {
  std::vector<long long> b;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("--b", "empty entry in perimeter list");
    b.push_back(std::stoll(item));
  }
  if (b.empty()) throw CLI::ValidationError("--b", "empty perimeter list");
  return b;
}

const mgn::QuasiPoly& selectPoly(const mgn::ValueStore& store, const std::string& kind,
                                 mgn::LevelKey key) {
  const auto& map = kind == "n" ? store.smooth : store.nbar;
  auto it = map.find(key);
  if (it == map.end()) throw std::runtime_error("no fitted polynomial for " + key.str());
  return it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice point counts of moduli spaces of curves"};
  app.require_subcommand(1);

  std::string cachePath = defaultCachePath();

  // fit
  auto* fit = app.add_subcommand("fit", "Run the fit pipeline in level order");
  int fitLevelCap = 5;
  fit->add_option("--max-level", fitLevelCap, "Largest complexity level 2g-2+n to fit");
  fit->add_option("--cache", cachePath, "Cache file to read and write");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a count at integer perimeters");
  int eg = 0, en = 0;
  std::string ebl, ekind = "nbar";
  eval->add_option("--g", eg)->required();
  eval->add_option("--n", en)->required();
  eval->add_option("--b", ebl, "Comma-separated perimeters")->required();
  eval->add_option("--kind", ekind)->check(CLI::IsMember({"nbar", "n"}));
  eval->add_option("--cache", cachePath);

  // poly
  auto* poly = app.add_subcommand("poly", "Print a fitted parity-class polynomial");
  int pg = 0, pn = 0, pk = 0;
  std::string pkind = "nbar", pformat = "text";
  poly->add_option("--g", pg)->required();
  poly->add_option("--n", pn)->required();
  poly->add_option("--k", pk, "Number of odd perimeters")->required();
  poly->add_option("--kind", pkind)->check(CLI::IsMember({"nbar", "n"}));
  poly->add_option("--format", pformat)->check(CLI::IsMember({"text", "json"}));
  poly->add_option("--cache", cachePath);

  // dualgraphs
  auto* dual = app.add_subcommand("dualgraphs", "Enumerate stable dual graphs");
  int dg = 0, dn = 0;
  bool dlist = false;
  dual->add_option("--g", dg)->required();
  dual->add_option("--n", dn)->required();
  dual->add_flag("--list", dlist, "Emit every graph instead of the summary");

  // census
  auto* census = app.add_subcommand("census", "Brute-force weighted fatgraph count");
  int cg = 0, cn = 0, cmax = 14;
  std::string cbl;
  census->add_option("--g", cg)->required();
  census->add_option("--n", cn)->required();
  census->add_option("--b", cbl, "Comma-separated perimeters; trailing zeros = labeled vertices")
      ->required();
  census->add_option("--max-halfedges", cmax, "Feasibility bound on the total perimeter");

  // chi
  auto* chi = app.add_subcommand("chi", "Orbifold Euler characteristics");
  int xg = 0, xn = 0;
  bool xopen = false, xclosed = false;
  chi->add_option("--g", xg)->required();
  chi->add_option("--n", xn)->required();
  chi->add_flag("--open", xopen, "Open moduli space only");
  chi->add_flag("--closed", xclosed, "Compactified moduli space only");
  chi->add_option("--cache", cachePath);

  // series
  auto* series = app.add_subcommand("series", "Euler characteristic generating series");
  std::string which;
  int order = 5;
  series->add_option("--which", which)->required()->check(CLI::IsMember({"f0", "f1", "pde"}));
  series->add_option("--order", order, "Truncation order");
  series->add_option("--cache", cachePath);

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-theorem verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "string", "dilaton", "top", "const", "statesum",
                             "census", "table"}));
  verify->add_option("--cache", cachePath);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fit) {
      mgn::ValueStore store = ensureStore(fitLevelCap, cachePath);
      if (!cachePath.empty()) store.save(cachePath);
      std::string levels;
      for (const auto& [key, qp] : store.nbar) levels += key.str() + " ";
      std::cout << "levels: " << levels << "\n";
      std::cout << "maxLevel: " << store.maxLevel << "\n";
      std::cout << "cache: " << (cachePath.empty() ? "(none)" : cachePath) << "\n";
    } else if (*eval) {
      const std::vector<long long> b = parseBList(ebl);
      if (static_cast<int>(b.size()) != en)
        throw std::runtime_error("--b holds " + std::to_string(b.size()) +
                                 " entries but --n is " + std::to_string(en));
      const mgn::LevelKey key{eg, en};
      mgn::ValueStore store = ensureStore(key.level(), cachePath);
      std::cout << selectPoly(store, ekind, key).evaluate(b).str() << "\n";
    } else if (*poly) {
      const mgn::LevelKey key{pg, pn};
      mgn::ValueStore store = ensureStore(key.level(), cachePath);
      const mgn::QuasiPoly& qp = selectPoly(store, pkind, key);
      if (pformat == "json") {
        std::cout << qp.cosetJson(pk).dump() << "\n";
      } else {
        std::cout << toString(qp.coset(pk)) << "\n";
      }
    } else if (*dual) {
      const auto graphs = mgn::enumerateDualGraphs(dg, dn);
      if (dlist) {
        ordered_json arr = ordered_json::array();
        for (const auto& graph : graphs) arr.push_back(graph.toJson());
        std::cout << arr.dump(1) << "\n";
      } else {
        ordered_json j;
        j["count"] = graphs.size();
        std::vector<long long> orders;
        for (const auto& graph : graphs) orders.push_back(graph.autOrder);
        std::sort(orders.begin(), orders.end());
        j["autOrders"] = orders;
        std::cout << j.dump() << "\n";
      }
    } else if (*census) {
      const std::vector<long long> b = parseBList(cbl);
      if (static_cast<int>(b.size()) != cn)
        throw std::runtime_error("--b holds " + std::to_string(b.size()) +
                                 " entries but --n is " + std::to_string(cn));
      const bool pointed = std::find(b.begin(), b.end(), 0LL) != b.end();
      const mgn::CensusResult r = pointed ? mgn::censusNPointed(cg, cn, b, cmax)
                                          : mgn::censusN(cg, cn, b, cmax);
      ordered_json j;
      j["count"] = r.count.str();
      j["structures"] = std::stoull(r.structures.get_str());
      j["halfEdges"] = r.halfEdges;
      std::cout << j.dump() << "\n";
    } else if (*chi) {
      if (!mgn::LevelKey{xg, xn}.stable()) throw std::runtime_error("unstable (g,n)");
      auto closedValue = [&]() {
        const int level = std::max(1, 2 * xg - 1);
        mgn::ValueStore store = ensureStore(level, cachePath);
        const int fittedDepth = std::max(1, store.maxLevel - 2 * xg + 2);
        const int extra = std::max(0, xn - fittedDepth);
        return mgn::chiFromStore(store, xg, extra).closed(xg, xn);
      };
      if (xopen && !xclosed) {
        std::cout << mgn::chiOpen(xg, xn).str() << "\n";
      } else if (xclosed && !xopen) {
        std::cout << closedValue().str() << "\n";
      } else {
        ordered_json j;
        j["open"] = mgn::chiOpen(xg, xn).str();
        j["closed"] = closedValue().str();
        std::cout << j.dump() << "\n";
      }
    } else if (*series) {
      if (which == "f0") {
        std::cout << mgn::f0Series(order).str() << "\n";
      } else if (which == "f1") {
        mgn::ValueStore store = ensureStore(1, cachePath);
        const mgn::Rat seed = store.nbar.at(mgn::LevelKey{1, 1}).constantTerm();
        std::cout << mgn::f1Series(order, seed).str() << "\n";
      } else {
        const int level = std::max(1, 2 * order - 1);
        mgn::ValueStore store = ensureStore(level, cachePath);
        const mgn::ChiTable table = mgn::ChiTable::build(
            order, [&](int) { return order + 3; },
            [&](int g) { return store.nbar.at(mgn::LevelKey{g, 1}).constantTerm(); });
        std::cout << mgn::pdeResidual(order, order, table).str() << "\n";
      }
    } else if (*verify) {
      mgn::ValueStore store = ensureStore(5, cachePath);
      std::vector<std::string> names;
      if (suite == "all") {
        names = {"table", "string", "dilaton", "top", "const", "statesum", "census"};
      } else {
        names = {suite};
      }
      const mgn::SuiteReport report = mgn::runSuites(names, store);
      ordered_json j;
      j["suites"] = ordered_json::object();
      for (const auto& [name, checks] : report) {
        ordered_json arr = ordered_json::array();
        for (const mgn::Check& c : checks) {
          ordered_json cj;
          cj["name"] = c.name;
          cj["pass"] = c.pass;
          if (!c.pass) cj["detail"] = c.detail;
          arr.push_back(cj);
        }
        j["suites"][name] = arr;
      }
      const bool pass = mgn::allPass(report);
      j["pass"] = pass;
      std::cout << j.dump(1) << "\n";
      return pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
