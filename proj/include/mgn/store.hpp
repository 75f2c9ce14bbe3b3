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

#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mgn/eulerchi.hpp"
#include "mgn/levels.hpp"
#include "mgn/quasipoly.hpp"
#include "mgn/recursion.hpp"

namespace mgn {

/// Persistent cache of fitted polynomials, the sample values they were
/// fitted from, and the Euler characteristic tables. A single JSON document
/// with every rational as a "p/q" string. A version mismatch discards the
/// file; corrupted contents fail loudly.
struct ValueStore {
  static constexpr int kSchemaVersion = 1;

  int maxLevel = 0;
  PolyMap nbar;
  PolyMap smooth;  // the uncompactified counts, recovered by inversion
  std::map<LevelKey, std::vector<std::pair<std::vector<long long>, Rat>>> samples;
  std::map<std::pair<int, int>, Rat> chiOpenTable;
  std::map<std::pair<int, int>, Rat> chiClosedTable;

  bool hasLevel(LevelKey key) const { return nbar.count(key) && smooth.count(key); }

  nlohmann::ordered_json toJson() const {
    nlohmann::ordered_json j;
    j["schemaVersion"] = kSchemaVersion;
    j["maxLevel"] = maxLevel;
    auto polyBlock = [](const PolyMap& m) {
      nlohmann::ordered_json block = nlohmann::ordered_json::object();
      for (const auto& [key, qp] : m)
        block[std::to_string(key.g) + "," + std::to_string(key.n)] = qp.toJson();
      return block;
    };
    j["polynomials"]["nbar"] = polyBlock(nbar);
    j["polynomials"]["n"] = polyBlock(smooth);
    j["samples"] = nlohmann::ordered_json::object();
    for (const auto& [key, list] : samples) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& [b, value] : list) {
        nlohmann::ordered_json e;
        e["b"] = b;
        e["value"] = value.str();
        arr.push_back(e);
      }
      j["samples"][std::to_string(key.g) + "," + std::to_string(key.n)] = arr;
    }
    auto chiBlock = [](const std::map<std::pair<int, int>, Rat>& m) {
      nlohmann::ordered_json block = nlohmann::ordered_json::object();
      for (const auto& [key, value] : m)
        block[std::to_string(key.first) + "," + std::to_string(key.second)] = value.str();
      return block;
    };
    j["chi"]["open"] = chiBlock(chiOpenTable);
    j["chi"]["closed"] = chiBlock(chiClosedTable);
    return j;
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("ValueStore: cannot write " + path);
    out << toJson().dump(1) << "\n";
  }

  /// Parses and revalidates a cache file. Returns nullopt if the file is
  /// absent or carries a different schema version; throws on corruption.
  static std::optional<ValueStore> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schemaVersion").get<int>() != kSchemaVersion) return std::nullopt;

    ValueStore store;
    store.maxLevel = j.at("maxLevel").get<int>();
    auto parseKey = [](const std::string& s) {
      const auto comma = s.find(',');
      return LevelKey{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    };
    for (const auto& [ks, qj] : j.at("polynomials").at("nbar").items())
      store.nbar.emplace(parseKey(ks), QuasiPoly::fromJson(qj));
    for (const auto& [ks, qj] : j.at("polynomials").at("n").items())
      store.smooth.emplace(parseKey(ks), QuasiPoly::fromJson(qj));
    for (const auto& [ks, arr] : j.at("samples").items()) {
      auto& list = store.samples[parseKey(ks)];
      for (const auto& e : arr)
        list.emplace_back(e.at("b").get<std::vector<long long>>(),
                          Rat::fromString(e.at("value").get<std::string>()));
    }
    for (const auto& [ks, v] : j.at("chi").at("open").items()) {
      const auto comma = ks.find(',');
      store.chiOpenTable[{std::stoi(ks.substr(0, comma)), std::stoi(ks.substr(comma + 1))}] =
          Rat::fromString(v.get<std::string>());
    }
    for (const auto& [ks, v] : j.at("chi").at("closed").items()) {
      const auto comma = ks.find(',');
      store.chiClosedTable[{std::stoi(ks.substr(0, comma)), std::stoi(ks.substr(comma + 1))}] =
          Rat::fromString(v.get<std::string>());
    }

    store.revalidate();
    return store;
  }

  /// Every stored polynomial must reproduce three of its stored samples,
  /// and no level may be present without its prerequisites.
  void revalidate() const {
    for (const auto& [key, qp] : nbar) {
      auto it = samples.find(key);
      if (it == samples.end() || it->second.size() < 3)
        throw std::runtime_error("ValueStore: missing samples for " + key.str());
      for (size_t i = 0; i < 3; ++i) {
        const auto& [b, value] = it->second[i];
        if (qp.evaluate(b) != value)
          throw std::runtime_error("ValueStore: stored polynomial for " + key.str() +
                                   " disagrees with its stored samples");
      }
    }
    for (const auto& [key, qp] : nbar)
      for (const LevelKey& lower : levelsUpTo(key.level() - 1))
        if (!nbar.count(lower))
          throw std::runtime_error("ValueStore: " + key.str() +
                                   " present without prerequisite " + lower.str());
  }
};

}  // namespace mgn
