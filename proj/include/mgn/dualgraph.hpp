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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgn/levels.hpp"
#include "mgn/rational.hpp"

namespace mgn {

/// Boundary stratum graph of type (g,n): one vertex per irreducible
/// component with its geometric genus, one edge per node (loops and parallel
/// edges allowed), one labeled tail per marked point. Stability: genus-0
/// vertices have valence >= 3 and genus-1 vertices have valence >= 1, where
/// valence counts edge-ends plus tails.
struct DualGraph {
  struct Vertex {
    int genus = 0;
    std::vector<int> tails;  // sorted labels in 1..n
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // sorted pairs v <= w; loops v == w
  long long autOrder = 1;

  int valence(int v) const {
    int d = static_cast<int>(vertices[v].tails.size());
    for (const auto& [a, b] : edges) {
      if (a == v) ++d;
      if (b == v) ++d;
    }
    return d;
  }

  bool isSmooth() const { return edges.empty(); }

  nlohmann::ordered_json toJson() const {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : vertices) {
      nlohmann::ordered_json vj;
      vj["genus"] = v.genus;
      vj["tails"] = v.tails;
      j["vertices"].push_back(vj);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : edges) j["edges"].push_back({a, b});
    j["autOrder"] = autOrder;
    return j;
  }
};

namespace detail {

inline std::vector<std::vector<int>> edgeMultiplicity(const DualGraph& g) {
  const int v = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> m(v, std::vector<int>(v, 0));
  for (const auto& [a, b] : g.edges) {
    ++m[a][b];
    if (a != b) ++m[b][a];
  }
  return m;
}

inline bool isConnected(int vcount, const std::vector<std::pair<int, int>>& edges) {
  if (vcount <= 1) return true;
  std::vector<int> parent(vcount);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vcount;
  for (const auto& [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) { parent[ra] = rb; --components; }
  }
  return components == 1;
}

inline std::string encodeUnder(const DualGraph& g, const std::vector<int>& perm) {
  // perm maps old vertex index to new position.
  std::string s;
  const int v = static_cast<int>(g.vertices.size());
  std::vector<int> inv(v);
  for (int i = 0; i < v; ++i) inv[perm[i]] = i;
  for (int pos = 0; pos < v; ++pos) {
    const auto& vert = g.vertices[inv[pos]];
    s += "v" + std::to_string(vert.genus) + ":";
    for (int t : vert.tails) s += std::to_string(t) + ",";
    s += ";";
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges)
    es.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
  std::sort(es.begin(), es.end());
  for (const auto& [a, b] : es)
    s += "e" + std::to_string(a) + "-" + std::to_string(b) + ";";
  return s;
}

inline std::string canonicalForm(const DualGraph& g) {
  const int v = static_cast<int>(g.vertices.size());
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = encodeUnder(g, perm);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// Order of the automorphism group acting on half-edges: graph isomorphisms
/// to itself preserving vertex genera and fixing every tail, times the flips
/// of loops and the interchanges of parallel edges they leave free.
inline long long autOrder(const DualGraph& g) {
  const int v = static_cast<int>(g.vertices.size());
  const auto mult = detail::edgeMultiplicity(g);
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  long long vertexAutos = 0;
  do {
    bool ok = true;
    for (int i = 0; i < v && ok; ++i)
      ok = g.vertices[perm[i]].genus == g.vertices[i].genus &&
           g.vertices[perm[i]].tails == g.vertices[i].tails;
    for (int i = 0; i < v && ok; ++i)
      for (int j = i; j < v && ok; ++j)
        ok = mult[perm[i]][perm[j]] == mult[i][j];
    if (ok) ++vertexAutos;
  } while (std::next_permutation(perm.begin(), perm.end()));

  long long order = vertexAutos;
  for (int i = 0; i < v; ++i) {
    const int loops = mult[i][i];
    for (int l = 1; l <= loops; ++l) order *= 2 * l;  // 2^loops * loops!
    for (int j = i + 1; j < v; ++j)
      for (int m = 2; m <= mult[i][j]; ++m) order *= m;
  }
  return order;
}

/// All stable dual graphs of type (g,n) up to isomorphism, each with its
/// automorphism order. Generation sweeps edge count, vertex count, genus
/// distributions and tail assignments, deduplicating by a canonical string.
inline std::vector<DualGraph> enumerateDualGraphs(int g, int n) {
  if (!LevelKey{g, n}.stable())
    throw std::invalid_argument("enumerateDualGraphs: unstable type");
  static std::map<std::pair<int, int>, std::vector<DualGraph>> cache;
  if (auto it = cache.find({g, n}); it != cache.end()) return it->second;

  std::vector<DualGraph> result;
  std::set<std::string> seen;
  const int maxEdges = 3 * g - 3 + n;
  // Every stable vertex contributes at least 1 to the additive total
  // 2g-2+n = sum of per-vertex 2h-2+valence, so V is bounded by the level.
  const int maxVertices = 2 * g - 2 + n;

  for (int e = 0; e <= maxEdges; ++e) {
    for (int v = 1; v <= std::min(e + 1, maxVertices); ++v) {
      const int betti = e - v + 1;
      if (betti < 0) continue;
      const int genusLeft = g - betti;
      if (genusLeft < 0) continue;

      // Edge multisets as non-decreasing sequences of vertex pairs.
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < v; ++a)
        for (int b = a; b < v; ++b) pairs.emplace_back(a, b);
      std::vector<int> pick(e, 0);
      std::vector<std::pair<int, int>> edges(e);
      auto emitGraphs = [&]() {
        for (int i = 0; i < e; ++i) edges[i] = pairs[pick[i]];
        if (!detail::isConnected(v, edges)) return;
        std::vector<int> degree(v, 0);
        for (const auto& [a, b] : edges) { ++degree[a]; ++degree[b]; }

        // Genus distributions over vertices.
        std::vector<int> genus(v, 0);
        auto genusRec = [&](auto&& self, int pos, int left) -> void {
          if (pos == v - 1) {
            genus[pos] = left;
            // Tail assignments, pruned by outstanding stability deficits.
            std::vector<int> tailsNeeded(v);
            int needed = 0;
            for (int i = 0; i < v; ++i) {
              int minVal = genus[i] == 0 ? 3 : (genus[i] == 1 ? 1 : 0);
              tailsNeeded[i] = std::max(0, minVal - degree[i]);
              needed += tailsNeeded[i];
            }
            if (needed > n) return;
            std::vector<int> owner(n, 0);
            std::vector<int> need = tailsNeeded;
            auto tailRec = [&](auto&& tself, int label, int deficit) -> void {
              if (deficit > n - label) return;
              if (label == n) {
                DualGraph dg;
                dg.vertices.resize(v);
                for (int i = 0; i < v; ++i) dg.vertices[i].genus = genus[i];
                for (int t = 0; t < n; ++t) dg.vertices[owner[t]].tails.push_back(t + 1);
                dg.edges = edges;
                std::string canon = detail::canonicalForm(dg);
                if (seen.insert(canon).second) {
                  dg.autOrder = autOrder(dg);
                  result.push_back(std::move(dg));
                }
                return;
              }
              for (int i = 0; i < v; ++i) {
                owner[label] = i;
                const int dec = need[i] > 0 ? 1 : 0;
                need[i] -= dec;
                tself(tself, label + 1, deficit - dec);
                need[i] += dec;
              }
            };
            tailRec(tailRec, 0, needed);
            return;
          }
          for (int h = 0; h <= left; ++h) {
            genus[pos] = h;
            self(self, pos + 1, left - h);
          }
        };
        genusRec(genusRec, 0, genusLeft);
      };
      auto pickRec = [&](auto&& self, int pos, int minIdx) -> void {
        if (pos == e) { emitGraphs(); return; }
        for (int idx = minIdx; idx < static_cast<int>(pairs.size()); ++idx) {
          pick[pos] = idx;
          self(self, pos + 1, idx);
        }
      };
      if (e == 0) {
        if (v == 1) emitGraphs();
      } else {
        pickRec(pickRec, 0, 0);
      }
    }
  }

  cache.emplace(std::make_pair(g, n), result);
  return result;
}

}  // namespace mgn
