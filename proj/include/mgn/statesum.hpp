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

#include <functional>
#include <stdexcept>

#include "mgn/dualgraph.hpp"
#include "mgn/quasipoly.hpp"
#include "mgn/recursion.hpp"

namespace mgn {

namespace detail {

// Contribution of one dual graph to the parity class k: the product over
// vertices of the smooth-count polynomial with the vertex's tails as
// variables and a zero for every edge-end, divided by the automorphism
// order. Globally, tails 1..k are the odd slots.
inline Poly graphTermPoly(const DualGraph& graph, int n, int k, const PolyMap& nStore) {
  Poly term = Poly::constant(n, Rat(1, graph.autOrder));
  for (int vi = 0; vi < static_cast<int>(graph.vertices.size()); ++vi) {
    const auto& vert = graph.vertices[vi];
    const LevelKey sig{vert.genus, graph.valence(vi)};
    if (!sig.stable())
      throw std::logic_error("state sum: unstable vertex signature " + sig.str());
    auto it = nStore.find(sig);
    if (it == nStore.end())
      throw std::runtime_error("state sum: missing smooth count for vertex " + sig.str());
    std::vector<QuasiPoly::Arg> args;
    args.reserve(sig.n);
    for (int t : vert.tails) args.push_back(QuasiPoly::Arg::var(t - 1, t <= k));
    for (int z = static_cast<int>(vert.tails.size()); z < sig.n; ++z)
      args.push_back(QuasiPoly::Arg::constant(0));
    term = term * it->second.specialize(n, args);
  }
  return term;
}

}  // namespace detail

/// Assembles the compactified count of type (g,n) as the sum over all dual
/// graphs of the product of smooth vertex counts (edge-ends at zero) divided
/// by the graph automorphism order.
inline QuasiPoly stateSumNbar(int g, int n, const PolyMap& nStore) {
  const auto graphs = enumerateDualGraphs(g, n);
  QuasiPoly result(g, n, 3 * g - 3 + n);
  for (int k = 0; k <= n; k += 2) {
    Poly sum(n);
    for (const auto& graph : graphs) sum += detail::graphTermPoly(graph, n, k, nStore);
    result.setCoset(k, std::move(sum));
  }
  return result;
}

/// Recovers the smooth count: the compactified count minus every boundary
/// stratum (graphs with at least one edge). Well-founded because each such
/// vertex has smaller genus, or equal genus with fewer special points.
inline QuasiPoly invertStateSum(int g, int n, const QuasiPoly& nbar, const PolyMap& nStore) {
  if (nbar.g() != g || nbar.n() != n)
    throw std::invalid_argument("invertStateSum: type mismatch");
  const auto graphs = enumerateDualGraphs(g, n);
  QuasiPoly result(g, n, 3 * g - 3 + n);
  for (int k = 0; k <= n; k += 2) {
    Poly sum = nbar.coset(k);
    for (const auto& graph : graphs) {
      if (graph.isSmooth()) continue;
      sum -= detail::graphTermPoly(graph, n, k, nStore);
    }
    result.setCoset(k, std::move(sum));
  }
  return result;
}

/// Euler characteristic of the compactified moduli space via the
/// stratification: sum over dual graphs of the product of open-moduli Euler
/// characteristics of the vertices over the automorphism order.
inline Rat chiCompactifiedViaStrata(int g, int n,
                                    const std::function<Rat(int, int)>& chiOpen) {
  Rat total(0);
  for (const auto& graph : enumerateDualGraphs(g, n)) {
    Rat term(1, graph.autOrder);
    for (int vi = 0; vi < static_cast<int>(graph.vertices.size()); ++vi)
      term *= chiOpen(graph.vertices[vi].genus, graph.valence(vi));
    total += term;
  }
  return total;
}

}  // namespace mgn
