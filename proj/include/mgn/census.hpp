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
#include <stdexcept>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

/// Weighted fatgraph count by brute force. Graphs are permutation pairs
/// (tau0, tau1) on the half-edge set; the weighted count sum 1/|Aut| equals
/// the number of labeled structures divided by (2E)! by orbit counting.
struct CensusResult {
  Rat count;             // sum over isomorphism classes of 1/|Aut|
  mpz_class structures;  // labeled structures on {1..2E}, all tau1 included
  long long halfEdges = 0;
};

namespace detail {

// Backtracking enumeration for a fixed edge involution. Boundary cycles of
// tau2 are built in order of their minimal elements with the prescribed
// length multiset; tau0 = tau2 after tau1 is constrained on the fly (a fixed
// point of tau0 is a valence-1 vertex, forbidden unless vertices may be
// labeled) and checked at completion for vertex count and connectivity.
class CensusSearch {
 public:
  CensusSearch(std::vector<int> tau1, std::vector<long long> lengths, int nLabels,
               int targetVertices)
      : tau1_(std::move(tau1)),
        nLabels_(nLabels),
        targetV_(targetVertices),
        size_(static_cast<int>(tau1_.size())),
        tau2_(size_, -1) {
    std::sort(lengths.begin(), lengths.end());
    for (long long len : lengths) {
      if (!distinct_.empty() && distinct_.back() == len) {
        ++remaining_.back();
      } else {
        distinct_.push_back(len);
        remaining_.push_back(1);
      }
    }
  }

  unsigned long long run() {
    if (targetV_ < 1 || targetV_ > size_) return 0;
    total_ = 0;
    startCycle(0);
    return total_;
  }

  // The number of distinct cycle-to-boundary-label assignments each
  // enumerated permutation admits.
  mpz_class labelingMultiplier() const {
    mpz_class m = 1;
    for (int c : remaining_) m *= factorialZ(c);
    return m;
  }

 private:
  void startCycle(unsigned used) {
    if (used == (1u << size_) - 1) { finish(); return; }
    int start = 0;
    while (used >> start & 1) ++start;
    for (size_t d = 0; d < distinct_.size(); ++d) {
      if (remaining_[d] == 0) continue;
      --remaining_[d];
      extend(start, start, static_cast<int>(distinct_[d]) - 1, used | (1u << start));
      ++remaining_[d];
    }
  }

  void extend(int start, int current, int stepsLeft, unsigned used) {
    if (stepsLeft == 0) {
      // Close the cycle; an immediate tau0 fixed point appears when
      // tau2(current) == tau1(current).
      if (nLabels_ == 0 && start == tau1_[current]) return;
      tau2_[current] = start;
      startCycle(used);
      tau2_[current] = -1;
      return;
    }
    for (int z = 0; z < size_; ++z) {
      if (used >> z & 1) continue;
      if (nLabels_ == 0 && z == tau1_[current]) continue;
      tau2_[current] = z;
      extend(start, z, stepsLeft - 1, used | (1u << z));
      tau2_[current] = -1;
    }
  }

  void finish() {
    // tau0 = tau2 after tau1: count vertices (cycles) and valence-1 vertices.
    int vertices = 0, valenceOne = 0;
    unsigned seen = 0;
    for (int x = 0; x < size_; ++x) {
      if (seen >> x & 1) continue;
      int len = 0;
      for (int y = x; !(seen >> y & 1); y = tau2_[tau1_[y]]) {
        seen |= 1u << y;
        ++len;
      }
      ++vertices;
      if (len == 1) ++valenceOne;
    }
    if (vertices != targetV_) return;
    if (valenceOne > nLabels_) return;

    // Connectivity of the group generated by the two permutations.
    std::vector<int> parent(size_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = size_;
    auto unite = [&](int a, int b) {
      a = find(a); b = find(b);
      if (a != b) { parent[a] = b; --components; }
    };
    for (int x = 0; x < size_; ++x) {
      unite(x, tau1_[x]);
      unite(x, tau2_[x]);
    }
    if (components != 1) return;

    if (nLabels_ == 0) {
      ++total_;
      return;
    }
    // Injective vertex labelings covering every valence-1 vertex.
    const long long free = vertices - valenceOne;
    const long long pickExtra = nLabels_ - valenceOne;
    if (pickExtra < 0 || pickExtra > free) return;
    mpz_class ways = binomialZ(free, pickExtra) * factorialZ(nLabels_);
    total_ += ways.get_ui();
  }

  std::vector<int> tau1_;
  std::vector<long long> distinct_;
  std::vector<int> remaining_;
  int nLabels_;
  int targetV_;
  int size_;
  std::vector<int> tau2_;
  unsigned long long total_ = 0;
};

inline std::vector<int> canonicalTau1(int size) {
  std::vector<int> t(size);
  for (int i = 0; i < size; ++i) t[i] = i ^ 1;
  return t;
}

inline CensusResult censusCore(int g, const std::vector<long long>& positiveB, int nLabels,
                               int maxHalfEdges) {
  for (long long v : positiveB)
    if (v < 1) throw std::invalid_argument("census: perimeters must be positive");
  const long long totalPerimeter =
      std::accumulate(positiveB.begin(), positiveB.end(), 0LL);
  CensusResult result{Rat(0), 0, totalPerimeter};
  if (totalPerimeter % 2 != 0) return result;
  if (totalPerimeter > maxHalfEdges)
    throw std::invalid_argument("census: total perimeter " + std::to_string(totalPerimeter) +
                                " exceeds the feasibility bound " +
                                std::to_string(maxHalfEdges));
  const int size = static_cast<int>(totalPerimeter);
  const long long edges = totalPerimeter / 2;
  const long long p = static_cast<long long>(positiveB.size());
  const long long targetV = 2 - 2 * g - p + edges;

  CensusSearch search(canonicalTau1(size), positiveB, nLabels,
                      static_cast<int>(targetV));
  const unsigned long long raw = search.run();
  // All fixed-point-free involutions are conjugate, so the canonical tau1
  // stands in for every one of the (2E-1)!! choices.
  result.structures = mpz_class(static_cast<unsigned long>(raw)) *
                      search.labelingMultiplier() * oddDoubleFactorialZ(size - 1);
  result.count = Rat(result.structures, factorialZ(size));
  return result;
}

}  // namespace detail

/// Weighted count of connected labeled fatgraphs of genus g with n boundary
/// components of the given positive lengths and no valence-1 vertices.
inline CensusResult censusN(int g, int n, const std::vector<long long>& b,
                            int maxHalfEdges = 14) {
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("censusN: arity mismatch");
  return detail::censusCore(g, b, 0, maxHalfEdges);
}

/// Weighted count of pointed fatgraphs: b holds p >= 1 positive lengths
/// followed by n-p zeros; the zeros become distinct labeled vertices and
/// every valence-1 vertex must be labeled.
inline CensusResult censusNPointed(int g, int n, const std::vector<long long>& b,
                                   int maxHalfEdges = 14) {
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("censusNPointed: arity mismatch");
  std::vector<long long> positive;
  int zeros = 0;
  for (long long v : b) {
    if (v == 0) {
      ++zeros;
    } else {
      if (zeros > 0)
        throw std::invalid_argument("censusNPointed: zeros must trail the positive lengths");
      positive.push_back(v);
    }
  }
  if (positive.empty())
    throw std::invalid_argument("censusNPointed: at least one positive perimeter required");
  return detail::censusCore(g, positive, zeros, maxHalfEdges);
}

}  // namespace mgn
