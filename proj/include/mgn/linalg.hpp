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

#include <stdexcept>
#include <string>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

using Matrix = std::vector<std::vector<Rat>>;

/// Thrown when a system has less than full column rank. Carries the columns
/// that received no pivot.
class RankDeficiencyError : public std::runtime_error {
 public:
  RankDeficiencyError(std::string msg, std::vector<int> cols)
      : std::runtime_error(std::move(msg)), deficientColumns(std::move(cols)) {}
  std::vector<int> deficientColumns;
};

namespace detail {

// Row-reduces a working copy; returns pivot column per eliminated row and
// records which original rows were used as pivots.
inline void eliminate(Matrix a, std::vector<int>& pivotCols, std::vector<int>& pivotRows) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<bool> usedRow(rows, false);
  for (int c = 0; c < cols; ++c) {
    int pr = -1;
    for (int r = 0; r < rows; ++r)
      if (!usedRow[r] && !a[r][c].isZero()) { pr = r; break; }
    if (pr < 0) continue;
    usedRow[pr] = true;
    pivotCols.push_back(c);
    pivotRows.push_back(pr);
    const Rat inv = Rat(1) / a[pr][c];
    for (int r = 0; r < rows; ++r) {
      if (r == pr || a[r][c].isZero()) continue;
      const Rat f = a[r][c] * inv;
      for (int j = c; j < cols; ++j) a[r][j] -= f * a[pr][j];
    }
  }
}

}  // namespace detail

inline int rank(const Matrix& a) {
  std::vector<int> pc, pr;
  detail::eliminate(a, pc, pr);
  return static_cast<int>(pc.size());
}

/// Indices of a maximal linearly independent subset of rows (greedy, in row
/// order), together with the pivot columns they realize.
inline std::vector<int> independentRows(const Matrix& a) {
  std::vector<int> pc, pr;
  detail::eliminate(a, pc, pr);
  return pr;
}

/// Solves A x = b exactly for a matrix of full column rank (square or
/// overdetermined-consistent). Throws RankDeficiencyError listing pivotless
/// columns when the rank is deficient.
inline std::vector<Rat> solveExact(Matrix a, std::vector<Rat> b) {
  const int rows = static_cast<int>(a.size());
  if (rows != static_cast<int>(b.size()))
    throw std::invalid_argument("solveExact: rhs size mismatch");
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());

  std::vector<int> pivotColOfRow(rows, -1);
  std::vector<bool> colUsed(cols, false);
  std::vector<bool> rowUsed(rows, false);
  for (int c = 0; c < cols; ++c) {
    int pr = -1;
    for (int r = 0; r < rows; ++r)
      if (!rowUsed[r] && !a[r][c].isZero()) { pr = r; break; }
    if (pr < 0) continue;
    rowUsed[pr] = true;
    colUsed[c] = true;
    pivotColOfRow[pr] = c;
    const Rat inv = Rat(1) / a[pr][c];
    for (int j = c; j < cols; ++j) a[pr][j] *= inv;
    b[pr] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pr || a[r][c].isZero()) continue;
      const Rat f = a[r][c];
      for (int j = c; j < cols; ++j) a[r][j] -= f * a[pr][j];
      b[r] -= f * b[pr];
    }
  }

  std::vector<int> deficient;
  for (int c = 0; c < cols; ++c)
    if (!colUsed[c]) deficient.push_back(c);
  if (!deficient.empty()) {
    std::string msg = "solveExact: rank-deficient system; pivotless columns:";
    for (int c : deficient) msg += " " + std::to_string(c);
    throw RankDeficiencyError(msg, deficient);
  }
  // Leftover rows must have been annihilated, otherwise the system is
  // inconsistent.
  for (int r = 0; r < rows; ++r) {
    if (pivotColOfRow[r] >= 0) continue;
    if (!b[r].isZero())
      throw std::invalid_argument("solveExact: inconsistent system");
  }

  std::vector<Rat> x(cols, Rat(0));
  for (int r = 0; r < rows; ++r)
    if (pivotColOfRow[r] >= 0) x[pivotColOfRow[r]] = b[r];
  return x;
}

}  // namespace mgn
