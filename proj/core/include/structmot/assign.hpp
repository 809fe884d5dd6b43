#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "structmot/matrix.hpp"

namespace structmot {

// Non-assignment gate. A detection/trajectory pair whose cost is >= gate is
// never matched; staying unmatched costs gate per left-over row or column
// slot, so a pair is taken exactly when its cost beats the gate.
struct GateConfig {
  double gate = 1.0;
};

// One-to-one partial matching of matrix rows (detections) to columns
// (trajectories). Every row/col index appears exactly once across
// matches/unmatched lists. total_cost sums the matched entries only.
struct AssignmentResult {
  std::vector<std::pair<int, int>> matches;  // (row, col), sorted by row
  std::vector<int> unmatched_rows;
  std::vector<int> unmatched_cols;
  double total_cost = 0.0;

  // Cardinality-aware objective both solvers minimize:
  //   sum(matched costs) + gate * (rows + cols - matches)
  // Uniform shifts of all entries and the gate change it by a constant, so
  // the argmin is shift-invariant.
  double objective(double gate, std::size_t rows, std::size_t cols) const {
    return total_cost + gate * (static_cast<double>(rows + cols) - static_cast<double>(matches.size()));
  }
};

// Exact gated assignment: Hungarian on the (rows+cols)-square augmented
// matrix where each row and each column owns a dummy of cost `gate` and
// dummy-dummy cells also cost `gate`. Entries >= gate are forbidden.
AssignmentResult solve_gated_assignment(const Matrix& costs, const GateConfig& gate);

// Exhaustive reference: enumerates every gated partial matching and returns
// the minimum-objective one (ties broken by lexicographic match list).
// Refuses instances with min(rows, cols) > 8.
AssignmentResult brute_force_assignment(const Matrix& costs, const GateConfig& gate);

}  // namespace structmot
