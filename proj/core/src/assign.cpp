#include "structmot/assign.hpp"

#include <algorithm>
#include <limits>

#include "structmot/errors.hpp"
#include "structmot/hungarian.hpp"

namespace structmot {

namespace {

AssignmentResult collect(const Matrix& costs, std::vector<std::pair<int, int>> matches) {
  AssignmentResult out;
  std::sort(matches.begin(), matches.end());
  out.matches = std::move(matches);
  std::vector<char> row_used(costs.rows(), 0), col_used(costs.cols(), 0);
  for (const auto& [r, c] : out.matches) {
    row_used[r] = 1;
    col_used[c] = 1;
    out.total_cost += costs.at(r, c);
  }
  for (std::size_t r = 0; r < costs.rows(); ++r)
    if (!row_used[r]) out.unmatched_rows.push_back(static_cast<int>(r));
  for (std::size_t c = 0; c < costs.cols(); ++c)
    if (!col_used[c]) out.unmatched_cols.push_back(static_cast<int>(c));
  return out;
}

}  // namespace

AssignmentResult solve_gated_assignment(const Matrix& costs, const GateConfig& gate) {
  const std::size_t m = costs.rows();
  const std::size_t n = costs.cols();
  if (m == 0 || n == 0) return collect(costs, {});

  const std::size_t N = m + n;
  Matrix aug(N, N, kForbidden);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (costs.at(i, j) < gate.gate) aug.at(i, j) = costs.at(i, j);
  for (std::size_t i = 0; i < m; ++i) aug.at(i, n + i) = gate.gate;
  for (std::size_t j = 0; j < n; ++j) aug.at(m + j, j) = gate.gate;
  for (std::size_t i = m; i < N; ++i)
    for (std::size_t j = n; j < N; ++j) aug.at(i, j) = gate.gate;

  const std::vector<int> row_to_col = solve_square_assignment(aug);
  std::vector<std::pair<int, int>> matches;
  for (std::size_t i = 0; i < m; ++i) {
    const int j = row_to_col[i];
    if (j >= 0 && static_cast<std::size_t>(j) < n)
      matches.emplace_back(static_cast<int>(i), j);
  }
  return collect(costs, std::move(matches));
}

namespace {

struct BruteState {
  const Matrix* costs;
  double gate;
  std::vector<char> col_used;
  std::vector<std::pair<int, int>> current;
  std::vector<std::pair<int, int>> best;
  double best_objective;
  double current_sum;
};

// Rows are considered in order; each row either stays unmatched or takes one
// admissible free column. Objective: sum + gate * (m + n - k).
void recurse(BruteState& s, std::size_t row) {
  const std::size_t m = s.costs->rows();
  const std::size_t n = s.costs->cols();
  if (row == m) {
    const double k = static_cast<double>(s.current.size());
    const double obj = s.current_sum + s.gate * (static_cast<double>(m + n) - k);
    if (obj < s.best_objective ||
        (obj == s.best_objective && s.current < s.best)) {
      s.best_objective = obj;
      s.best = s.current;
    }
    return;
  }
  recurse(s, row + 1);  // leave this row unmatched
  for (std::size_t c = 0; c < n; ++c) {
    if (s.col_used[c]) continue;
    const double cost = s.costs->at(row, c);
    if (cost >= s.gate) continue;
    s.col_used[c] = 1;
    s.current.emplace_back(static_cast<int>(row), static_cast<int>(c));
    s.current_sum += cost;
    recurse(s, row + 1);
    s.current_sum -= cost;
    s.current.pop_back();
    s.col_used[c] = 0;
  }
}

}  // namespace

AssignmentResult brute_force_assignment(const Matrix& costs, const GateConfig& gate) {
  if (std::min(costs.rows(), costs.cols()) > 8)
    throw DataError("brute_force_assignment: instance too large (min dimension > 8)");
  BruteState s{&costs,
               gate.gate,
               std::vector<char>(costs.cols(), 0),
               {},
               {},
               std::numeric_limits<double>::infinity(),
               0.0};
  recurse(s, 0);
  return collect(costs, std::move(s.best));
}

}  // namespace structmot
