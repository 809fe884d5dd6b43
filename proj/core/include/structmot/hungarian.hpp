#pragma once

#include <vector>

#include "structmot/matrix.hpp"

namespace structmot {

// Sentinel for forbidden cells. Large but finite so potential updates stay
// well inside double range.
inline constexpr double kForbidden = 1e30;

// Exact minimum-cost perfect matching on a square cost matrix
// (shortest augmenting path with potentials, O(n^3)).
// Returns col index assigned to each row. Cells >= kForbiden are never used
// as long as some finite perfect matching exists.
std::vector<int> solve_square_assignment(const Matrix& cost);

}  // namespace structmot
