#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "structmot/assign.hpp"
#include "structmot/geometry.hpp"
#include "structmot/matrix.hpp"

namespace structmot {

// One detection/trajectory index pair (frame-local indices).
struct PairId {
  int detection = 0;
  int trajectory = 0;
  bool operator==(const PairId&) const = default;
  auto operator<=>(const PairId&) const = default;
};

// Match set accumulated around a seed pair: one-to-one, seed always first.
// admission_costs[k] is the structural cost that admitted pairs[k+1].
struct MatchSet {
  PairId seed;
  std::vector<PairId> pairs;
  std::vector<double> admission_costs;

  std::size_t size() const { return pairs.size(); }
};

struct StructuralConfig {
  // Admission threshold in squared pixels per pair: a candidate is admitted
  // when the structural cost of the enlarged set is below
  // phi_s * (enlarged set size).
  double phi_s = 1.0;
  // Hard cap on the match-set size; 0 means "number of trajectories".
  std::size_t max_set_size = 0;
};

// Centroid-relative displacements of a point set. Displacements sum to zero
// and are invariant under a common translation of the points.
struct DisplacementFrame {
  Point2 centroid;
  std::vector<Point2> displacements;
};

DisplacementFrame relative_displacements(std::span<const Point2> points);

// Sum over paired indices of ||Δd_p − ΔT_q||², with displacements taken about
// the centroids of exactly the paired detections / paired trajectories.
double structural_cost(std::span<const Point2> detections,
                       std::span<const Point2> trajectories,
                       std::span<const PairId> pairing);

// Closed-form location that minimizes the structural cost of
// match_set ∪ {(·, trajectory_index)} over a continuous candidate position:
//   d̂ = T_j + mean over (p,q) in the set of (d_p − T_q).
Point2 predict_candidate_location(const MatchSet& match_set,
                                  std::span<const Point2> detections,
                                  std::span<const Point2> trajectories,
                                  int trajectory_index);

// Heuristic growth of a match set around a fixed seed pair. Each round
// predicts every free trajectory's location from the current set, snaps it to
// the nearest free detection, and admits the candidate pair of minimum
// structural cost while that cost stays under the scaled threshold.
// Deterministic: distance ties pick the lowest detection index, cost ties the
// lexicographically smallest (detection, trajectory) pair.
MatchSet heuristic_search(const PairId& seed,
                          std::span<const Point2> detections,
                          std::span<const Point2> trajectories,
                          const StructuralConfig& cfg);

// Exact minimum-structural-cost one-to-one assignment containing `fixed`,
// for the equal-cardinality case (displacements over the full point sets).
// Throws DataError on cardinality mismatch; unequal frames are what
// heuristic_search is for.
struct FixedPairAssignment {
  std::vector<PairId> pairs;  // sorted by detection index, includes fixed
  double cost = 0.0;
};
FixedPairAssignment fixed_pair_global_assignment(std::span<const Point2> detections,
                                                 std::span<const Point2> trajectories,
                                                 const PairId& fixed);

// Structural modification of a raw cost matrix:
//   C_st(i,j) = (n_max / n_ij²) · Σ_{(p,q) ∈ Θ_ij} C_init(p,q)
// where n_ij = |Θ_ij| and n_max is the largest match-set size present.
// Entries without a match set keep their raw cost.
Matrix modify_cost_matrix(const Matrix& raw,
                          const std::vector<std::vector<std::optional<MatchSet>>>& match_sets);

}  // namespace structmot
