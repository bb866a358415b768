#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ct/quadrics.hpp"
#include "ct/staircase.hpp"

namespace ct {

// One chart-local piece of a fixed complete triangle: the monomial ideal of
// the scheme there, and (for fat pieces) the chart-local cubic of the dual
// scheme that enters the modified squaring.
struct IdealPiece {
  Chart chart;
  StairIdeal ideal;
  std::optional<StairIdeal> dual_cubic;
};

struct SupportPoint {
  int label = 0;  // coordinate point index
  int multiplicity = 0;
};

// One of the 31 torus-fixed complete triangles.
struct FixedPoint {
  int id = -1;
  int orbit_type = 0;  // 1..6
  Perm perm = kIdentityPerm;
  std::vector<IdealPiece> primal_pieces;
  std::vector<IdealPiece> dual_pieces;  // populated for the fat types 5, 6
  std::vector<SupportPoint> support;
  QuadricSpace primal_net;
  QuadricSpace dual_net;
};

// the 31 fixed points: the triangle of coordinate points, then six
// permutations of each of the representatives of types 2..6
std::vector<FixedPoint> enumerate_fixed_points();

FixedPoint orbit_representative(int orbit_type);
FixedPoint permute_fixed_point(const FixedPoint& rep, const Perm& perm, int id);

// weight derivations from ideal data; each validates its count
std::vector<LinearForm> derive_E_weights(const FixedPoint& fp);        // 9
std::vector<LinearForm> derive_tangent_weights(const FixedPoint& fp);  // 6
std::vector<LinearForm> derive_taut_weights(const FixedPoint& fp, int d);  // 3
LinearForm derive_H_weight(const FixedPoint& fp);  // determinant rule == support rule

inline constexpr int kBundleCount = 7;  // E, T, O(0..3)^[3], H

struct PointWeights {
  int id = -1;
  int orbit_type = 0;
  Perm perm = kIdentityPerm;
  std::vector<LinearForm> E;        // 9 entries
  std::vector<LinearForm> tangent;  // 6 entries
  std::array<std::vector<LinearForm>, 4> taut;  // 3 entries each
  LinearForm H;
};

using WeightTable = std::vector<PointWeights>;

// weights derived from the ideal data of each of the 31 points
WeightTable derived_weight_table();
// the tables transcribed from the source, expanded over the orbits by
// permuting the representative rows
WeightTable paper_weight_table();

struct WeightMismatch {
  int id = -1;
  std::string bundle;
};

struct CrossCheckReport {
  int comparisons = 0;
  std::vector<WeightMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// multiset comparison of every bundle at every point
CrossCheckReport cross_check_tables(const WeightTable& derived, const WeightTable& paper);
CrossCheckReport cross_check_tables();

bool multiset_equal(std::vector<LinearForm> lhs, std::vector<LinearForm> rhs);

// fault-injection hook: returns a copy with one E entry of one point altered
WeightTable corrupt_one_entry(WeightTable table);

// JSON schema: one record per fixed point
//   {id, orbit_type, perm, weights: {E, T, taut0..taut3, H}},
// each linear form as [coeff_a, coeff_b, coeff_c]
nlohmann::ordered_json weight_table_to_json(const WeightTable& table);
WeightTable weight_table_from_json(const nlohmann::json& j);

nlohmann::ordered_json fixed_points_to_json(const std::vector<FixedPoint>& points);

}  // namespace ct
