#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "ct/exactpoly.hpp"

namespace ct {

// exponent pair (i, j) standing for the monomial u^i v^j in local chart
// coordinates (u, v)
using ExponentPair = std::array<int, 2>;

// A monomial ideal in two local affine coordinates, held by its minimal
// generator list.  Generators are kept minimal (no generator divides another)
// and sorted, so equal ideals compare equal.
class StairIdeal {
 public:
  StairIdeal() = default;  // the zero ideal
  explicit StairIdeal(std::vector<ExponentPair> generators);
  static StairIdeal principal(ExponentPair g) { return StairIdeal({g}); }
  static StairIdeal maximal_power(int n);  // (u, v)^n

  const std::vector<ExponentPair>& generators() const { return gens_; }
  bool is_principal() const { return gens_.size() == 1; }
  bool contains(ExponentPair m) const;  // monomial membership
  bool contains(const StairIdeal& other) const;
  bool is_cofinite() const;

  // staircase cell count; rejects non-cofinite ideals
  int colength() const;
  // the monomials outside the ideal, scanned by v-exponent then u-exponent
  std::vector<ExponentPair> quotient_basis() const;

  bool operator==(const StairIdeal&) const = default;
  std::string str() const;  // "[u^2, u*v^2, v^4]"

 private:
  std::vector<ExponentPair> gens_;
};

std::ostream& operator<<(std::ostream& os, const StairIdeal& ideal);

StairIdeal ideal_sum(const StairIdeal& x, const StairIdeal& y);
StairIdeal ideal_product(const StairIdeal& x, const StairIdeal& y);
StairIdeal ideal_square(const StairIdeal& x);

// I^2 + (gamma) with gamma principal: the degree-2 modified squaring that
// stays flat across fat points (non-fat I already contain gamma in I^2)
StairIdeal modified_square(const StairIdeal& ideal, const StairIdeal& gamma);

// An affine chart of the plane (or the dual plane) centered at a coordinate
// point, carrying the torus weights of its two local coordinates and of the
// nonvanishing homogeneous coordinate.
struct Chart {
  int label = 0;      // index of the nonvanishing coordinate
  bool dual = false;  // chart on the dual plane?
  LinearForm u_weight, v_weight;
  LinearForm coordinate_weight;  // weight of the nonvanishing coordinate itself

  static Chart primal(int label);
  static Chart dual_plane(int label);

  LinearForm monomial_weight(ExponentPair m) const {
    return Int(m[0]) * u_weight + Int(m[1]) * v_weight;
  }
  // weight of the d-th power of the nonvanishing coordinate
  LinearForm trivialization(int d) const { return Int(d) * coordinate_weight; }
};

// Weights of Hom(I, O/I) for a 2-generator local complete intersection:
// wt(m) - wt(g) over quotient basis elements m and generators g.
// Rejects ideals whose generator count is not 2.
std::vector<LinearForm> hom_weights(const StairIdeal& ideal, const Chart& chart);

// Weights of the twisted sections over the staircase:
// trivialization(d) + wt(m) for m in the quotient basis.
std::vector<LinearForm> section_weights(const StairIdeal& ideal, const Chart& chart, int d);

}  // namespace ct
