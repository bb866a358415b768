#pragma once

#include <array>
#include <string>

#include "ct/quadrics.hpp"
#include "ct/rational.hpp"

namespace ct {

// The twelve first-order deformation parameters of the distinguished complete
// triangle (fat point; curvilinear dual scheme inside a line): six for the
// primal net, three free cubic-generator parameters, three for the dual net.
inline constexpr int kDeformParams = 12;

enum DeformParam {
  kAlpha1 = 0,
  kBeta1 = 1,
  kAlpha2 = 2,
  kBeta2 = 3,
  kAlpha3 = 4,
  kBeta3 = 5,
  kGamma1 = 6,
  kGamma2 = 7,
  kGamma3 = 8,
  kDelta1 = 9,
  kDelta2 = 10,
  kDelta3 = 11,
};

extern const std::array<const char*, kDeformParams> kDeformParamNames;

// eps parts are linear forms in the twelve parameters
using ParamLin = Eigen::Matrix<Rat, kDeformParams, 1>;
using DefScalar = FirstOrder<ParamLin>;

struct DeformationSystem {
  RatMatrix raw;      // every extracted equation, one nonzero row each
  RatMatrix reduced;  // canonical row-reduced form of the raw system
  int kernel_dimension = -1;
};

// Builds the deformed primal and dual nets, takes the dagger of the primal net
// to first order, equates with the dual net, and extracts the linear system in
// the twelve parameters.
DeformationSystem deformation_kernel();

// the published six equations, verbatim; the first carries a sign slip
RatMatrix published_equations();
// the same six with the delta2-equation sign corrected; this is what the
// derivation produces and what the fat-locus tangent vectors satisfy
RatMatrix corrected_published_equations();

// tangent vectors of the fat locus paired with the moving dual support line:
// parameters of the family ((x - t*alpha)^2, (x - t*alpha)(y - t*beta), ...)
ParamLin fat_locus_tangent(const Rat& alpha, const Rat& beta);

bool satisfies(const RatMatrix& system, const ParamLin& vec);
bool same_row_space(RatMatrix lhs, RatMatrix rhs);
bool contains_equation(const RatMatrix& system, DeformParam solo);

std::string equation_str(const RatVector& row);

}  // namespace ct
