#include "ct/deformation.hpp"

#include <stdexcept>
#include <vector>

namespace ct {

const std::array<const char*, kDeformParams> kDeformParamNames = {
    "alpha1", "beta1", "alpha2", "beta2", "alpha3", "beta3",
    "gamma1", "gamma2", "gamma3", "delta1", "delta2", "delta3"};

namespace {

DefScalar one() { return DefScalar(Rat(1), ParamLin::Zero()); }

DefScalar eps(DeformParam p, int scale = 1) {
  ParamLin lin = ParamLin::Zero();
  lin(p) = scale;
  return DefScalar(Rat(0), lin);
}

bool is_zero_row(const ParamLin& row) {
  for (int i = 0; i < kDeformParams; ++i)
    if (row(i) != 0) return false;
  return true;
}

RatMatrix drop_zero_rows(const RatMatrix& m) {
  std::vector<int> keep;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (Eigen::Index j = 0; j < m.cols(); ++j) zero &= (m(i, j) == 0);
    if (!zero) keep.push_back(static_cast<int>(i));
  }
  RatMatrix out(static_cast<Eigen::Index>(keep.size()), m.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(keep[i]);
  return out;
}

}  // namespace

DeformationSystem deformation_kernel() {
  // primal net of the fat point, deformed:
  //   X^2 + eps(alpha1 XZ + beta1 YZ), XY + eps(alpha2 XZ + beta2 YZ),
  //   Y^2 + eps(alpha3 XZ + beta3 YZ)
  QuadricRows<DefScalar> primal(3, kQuadricMonomials);
  primal.setZero();
  primal(0, quadric_index(0, 0)) = one();
  primal(0, quadric_index(0, 2)) = eps(kAlpha1);
  primal(0, quadric_index(1, 2)) = eps(kBeta1);
  primal(1, quadric_index(0, 1)) = one();
  primal(1, quadric_index(0, 2)) = eps(kAlpha2);
  primal(1, quadric_index(1, 2)) = eps(kBeta2);
  primal(2, quadric_index(1, 1)) = one();
  primal(2, quadric_index(0, 2)) = eps(kAlpha3);
  primal(2, quadric_index(1, 2)) = eps(kBeta3);

  // dual net induced by deforming the dual ideal (Zv, Xv^3); the gamma
  // parameters of the cubic generator do not reach the net and stay free:
  //   XvZv + eps(delta2 Xv^2 + delta3 XvYv),
  //   YvZv + eps(delta1 Xv^2 + delta2 XvYv + delta3 Yv^2), Zv^2
  QuadricRows<DefScalar> dual(3, kQuadricMonomials);
  dual.setZero();
  dual(0, quadric_index(0, 2)) = one();
  dual(0, quadric_index(0, 0)) = eps(kDelta2);
  dual(0, quadric_index(0, 1)) = eps(kDelta3);
  dual(1, quadric_index(1, 2)) = one();
  dual(1, quadric_index(0, 0)) = eps(kDelta1);
  dual(1, quadric_index(0, 1)) = eps(kDelta2);
  dual(1, quadric_index(1, 1)) = eps(kDelta3);
  dual(2, quadric_index(2, 2)) = one();

  const auto net = QuadricSpaceT<DefScalar>::from_rows(std::move(primal));
  const auto complement = apolar_complement(net);
  QuadricRows<DefScalar> minors = jacobian_minors<DefScalar>(complement.basis());
  const std::vector<int> lhs_pivots = reduced_row_echelon(minors);
  if (lhs_pivots.size() != 3)
    throw std::logic_error("deformation_kernel: dagger span is not 3-dimensional over the base");

  const std::vector<int> rhs_pivots = reduced_row_echelon(dual);
  if (rhs_pivots != lhs_pivots)
    throw std::logic_error("deformation_kernel: pivot mismatch between dagger and dual net");

  std::vector<ParamLin> equations;
  // free parts: entrywise equality of eps coefficients
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < kQuadricMonomials; ++j) {
      if (minors(i, j).val != dual(i, j).val)
        throw std::logic_error("deformation_kernel: base parts disagree");
      const ParamLin diff = minors(i, j).eps - dual(i, j).eps;
      if (!is_zero_row(diff)) equations.push_back(diff);
    }
  }
  // leftover rows of the minor reduction are pure-eps; they must land inside
  // the dual net's base span, and their residues are already reduced mod it
  for (Eigen::Index i = 3; i < minors.rows(); ++i) {
    for (Eigen::Index j = 0; j < kQuadricMonomials; ++j) {
      if (minors(i, j).val != 0)
        throw std::logic_error("deformation_kernel: unexpected base part below the pivots");
      if (!is_zero_row(minors(i, j).eps)) equations.push_back(minors(i, j).eps);
    }
  }

  DeformationSystem out;
  out.raw.resize(static_cast<Eigen::Index>(equations.size()), kDeformParams);
  for (std::size_t i = 0; i < equations.size(); ++i)
    for (int j = 0; j < kDeformParams; ++j)
      out.raw(static_cast<Eigen::Index>(i), j) = equations[i](j);

  RatMatrix reduced = out.raw;
  const std::vector<int> pivots = reduced_row_echelon(reduced);
  out.reduced = drop_zero_rows(reduced);
  out.kernel_dimension = kDeformParams - static_cast<int>(pivots.size());
  return out;
}

namespace {

RatMatrix equations_with_delta2_sign(int sign) {
  RatMatrix m(6, kDeformParams);
  m.setZero();
  // delta2 = sign * beta2
  m(0, kDelta2) = 1;
  m(0, kBeta2) = -sign;
  // delta3 = alpha2 - beta3
  m(1, kDelta3) = 1;
  m(1, kAlpha2) = -1;
  m(1, kBeta3) = 1;
  // alpha3 = 0
  m(2, kAlpha3) = 1;
  // delta1 = beta1
  m(3, kDelta1) = 1;
  m(3, kBeta1) = -1;
  // delta2 = beta2 - alpha1
  m(4, kDelta2) = 1;
  m(4, kBeta2) = -1;
  m(4, kAlpha1) = 1;
  // delta3 = -alpha2
  m(5, kDelta3) = 1;
  m(5, kAlpha2) = 1;
  return m;
}

}  // namespace

RatMatrix published_equations() { return equations_with_delta2_sign(+1); }

RatMatrix corrected_published_equations() { return equations_with_delta2_sign(-1); }

ParamLin fat_locus_tangent(const Rat& alpha, const Rat& beta) {
  // ((x - t alpha)^2, (x - t alpha)(y - t beta), (y - t beta)^2) expands to
  // alpha1 = -2 alpha, beta1 = 0, alpha2 = -beta, beta2 = -alpha, alpha3 = 0,
  // beta3 = -2 beta; the dual support line x*alpha + y*beta + 1 = 0 moves by
  // delta1 = 0, delta2 = alpha, delta3 = beta
  ParamLin v = ParamLin::Zero();
  v(kAlpha1) = -2 * alpha;
  v(kBeta2) = -alpha;
  v(kAlpha2) = -beta;
  v(kBeta3) = -2 * beta;
  v(kDelta2) = alpha;
  v(kDelta3) = beta;
  return v;
}

bool satisfies(const RatMatrix& system, const ParamLin& vec) {
  for (Eigen::Index i = 0; i < system.rows(); ++i) {
    Rat total(0);
    for (int j = 0; j < kDeformParams; ++j) total += system(i, j) * vec(j);
    if (total != 0) return false;
  }
  return true;
}

bool same_row_space(RatMatrix lhs, RatMatrix rhs) {
  reduced_row_echelon(lhs);
  reduced_row_echelon(rhs);
  const RatMatrix l = drop_zero_rows(lhs);
  const RatMatrix r = drop_zero_rows(rhs);
  if (l.rows() != r.rows()) return false;
  for (Eigen::Index i = 0; i < l.rows(); ++i)
    for (Eigen::Index j = 0; j < l.cols(); ++j)
      if (l(i, j) != r(i, j)) return false;
  return true;
}

bool contains_equation(const RatMatrix& system, DeformParam solo) {
  for (Eigen::Index i = 0; i < system.rows(); ++i) {
    bool matches = system(i, solo) != 0;
    for (int j = 0; j < kDeformParams && matches; ++j)
      if (j != solo && system(i, j) != 0) matches = false;
    if (matches) return true;
  }
  return false;
}

std::string equation_str(const RatVector& row) {
  std::string out;
  for (int j = 0; j < kDeformParams; ++j) {
    const Rat& coeff = row(j);
    if (coeff == 0) continue;
    const bool neg = coeff < 0;
    const Rat mag = neg ? Rat(-coeff) : coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += kDeformParamNames[static_cast<std::size_t>(j)];
  }
  if (out.empty()) out = "0";
  return out + " = 0";
}

}  // namespace ct
