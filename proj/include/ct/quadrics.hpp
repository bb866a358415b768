#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ct/exactpoly.hpp"
#include "ct/rational.hpp"

namespace ct {

// Coefficient vectors of plane quadrics in the fixed monomial order
//   X^2, Y^2, Z^2, XY, XZ, YZ
// (the same order with checked variables on the dual plane).
inline constexpr int kQuadricMonomials = 6;
inline constexpr std::array<std::array<int, 2>, 6> kQuadricVarPairs{
    {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};
// apolar self-pairing <m, m-checked> = product of exponent factorials
inline constexpr std::array<int, 6> kApolarDiagonal{2, 2, 2, 1, 1, 1};

int quadric_index(int v1, int v2);

template <class S>
using QuadricRows = Eigen::Matrix<S, Eigen::Dynamic, kQuadricMonomials>;

// ---------------------------------------------------------------------------
// Exact elimination over a field or a first-order ring.  Pivots must be units
// (nonzero base part); rows without a unit entry sink to the bottom, already
// reduced against the pivot rows.
// ---------------------------------------------------------------------------

template <class Mat>
std::vector<int> reduced_row_echelon(Mat& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  using S = typename Mat::Scalar;
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (is_unit(m(i, c))) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) m.row(r).swap(m.row(sel));
    const S pivot = m(r, c);
    for (Eigen::Index j = 0; j < cols; ++j) m(r, j) = m(r, j) / pivot;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const S factor = m(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

// Canonical basis (one row per kernel vector, row-reduced) of
// { w : m * w = 0 } for a matrix whose row space has unit pivots.
template <class Mat>
Mat kernel_basis(Mat m) {
  using S = typename Mat::Scalar;
  const std::vector<int> pivots = reduced_row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c) {
    bool is_pivot = false;
    for (int p : pivots) is_pivot |= (p == c);
    if (!is_pivot) free_cols.push_back(c);
  }
  Mat out(static_cast<Eigen::Index>(free_cols.size()), cols);
  out.setZero();
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    out(static_cast<Eigen::Index>(k), free_cols[k]) = S(1);
    for (std::size_t t = 0; t < pivots.size(); ++t)
      out(static_cast<Eigen::Index>(k), pivots[t]) =
          S(0) - m(static_cast<Eigen::Index>(t), free_cols[k]);
  }
  reduced_row_echelon(out);
  return out;
}

// ---------------------------------------------------------------------------
// Quadric spaces
// ---------------------------------------------------------------------------

// gradient of a quadric row with respect to variable v: a linear form,
// coefficients indexed by variable
template <class S>
std::array<S, 3> quadric_gradient(const Eigen::Matrix<S, 1, kQuadricMonomials>& q, int v) {
  std::array<S, 3> out{S(0), S(0), S(0)};
  for (int w = 0; w < 3; ++w) {
    const int idx = quadric_index(v, w);
    out[static_cast<std::size_t>(w)] =
        out[static_cast<std::size_t>(w)] + ((v == w) ? S(2) : S(1)) * q(idx);
  }
  return out;
}

// product of two linear forms as a quadric row
template <class S>
Eigen::Matrix<S, 1, kQuadricMonomials> linear_product(const std::array<S, 3>& p,
                                                      const std::array<S, 3>& q) {
  Eigen::Matrix<S, 1, kQuadricMonomials> out;
  out.setZero();
  for (int v = 0; v < 3; ++v)
    for (int w = 0; w < 3; ++w) {
      const int idx = quadric_index(v, w);
      out(idx) = out(idx) + p[static_cast<std::size_t>(v)] * q[static_cast<std::size_t>(w)];
    }
  return out;
}

// all nine 2x2 minors of the Jacobian matrix of the given quadric rows
template <class S>
QuadricRows<S> jacobian_minors(const Eigen::Matrix<S, 3, kQuadricMonomials>& rows) {
  QuadricRows<S> minors(9, kQuadricMonomials);
  int out = 0;
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2) {
          const Eigen::Matrix<S, 1, kQuadricMonomials> row1 = rows.row(r1);
          const Eigen::Matrix<S, 1, kQuadricMonomials> row2 = rows.row(r2);
          const auto g11 = quadric_gradient<S>(row1, c1);
          const auto g12 = quadric_gradient<S>(row1, c2);
          const auto g21 = quadric_gradient<S>(row2, c1);
          const auto g22 = quadric_gradient<S>(row2, c2);
          minors.row(out++) = linear_product<S>(g11, g22) - linear_product<S>(g12, g21);
        }
  return minors;
}

// A 3-dimensional space of quadrics, held in reduced-echelon canonical form so
// that equality of spaces is equality of bases.
template <class S>
class QuadricSpaceT {
 public:
  QuadricSpaceT() { basis_.setZero(); }

  static QuadricSpaceT from_rows(QuadricRows<S> rows) {
    const std::vector<int> pivots = reduced_row_echelon(rows);
    if (pivots.size() != 3)
      throw std::invalid_argument("QuadricSpace: expected a 3-dimensional span, got rank " +
                                  std::to_string(pivots.size()));
    QuadricSpaceT out;
    out.basis_ = rows.topRows(3);
    return out;
  }

  // span of three quadric monomials, each a pair of variable indices
  static QuadricSpaceT monomial_span(const std::array<std::array<int, 2>, 3>& monomials) {
    QuadricRows<S> rows(3, kQuadricMonomials);
    rows.setZero();
    for (int i = 0; i < 3; ++i)
      rows(i, quadric_index(monomials[static_cast<std::size_t>(i)][0],
                            monomials[static_cast<std::size_t>(i)][1])) = S(1);
    return from_rows(std::move(rows));
  }

  const Eigen::Matrix<S, 3, kQuadricMonomials>& basis() const { return basis_; }

  bool operator==(const QuadricSpaceT& o) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < kQuadricMonomials; ++j)
        if (!(basis_(i, j) == o.basis_(i, j))) return false;
    return true;
  }

 private:
  Eigen::Matrix<S, 3, kQuadricMonomials> basis_;
};

using QuadricSpace = QuadricSpaceT<Rat>;

// bilinear apolarity pairing <X^alpha, Xv^beta> = alpha! when alpha = beta
template <class S>
S apolar_pair(const Eigen::Matrix<S, 1, kQuadricMonomials>& q,
              const Eigen::Matrix<S, 1, kQuadricMonomials>& r) {
  S total(0);
  for (int j = 0; j < kQuadricMonomials; ++j) total += S(kApolarDiagonal[j]) * q(j) * r(j);
  return total;
}

// the 3-dimensional space apolar to V; first-order scalars are solved exactly
// to first order (base complement plus the eps-linear correction)
template <class S>
QuadricSpaceT<S> apolar_complement(const QuadricSpaceT<S>& v) {
  QuadricRows<S> pairing(3, kQuadricMonomials);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < kQuadricMonomials; ++j)
      pairing(i, j) = S(kApolarDiagonal[j]) * v.basis()(i, j);
  QuadricRows<S> kernel = kernel_basis(std::move(pairing));
  if (kernel.rows() != 3)
    throw std::invalid_argument("apolar_complement: input is rank-deficient");
  return QuadricSpaceT<S>::from_rows(std::move(kernel));
}

// span of the nine 2x2 minors of the Jacobian matrix of a basis; the span is
// 3-dimensional for every net arising here, and anything else is signalled
template <class S>
QuadricSpaceT<S> jacobian_space(const QuadricSpaceT<S>& v) {
  return QuadricSpaceT<S>::from_rows(jacobian_minors<S>(v.basis()));
}

template <class S>
QuadricSpaceT<S> dagger(const QuadricSpaceT<S>& v) {
  return jacobian_space(apolar_complement(v));
}

inline bool verify_ct_membership(const QuadricSpace& primal_net, const QuadricSpace& dual_net) {
  return dagger(primal_net) == dual_net;
}

// variable relabeling X_i -> X_{perm[i]} applied to a quadric span
QuadricSpace permuted(const QuadricSpace& space, const Perm& perm);

// rendered with primal letters (XYZ) or checked letters (xyz-checked style "Xv")
std::string quadric_space_str(const QuadricSpace& space, bool dual);

}  // namespace ct
