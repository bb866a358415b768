#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <utility>

namespace ct {

// Exact arithmetic everywhere; no floating point enters the computation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rat& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline bool is_integer(const Rat& x) { return boost::multiprecision::denominator(x) == 1; }

// First-order arithmetic v + eps*e with eps^2 = 0.  E is the value type of the
// eps part: Rat for plain dual rationals, or a fixed-size Eigen vector of Rat
// when the eps part is a linear form in external parameters.
template <class E>
struct FirstOrder {
  Rat val{};
  E eps{};

  FirstOrder() = default;
  FirstOrder(int v) : val(v) {}  // NOLINT: Eigen literal conversions Scalar(0), Scalar(1)
  explicit FirstOrder(Rat v) : val(std::move(v)) {}
  FirstOrder(Rat v, E e) : val(std::move(v)), eps(std::move(e)) {}

  FirstOrder& operator+=(const FirstOrder& o) {
    val += o.val;
    eps += o.eps;
    return *this;
  }
  FirstOrder& operator-=(const FirstOrder& o) {
    val -= o.val;
    eps -= o.eps;
    return *this;
  }

  friend FirstOrder operator+(const FirstOrder& x, const FirstOrder& y) {
    return FirstOrder(x.val + y.val, E(x.eps + y.eps));
  }
  friend FirstOrder operator-(const FirstOrder& x, const FirstOrder& y) {
    return FirstOrder(x.val - y.val, E(x.eps - y.eps));
  }
  friend FirstOrder operator-(const FirstOrder& x) { return FirstOrder(-x.val, E(-x.eps)); }
  friend FirstOrder operator*(const FirstOrder& x, const FirstOrder& y) {
    return FirstOrder(x.val * y.val, E(x.val * y.eps + y.val * x.eps));
  }
  // division by a unit (val != 0); eps^2 = 0 gives 1/(c+eps d) = 1/c - eps d/c^2
  friend FirstOrder operator/(const FirstOrder& x, const FirstOrder& y) {
    const Rat inv = Rat(1) / y.val;
    return FirstOrder(x.val * inv, E((y.val * x.eps - x.val * y.eps) * (inv * inv)));
  }
};

using DualRat = FirstOrder<Rat>;

// units of the coefficient rings used in exact elimination
inline bool is_unit(const Rat& x) { return x != 0; }
template <class E>
bool is_unit(const FirstOrder<E>& x) {
  return x.val != 0;
}

}  // namespace ct

namespace Eigen {

// Minimal glue so FirstOrder works as a matrix scalar (storage and coefficient
// arithmetic only; no decompositions run over it).
template <class E>
struct NumTraits<ct::FirstOrder<E>> {
  using Self = ct::FirstOrder<E>;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = int;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60,
  };
  static int digits10() { return 0; }
  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
};

}  // namespace Eigen
