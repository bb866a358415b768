#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ct/rational.hpp"

namespace ct {

// A permutation of the three equivariant variables a, b, c (equally, of the
// homogeneous coordinates X, Y, Z): perm[i] = j means variable i |-> variable j.
using Perm = std::array<int, 3>;

inline constexpr Perm kIdentityPerm{0, 1, 2};

// the six permutations, identity first, in lexicographic order
const std::array<Perm, 6>& all_permutations();

// Exponents of one term: a, b, c and the square-zero variable eps (exponent
// at most 1; terms acquiring eps^2 vanish).
struct Monomial {
  std::array<std::uint8_t, 3> abc{0, 0, 0};
  std::uint8_t eps = 0;

  int degree_abc() const { return abc[0] + abc[1] + abc[2]; }
  int degree() const { return degree_abc() + eps; }
  bool operator==(const Monomial&) const = default;
};

// graded-lexicographic, highest term first (a > b > c > eps)
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.degree() != y.degree()) return x.degree() > y.degree();
    for (int i = 0; i < 3; ++i)
      if (x.abc[i] != y.abc[i]) return x.abc[i] > y.abc[i];
    return x.eps > y.eps;
  }
};

// Multivariate polynomial over Q in a, b, c and eps with eps^2 = 0.  Terms are
// kept normalized (no zero coefficients), so structural equality is semantic
// equality.  Values are immutable in spirit: every operation returns a fresh
// polynomial.
class ExactPoly {
 public:
  using TermMap = std::map<Monomial, Rat, MonomialOrder>;

  ExactPoly() = default;
  explicit ExactPoly(const Rat& constant);
  explicit ExactPoly(long constant) : ExactPoly(Rat(constant)) {}

  static ExactPoly variable(int index);  // 0 -> a, 1 -> b, 2 -> c
  static ExactPoly epsilon();
  static ExactPoly term(const Monomial& m, const Rat& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool has_eps() const;
  // largest total degree in a, b, c over all terms; 0 for the zero polynomial
  int degree_abc() const;
  bool is_homogeneous_abc(int d) const;

  const TermMap& terms() const { return terms_; }

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly& operator*=(const ExactPoly& o);
  ExactPoly& operator*=(const Rat& s);

  friend ExactPoly operator+(ExactPoly x, const ExactPoly& y) { return x += y; }
  friend ExactPoly operator-(ExactPoly x, const ExactPoly& y) { return x -= y; }
  friend ExactPoly operator*(const ExactPoly& x, const ExactPoly& y);
  friend ExactPoly operator*(ExactPoly x, const Rat& s) { return x *= s; }
  friend ExactPoly operator*(const Rat& s, ExactPoly x) { return x *= s; }
  friend ExactPoly operator-(const ExactPoly& x) { return x * Rat(-1); }
  bool operator==(const ExactPoly&) const = default;

  ExactPoly pow(int n) const;

  // exact value at (a0, b0, c0); rejects polynomials containing eps
  Rat substitute(const Rat& a0, const Rat& b0, const Rat& c0) const;

  // variable substitution a_i -> a_{perm[i]}
  ExactPoly substituted(const Perm& perm) const;

  // canonical text form: terms in graded-lex order, explicit rational
  // coefficients, e.g. "3/2*a^2*b - c + eps"
  std::string str() const;
  static ExactPoly parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const Rat& coeff);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ExactPoly& p);

// Integer linear form k_a*a + k_b*b + k_c*c; the currency of torus weights.
struct LinearForm {
  Int a{0}, b{0}, c{0};

  LinearForm() = default;
  LinearForm(Int ka, Int kb, Int kc) : a(std::move(ka)), b(std::move(kb)), c(std::move(kc)) {}

  friend LinearForm operator+(const LinearForm& x, const LinearForm& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c};
  }
  friend LinearForm operator-(const LinearForm& x, const LinearForm& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c};
  }
  friend LinearForm operator-(const LinearForm& x) { return {-x.a, -x.b, -x.c}; }
  friend LinearForm operator*(const Int& s, const LinearForm& x) {
    return {s * x.a, s * x.b, s * x.c};
  }
  friend LinearForm operator*(int s, const LinearForm& x) { return Int(s) * x; }
  bool operator==(const LinearForm&) const = default;
  // lexicographic; used only to canonicalize multisets
  friend bool operator<(const LinearForm& x, const LinearForm& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  Int evaluate(const Int& a0, const Int& b0, const Int& c0) const {
    return a * a0 + b * b0 + c * c0;
  }
  LinearForm substituted(const Perm& perm) const;
  ExactPoly to_poly() const;
  std::string str() const;  // "4a+b", "a-2b+c", "0"
};

std::ostream& operator<<(std::ostream& os, const LinearForm& w);

// weights a, b, c of the three coordinate variables
LinearForm variable_weight(int index);

// sigma_i of the given linear forms, fully expanded; 0 <= i <= size
ExactPoly elementary_symmetric(int i, std::span<const LinearForm> weights);

// sum of p over all six permutations of a, b, c; rejects eps
ExactPoly symmetrize(const ExactPoly& p);

}  // namespace ct
