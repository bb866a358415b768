#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ct/exactpoly.hpp"
#include "ct/fixedlocus.hpp"

namespace ct {

// An equivariant cohomology class known through its restrictions: one
// polynomial in a, b, c per fixed point, homogeneous of the stated degree.
class EquivariantClass {
 public:
  EquivariantClass() = default;
  EquivariantClass(int degree, std::vector<ExactPoly> restrictions);
  static EquivariantClass constant(const Rat& value, std::size_t points);

  int degree() const { return degree_; }
  std::size_t points() const { return at_.size(); }
  const ExactPoly& at(std::size_t i) const { return at_.at(i); }

  EquivariantClass& operator+=(const EquivariantClass& o);
  EquivariantClass& operator-=(const EquivariantClass& o);
  friend EquivariantClass operator+(EquivariantClass x, const EquivariantClass& y) {
    return x += y;
  }
  friend EquivariantClass operator-(EquivariantClass x, const EquivariantClass& y) {
    return x -= y;
  }
  friend EquivariantClass operator*(const EquivariantClass& x, const EquivariantClass& y);
  friend EquivariantClass operator*(const Rat& s, EquivariantClass x);
  EquivariantClass pow(int n) const;

 private:
  int degree_ = 0;
  std::vector<ExactPoly> at_;
};

struct SampleTriple {
  long a = 0, b = 0, c = 0;
};

// Integer substitution triples for the localization sums.  Accepted triples
// have distinct entries and keep every tangent weight of every fixed point
// nonzero, so no Bott denominator can vanish.
struct SamplePlan {
  std::uint64_t seed = 0;
  std::vector<SampleTriple> triples;

  static SamplePlan make(int samples, std::uint64_t seed, const WeightTable& table);
};

inline constexpr int kDefaultSamples = 5;
inline constexpr std::uint64_t kDefaultSeed = 7;

struct SanityCheck {
  std::string name;
  Int expected;
  Int value;
  bool pass = false;
};

struct SanityReport {
  std::vector<SanityCheck> checks;
  bool all_pass() const {
    for (const SanityCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Chern-class assembly and Bott summation over a weight table.  The table may
// come from the derivation pipeline, from the transcribed rows, or from a JSON
// export; integrals do not depend on which.
class Localizer {
 public:
  explicit Localizer(WeightTable table);

  const WeightTable& table() const { return table_; }
  std::size_t point_count() const { return table_.size(); }

  EquivariantClass chern_E(int i) const;           // i in 0..4
  EquivariantClass chern_taut(int d, int i) const; // d in 0..3, i in 0..3
  EquivariantClass hyperplane() const;             // H, degree 1
  EquivariantClass lin() const;                    // c_2(O(1)^[3])
  EquivariantClass inc() const;                    // H^2 - c2(1) + 2 c2(2) - c2(3)
  EquivariantClass delta(int i) const;             // Delta_{2i}, i in 0..3
  EquivariantClass ultimate_integrand() const;

  // exact rational Bott sum, checked constant over the plan's triples and
  // integral; cls must have top degree 6
  Int bott_integrate(const EquivariantClass& cls, const SamplePlan& plan) const;

  Int nu32(const SamplePlan& plan) const;
  Int porteous_naive(const SamplePlan& plan) const;  // c3(E)^2 - c2(E) c4(E)
  SanityReport sanity_suite(const SamplePlan& plan) const;

 private:
  WeightTable table_;
  std::vector<EquivariantClass> chern_E_;                 // sigma_0..sigma_4
  std::vector<std::vector<EquivariantClass>> chern_taut_; // [d][i]
  EquivariantClass hyperplane_;
};

}  // namespace ct
