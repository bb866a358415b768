#include "ct/localization.hpp"

#include <random>
#include <stdexcept>

namespace ct {

EquivariantClass::EquivariantClass(int degree, std::vector<ExactPoly> restrictions)
    : degree_(degree), at_(std::move(restrictions)) {
  for (const ExactPoly& p : at_)
    if (!p.is_homogeneous_abc(degree_))
      throw std::logic_error("EquivariantClass: restriction is not homogeneous of degree " +
                             std::to_string(degree_));
}

EquivariantClass EquivariantClass::constant(const Rat& value, std::size_t points) {
  return EquivariantClass(0, std::vector<ExactPoly>(points, ExactPoly(value)));
}

EquivariantClass& EquivariantClass::operator+=(const EquivariantClass& o) {
  if (degree_ != o.degree_ || at_.size() != o.at_.size())
    throw std::logic_error("EquivariantClass: mixed-degree sum");
  for (std::size_t i = 0; i < at_.size(); ++i) at_[i] += o.at_[i];
  return *this;
}

EquivariantClass& EquivariantClass::operator-=(const EquivariantClass& o) {
  if (degree_ != o.degree_ || at_.size() != o.at_.size())
    throw std::logic_error("EquivariantClass: mixed-degree sum");
  for (std::size_t i = 0; i < at_.size(); ++i) at_[i] -= o.at_[i];
  return *this;
}

EquivariantClass operator*(const EquivariantClass& x, const EquivariantClass& y) {
  if (x.at_.size() != y.at_.size())
    throw std::logic_error("EquivariantClass: point count mismatch");
  std::vector<ExactPoly> out;
  out.reserve(x.at_.size());
  for (std::size_t i = 0; i < x.at_.size(); ++i) out.push_back(x.at_[i] * y.at_[i]);
  return EquivariantClass(x.degree_ + y.degree_, std::move(out));
}

EquivariantClass operator*(const Rat& s, EquivariantClass x) {
  for (ExactPoly& p : x.at_) p *= s;
  return x;
}

EquivariantClass EquivariantClass::pow(int n) const {
  if (n < 0) throw std::invalid_argument("EquivariantClass: negative power");
  EquivariantClass out = constant(Rat(1), at_.size());
  for (int k = 0; k < n; ++k) out = out * *this;
  return out;
}

SamplePlan SamplePlan::make(int samples, std::uint64_t seed, const WeightTable& table) {
  if (samples < 3) throw std::invalid_argument("SamplePlan: need at least 3 samples");
  SamplePlan plan;
  plan.seed = seed;
  std::mt19937_64 rng(seed);
  const auto draw = [&rng] { return static_cast<long>(rng() % 101) - 50; };
  int guard = 0;
  while (static_cast<int>(plan.triples.size()) < samples) {
    if (++guard > 200000) throw std::runtime_error("SamplePlan: rejection sampling stalled");
    SampleTriple t{draw(), draw(), draw()};
    if (t.a == t.b || t.a == t.c || t.b == t.c) continue;
    bool admissible = true;
    for (const PointWeights& pw : table) {
      for (const LinearForm& w : pw.tangent) {
        if (w.evaluate(Int(t.a), Int(t.b), Int(t.c)) == 0) {
          admissible = false;
          break;
        }
      }
      if (!admissible) break;
    }
    if (!admissible) continue;
    bool duplicate = false;
    for (const SampleTriple& u : plan.triples)
      duplicate |= (u.a == t.a && u.b == t.b && u.c == t.c);
    if (duplicate) continue;
    plan.triples.push_back(t);
  }
  return plan;
}

Localizer::Localizer(WeightTable table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  chern_E_.reserve(5);
  for (int i = 0; i <= 4; ++i) {
    std::vector<ExactPoly> at;
    at.reserve(n);
    for (const PointWeights& pw : table_) at.push_back(elementary_symmetric(i, pw.E));
    chern_E_.emplace_back(i, std::move(at));
  }
  chern_taut_.resize(4);
  for (int d = 0; d < 4; ++d) {
    for (int i = 0; i <= 3; ++i) {
      std::vector<ExactPoly> at;
      at.reserve(n);
      for (const PointWeights& pw : table_)
        at.push_back(elementary_symmetric(i, pw.taut[static_cast<std::size_t>(d)]));
      chern_taut_[static_cast<std::size_t>(d)].emplace_back(i, std::move(at));
    }
  }
  std::vector<ExactPoly> h;
  h.reserve(n);
  for (const PointWeights& pw : table_) h.push_back(pw.H.to_poly());
  hyperplane_ = EquivariantClass(1, std::move(h));
}

EquivariantClass Localizer::chern_E(int i) const {
  if (i < 0 || i > 4) throw std::invalid_argument("chern_E: index out of range");
  return chern_E_[static_cast<std::size_t>(i)];
}

EquivariantClass Localizer::chern_taut(int d, int i) const {
  if (d < 0 || d > 3 || i < 0 || i > 3)
    throw std::invalid_argument("chern_taut: index out of range");
  return chern_taut_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
}

EquivariantClass Localizer::hyperplane() const { return hyperplane_; }

EquivariantClass Localizer::lin() const { return chern_taut(1, 2); }

EquivariantClass Localizer::inc() const {
  return hyperplane_ * hyperplane_ - chern_taut(1, 2) + Rat(2) * chern_taut(2, 2) -
         chern_taut(3, 2);
}

EquivariantClass Localizer::delta(int i) const {
  switch (i) {
    case 0: return chern_E(3) * chern_E(3) - chern_E(2) * chern_E(4);
    case 1: return chern_E(2) * chern_E(2) - chern_E(1) * chern_E(3);
    case 2: return chern_E(1) * chern_E(1) - chern_E(2);
    case 3: return EquivariantClass::constant(Rat(1), table_.size());
    default: throw std::invalid_argument("delta: index out of range");
  }
}

EquivariantClass Localizer::ultimate_integrand() const {
  const EquivariantClass point_condition = Rat(4) * inc() + lin();
  // alternating binomial expansion of the thirteenth power of the point
  // condition cycle, degree 6 in total
  return delta(0) - Rat(13) * (delta(1) * point_condition) +
         Rat(78) * (delta(2) * point_condition.pow(2)) -
         Rat(286) * point_condition.pow(3);
}

Int Localizer::bott_integrate(const EquivariantClass& cls, const SamplePlan& plan) const {
  if (cls.degree() != 6)
    throw std::invalid_argument("bott_integrate: class must have top degree 6");
  if (cls.points() != table_.size())
    throw std::invalid_argument("bott_integrate: class and table sizes differ");
  if (plan.triples.size() < 3)
    throw std::invalid_argument("bott_integrate: need at least 3 sample triples");

  std::vector<Rat> totals;
  totals.reserve(plan.triples.size());
  for (const SampleTriple& t : plan.triples) {
    const Rat a0(t.a), b0(t.b), c0(t.c);
    Rat total(0);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      Int denominator(1);
      for (const LinearForm& w : table_[i].tangent) {
        const Int value = w.evaluate(Int(t.a), Int(t.b), Int(t.c));
        if (value == 0)
          throw std::runtime_error("bott_integrate: vanishing tangent weight at sample triple");
        denominator *= value;
      }
      total += cls.at(i).substitute(a0, b0, c0) / Rat(denominator);
    }
    totals.push_back(total);
  }
  for (const Rat& t : totals)
    if (t != totals[0])
      throw std::logic_error("bott_integrate: sum is not constant across sample triples");
  if (!is_integer(totals[0]))
    throw std::logic_error("bott_integrate: sum is not an integer");
  return boost::multiprecision::numerator(totals[0]);
}

Int Localizer::nu32(const SamplePlan& plan) const {
  return bott_integrate(ultimate_integrand(), plan);
}

Int Localizer::porteous_naive(const SamplePlan& plan) const {
  return bott_integrate(delta(0), plan);
}

SanityReport Localizer::sanity_suite(const SamplePlan& plan) const {
  const EquivariantClass h = hyperplane();
  const EquivariantClass inc_class = inc();
  const EquivariantClass lin_class = lin();
  struct Entry {
    const char* name;
    EquivariantClass cls;
    long expected;
  };
  const Entry entries[] = {
      {"H^6 = 15", h.pow(6), 15},
      {"H^4 * Inc = 3", h.pow(4) * inc_class, 3},
      {"c3(2)^2 = 4", chern_taut(2, 3) * chern_taut(2, 3), 4},
      {"c3(3)^2 = 84", chern_taut(3, 3) * chern_taut(3, 3), 84},
      {"c3(2) * c3(3) = 20", chern_taut(2, 3) * chern_taut(3, 3), 20},
      {"Lin^3 = 0", lin_class.pow(3), 0},
      {"Inc^2 * Lin = 0", inc_class.pow(2) * lin_class, 0},
      {"Inc^3 = 1", inc_class.pow(3), 1},
  };
  SanityReport report;
  for (const Entry& e : entries) {
    SanityCheck check;
    check.name = e.name;
    check.expected = Int(e.expected);
    check.value = bott_integrate(e.cls, plan);
    check.pass = check.value == check.expected;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace ct
