#include "ct/staircase.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ct {

namespace {

bool divides(ExponentPair g, ExponentPair m) { return g[0] <= m[0] && g[1] <= m[1]; }

std::vector<ExponentPair> minimalize(std::vector<ExponentPair> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentPair> out;
  for (const ExponentPair& g : gens) {
    bool redundant = false;
    for (const ExponentPair& h : gens) {
      if (h != g && divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace

StairIdeal::StairIdeal(std::vector<ExponentPair> generators)
    : gens_(minimalize(std::move(generators))) {
  for (const ExponentPair& g : gens_)
    if (g[0] < 0 || g[1] < 0) throw std::invalid_argument("StairIdeal: negative exponent");
}

StairIdeal StairIdeal::maximal_power(int n) {
  std::vector<ExponentPair> gens;
  for (int i = 0; i <= n; ++i) gens.push_back({n - i, i});
  return StairIdeal(std::move(gens));
}

bool StairIdeal::contains(ExponentPair m) const {
  for (const ExponentPair& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool StairIdeal::contains(const StairIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](ExponentPair g) { return contains(g); });
}

bool StairIdeal::is_cofinite() const {
  // needs a pure power of u and a pure power of v among the generators
  const bool has_u = std::any_of(gens_.begin(), gens_.end(),
                                 [](ExponentPair g) { return g[1] == 0; });
  const bool has_v = std::any_of(gens_.begin(), gens_.end(),
                                 [](ExponentPair g) { return g[0] == 0; });
  return has_u && has_v;
}

int StairIdeal::colength() const { return static_cast<int>(quotient_basis().size()); }

std::vector<ExponentPair> StairIdeal::quotient_basis() const {
  if (!is_cofinite()) throw std::invalid_argument("StairIdeal: ideal is not cofinite");
  int max_u = 0, max_v = 0;
  for (const ExponentPair& g : gens_) {
    max_u = std::max(max_u, g[0]);
    max_v = std::max(max_v, g[1]);
  }
  std::vector<ExponentPair> cells;
  for (int j = 0; j < max_v; ++j)
    for (int i = 0; i < max_u; ++i)
      if (!contains({i, j})) cells.push_back({i, j});
  return cells;
}

std::string StairIdeal::str() const {
  if (gens_.empty()) return "[0]";
  std::string out = "[";
  bool first = true;
  for (const ExponentPair& g : gens_) {
    if (!first) out += ", ";
    first = false;
    if (g[0] == 0 && g[1] == 0) {
      out += "1";
      continue;
    }
    std::string part;
    if (g[0] > 0) part += g[0] == 1 ? "u" : "u^" + std::to_string(g[0]);
    if (g[1] > 0) {
      if (!part.empty()) part += "*";
      part += g[1] == 1 ? "v" : "v^" + std::to_string(g[1]);
    }
    out += part;
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const StairIdeal& ideal) { return os << ideal.str(); }

StairIdeal ideal_sum(const StairIdeal& x, const StairIdeal& y) {
  std::vector<ExponentPair> gens = x.generators();
  gens.insert(gens.end(), y.generators().begin(), y.generators().end());
  return StairIdeal(std::move(gens));
}

StairIdeal ideal_product(const StairIdeal& x, const StairIdeal& y) {
  std::vector<ExponentPair> gens;
  for (const ExponentPair& g : x.generators())
    for (const ExponentPair& h : y.generators()) gens.push_back({g[0] + h[0], g[1] + h[1]});
  return StairIdeal(std::move(gens));
}

StairIdeal ideal_square(const StairIdeal& x) { return ideal_product(x, x); }

StairIdeal modified_square(const StairIdeal& ideal, const StairIdeal& gamma) {
  if (!gamma.is_principal())
    throw std::invalid_argument("modified_square: gamma must be principal");
  return ideal_sum(ideal_square(ideal), gamma);
}

Chart Chart::primal(int label) {
  if (label < 0 || label > 2) throw std::invalid_argument("Chart: label out of range");
  Chart chart;
  chart.label = label;
  chart.dual = false;
  chart.coordinate_weight = variable_weight(label);
  std::array<int, 2> others{};
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != label) others[static_cast<std::size_t>(k++)] = i;
  chart.u_weight = variable_weight(others[0]) - chart.coordinate_weight;
  chart.v_weight = variable_weight(others[1]) - chart.coordinate_weight;
  return chart;
}

Chart Chart::dual_plane(int label) {
  Chart chart = primal(label);
  chart.dual = true;
  // dual coordinates carry the negated weights
  chart.coordinate_weight = -chart.coordinate_weight;
  chart.u_weight = -chart.u_weight;
  chart.v_weight = -chart.v_weight;
  return chart;
}

std::vector<LinearForm> hom_weights(const StairIdeal& ideal, const Chart& chart) {
  if (ideal.generators().size() != 2)
    throw std::invalid_argument("hom_weights: ideal is not a 2-generator complete intersection");
  std::vector<LinearForm> out;
  for (const ExponentPair& g : ideal.generators()) {
    const LinearForm gw = chart.monomial_weight(g);
    for (const ExponentPair& m : ideal.quotient_basis())
      out.push_back(chart.monomial_weight(m) - gw);
  }
  return out;
}

std::vector<LinearForm> section_weights(const StairIdeal& ideal, const Chart& chart, int d) {
  const LinearForm twist = chart.trivialization(d);
  std::vector<LinearForm> out;
  for (const ExponentPair& m : ideal.quotient_basis())
    out.push_back(twist + chart.monomial_weight(m));
  return out;
}

}  // namespace ct
