#include "ct/quadrics.hpp"

#include <stdexcept>

namespace ct {

int quadric_index(int v1, int v2) {
  if (v1 > v2) std::swap(v1, v2);
  for (int idx = 0; idx < kQuadricMonomials; ++idx)
    if (kQuadricVarPairs[static_cast<std::size_t>(idx)][0] == v1 &&
        kQuadricVarPairs[static_cast<std::size_t>(idx)][1] == v2)
      return idx;
  throw std::invalid_argument("quadric_index: variable index out of range");
}

QuadricSpace permuted(const QuadricSpace& space, const Perm& perm) {
  QuadricRows<Rat> rows(3, kQuadricMonomials);
  rows.setZero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < kQuadricMonomials; ++j) {
      const auto& pair = kQuadricVarPairs[static_cast<std::size_t>(j)];
      rows(i, quadric_index(perm[static_cast<std::size_t>(pair[0])],
                            perm[static_cast<std::size_t>(pair[1])])) = space.basis()(i, j);
    }
  return QuadricSpace::from_rows(std::move(rows));
}

std::string quadric_space_str(const QuadricSpace& space, bool dual) {
  const char* names[3] = {"X", "Y", "Z"};
  std::string out = "<";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ", ";
    std::string row;
    for (int j = 0; j < kQuadricMonomials; ++j) {
      const Rat& coeff = space.basis()(i, j);
      if (coeff == 0) continue;
      const bool neg = coeff < 0;
      const Rat mag = neg ? Rat(-coeff) : coeff;
      if (row.empty()) {
        if (neg) row += "-";
      } else {
        row += neg ? " - " : " + ";
      }
      if (mag != 1) row += to_string(mag) + "*";
      const auto& pair = kQuadricVarPairs[static_cast<std::size_t>(j)];
      std::string mono = names[pair[0]];
      if (dual) mono += "v";
      if (pair[0] == pair[1]) {
        mono += "^2";
      } else {
        mono += names[pair[1]];
        if (dual) mono += "v";
      }
      row += mono;
    }
    out += row.empty() ? "0" : row;
  }
  return out + ">";
}

}  // namespace ct
