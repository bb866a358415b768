#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ct/localization.hpp"

namespace ct {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ChecksReport {
  std::vector<CheckLine> lines;
  bool all_pass() const {
    for (const CheckLine& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

// Full consistency run: the eight localization identities, the 31 x 7
// weight-table double entry, complete-triangle membership at every fixed point
// in both directions, the first-order deformation system, and the equality of
// integrals across the derived and transcribed tables.  `inject_corruption`
// flips one transcribed entry to demonstrate the failure path.
ChecksReport run_all_checks(int samples, std::uint64_t seed, bool inject_corruption = false);

}  // namespace ct
