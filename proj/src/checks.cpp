#include "ct/checks.hpp"

#include <exception>

#include "ct/deformation.hpp"

namespace ct {

ChecksReport run_all_checks(int samples, std::uint64_t seed, bool inject_corruption) {
  ChecksReport report;
  const auto add = [&report](std::string name, bool pass, std::string detail = "") {
    report.lines.push_back({std::move(name), pass, std::move(detail)});
  };

  const WeightTable derived = derived_weight_table();
  WeightTable paper = paper_weight_table();
  if (inject_corruption) paper = corrupt_one_entry(std::move(paper));

  const Localizer localizer(derived);
  const SamplePlan plan = SamplePlan::make(samples, seed, derived);

  for (const SanityCheck& check : localizer.sanity_suite(plan).checks)
    add(check.name, check.pass, "got " + check.value.str());

  const CrossCheckReport cross = cross_check_tables(derived, paper);
  std::string detail = std::to_string(cross.comparisons) + " comparisons";
  for (const WeightMismatch& m : cross.mismatches)
    detail += "; mismatch at point " + std::to_string(m.id) + " bundle " + m.bundle;
  add("weight-table double entry (derived vs transcribed)", cross.ok(), detail);

  bool membership = true;
  std::string membership_detail;
  for (const FixedPoint& fp : enumerate_fixed_points()) {
    const bool forward = verify_ct_membership(fp.primal_net, fp.dual_net);
    const bool backward = dagger(fp.dual_net) == fp.primal_net;
    if (!forward || !backward) {
      membership = false;
      membership_detail += "fails at point " + std::to_string(fp.id) + "; ";
    }
  }
  add("complete-triangle membership at all 31 fixed points (both directions)", membership,
      membership_detail);

  try {
    const DeformationSystem system = deformation_kernel();
    add("deformation kernel dimension = 6", system.kernel_dimension == 6,
        "got " + std::to_string(system.kernel_dimension));
    add("deformation system row-reduces to the six published equations (sign-corrected)",
        same_row_space(system.raw, corrected_published_equations()), "");
    add("alpha3 = 0 appears among the raw deformation equations",
        contains_equation(system.raw, kAlpha3), "");
  } catch (const std::exception& e) {
    add("deformation system", false, e.what());
  }

  try {
    const Localizer paper_localizer(paper);
    const Int lhs = localizer.nu32(plan);
    const Int rhs = paper_localizer.nu32(plan);
    add("nu32 independent of table route (derived vs transcribed)", lhs == rhs,
        "derived " + lhs.str() + ", transcribed " + rhs.str());
  } catch (const std::exception& e) {
    add("nu32 independent of table route (derived vs transcribed)", false, e.what());
  }

  return report;
}

}  // namespace ct
