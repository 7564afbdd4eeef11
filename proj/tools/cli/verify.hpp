#pragma once

#include <cstdint>
#include <ostream>

#include "epsreg/dirac.hpp"

namespace epsreg::cli {

/// Structural checks of the separated basis b_0 .. b_N at one eps. Gram
/// off-diagonals are relative: |G_ij| / sqrt(G_ii G_jj).
struct BasisReport {
  double l2_offdiag = 0.0;
  double energy_offdiag = 0.0;
  double helmholtz = 0.0;
  double min_nonvanishing = 0.0;
  double symbol_defect = 0.0;
};

BasisReport basis_report(DiracKind kind, int max_order, double epsilon);

/// Runs the property suite, printing one PASS/FAIL line per check. Returns
/// the number of failed checks.
int run_property_suite(std::ostream& out, std::uint64_t seed, unsigned threads);

}  // namespace epsreg::cli
