#pragma once

// Shared assembler for the first-order Helmholtz system, used by both the HDG
// and the hybrid Raviart-Thomas elements (they differ only in spaces and tau).

#include <vector>

#include "hdglab/basis_quadrature.hpp"
#include "hdglab/hdg_local.hpp"

namespace hdglab::detail {

struct HelmholtzSpaces {
  /// One scalar basis per vector component (1 in 1D, 2 in 2D).
  std::vector<ScalarBasis> flux;
  ScalarBasis potential;
  /// Degree of the P_p trace space on each face (ignored in 1D).
  int trace_order;
};

ElementMatrixSet assemble_helmholtz_forms(Shape shape, Complex k, Complex tau, double h,
                                          int quadrature_order, const HelmholtzSpaces &spaces);

} // namespace hdglab::detail
