#pragma once

#include "hdglab/hdg_local.hpp"

namespace hdglab {

struct HrtLocalConfig {
  Complex k;
  double h = 1.0;
  int p = 0;
};

/// Hybrid Raviart-Thomas element on a square: flux in Q_{p+1,p} x Q_{p,p+1},
/// potential in Q_p, traces in P_p. Same forms as the HDG Helmholtz element
/// with the stabilization switched off (tau = 0).
ElementMatrixSet assemble_hrt_local(const HrtLocalConfig &cfg);

} // namespace hdglab
