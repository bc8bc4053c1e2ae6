#pragma once

#include <string>
#include <vector>

#include "hdglab/basis_quadrature.hpp"
#include "hdglab/types.hpp"

namespace hdglab {

struct HelmholtzLocalConfig {
  Complex k;
  Complex tau;
  double h = 1.0;
  int p = 0;
  Shape shape = Shape::square; // segment or square
};

struct MaxwellLocalConfig {
  Complex k;
  Complex tau;
  double h = 1.0;
  int p = 0;
  Shape shape = Shape::cube; // cube or tetrahedron
};

/// Element matrix split into interior and trace blocks:
///
///   [ A_ii  A_it ] [interior]
///   [ A_ti  A_tt ] [trace   ]
///
/// The pairing is bilinear (test functions are not conjugated).
struct ElementMatrixSet {
  CMatrix A_ii, A_it, A_ti, A_tt;
  std::vector<std::string> interior_dof_labels;
  std::vector<std::string> trace_dof_labels;

  // Parameters that produced the blocks, kept for diagnostics.
  Complex k;
  Complex tau;
  double h = 1.0;
  int p = 0;
  Shape shape = Shape::square;

  Eigen::Index interior_size() const { return A_ii.rows(); }
  Eigen::Index trace_size() const { return A_tt.rows(); }
  /// The full (interior + trace) square matrix.
  CMatrix full() const;
};

/// Interior unknowns ordered (u_x basis..., u_y basis..., phi basis...);
/// trace unknowns face by face (see make_element_geometry), P_p on each face
/// in the face's own coordinate. Supports p in {0,1} on segments and squares.
ElementMatrixSet assemble_helmholtz_local(const HelmholtzLocalConfig &cfg);

/// Interior unknowns ordered (E_x, E_y, E_z, H_x, H_y, H_z), each component
/// expanded in the scalar basis; trace unknowns face by face, two tangent
/// directions per face, scalar face basis fastest. Supports p in {0,1} on
/// cubes and p in {0,1,2} on tetrahedra.
ElementMatrixSet assemble_maxwell_local(const MaxwellLocalConfig &cfg);

/// Number of trace unknowns per face for the Helmholtz system of order p.
int helmholtz_face_dofs(int p);

/// Rank tolerance: a matrix is treated as singular when
/// sigma_min <= singular_tolerance * sigma_max.
inline constexpr double singular_tolerance = 1e-12;

struct CondensedElement {
  /// Trace-by-trace Schur complement A_tt - A_ti A_ii^{-1} A_it.
  CMatrix S;
  /// Maps trace values to interior values: x_i = rhs_map * x_t.
  CMatrix rhs_map;
};

/// Static condensation onto the trace unknowns. Throws LocalSingularityError
/// when A_ii is singular to the rank tolerance.
CondensedElement condense(const ElementMatrixSet &em);

} // namespace hdglab
