#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "hdglab/hdg_local.hpp"

namespace hdglab {

enum class EdgeOrientation { horizontal, vertical };

/// Lattice edge: horizontal (i,j) joins (i,j)-(i+1,j); vertical (i,j) joins
/// (i,j)-(i,j+1), in units of h.
struct EdgeId {
  EdgeOrientation orientation;
  int i;
  int j;

  friend auto operator<=>(const EdgeId &, const EdgeId &) = default;
};

/// Element (i,j) = [i,i+1] x [j,j+1] (units of h); its local faces are
/// bottom, right, top, left.
std::array<EdgeId, 4> element_edges(int i, int j);

/// Uniform n x n square mesh of the unit square.
struct UniformMesh2D {
  int n = 4;

  double h() const { return 1.0 / n; }
  bool is_interior(const EdgeId &e) const;
  /// Interior edges: horizontal edges first (row-major in (j,i)), then vertical.
  std::vector<EdgeId> interior_edges() const;
};

struct CondensedGlobalMatrix {
  CMatrix B;
  /// (edge, local trace basis index) -> row/column.
  std::map<std::pair<EdgeId, int>, Eigen::Index> dof_index;
  int p = 0;
};

/// Condensed HDG Helmholtz matrix over interior traces with homogeneous
/// Dirichlet data on the boundary.
CondensedGlobalMatrix assemble_condensed_helmholtz(const UniformMesh2D &mesh, Complex k,
                                                   Complex tau, int p);

/// Scatter of a precomputed element Schur complement (same on every element).
CondensedGlobalMatrix scatter_condensed(const UniformMesh2D &mesh, const CMatrix &S, int p);

/// sigma_max / sigma_min from a full SVD; +infinity when sigma_min < 1e-300.
double condition_number(const CMatrix &B);
inline double condition_number(const CondensedGlobalMatrix &B) { return condition_number(B.B); }

struct ConditionSample {
  double k;
  double cond;
};

/// Condition numbers of the condensed matrix on a uniform grid of real k.
/// Local singularities are reported as +infinity.
std::vector<ConditionSample> condition_sweep(const UniformMesh2D &mesh, Complex tau, int p,
                                             double k_start, double k_stop, int count,
                                             unsigned threads = 1);

/// Maximizes the condition number over [lo, hi] by golden-section search on
/// sigma_min / sigma_max. Used to resolve resonance peaks between grid points.
ConditionSample refine_condition_peak(const UniformMesh2D &mesh, Complex tau, int p, double lo,
                                      double hi);

} // namespace hdglab
