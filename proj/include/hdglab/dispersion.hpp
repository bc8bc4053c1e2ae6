#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "hdglab/global_assembly.hpp"
#include "hdglab/hdg_local.hpp"

namespace hdglab {

enum class Method { hdg, hrt };

const char *to_string(Method m);
Method parse_method(const std::string &name);

/// Discretization whose lattice is analysed. tau is ignored for HRT.
/// dimension 1 (HDG only) uses the segment lattice, 2 the square lattice.
struct DispersionProblem {
  Method method = Method::hdg;
  int p = 0;
  Complex tau = 1.0;
  int dimension = 2;
};

using ComplexLD = std::complex<long double>;

struct StencilEntry {
  int t = 0;
  int s = 0;
  std::array<int, 2> offset{0, 0};
  Complex value;
  /// Extended-precision copy used by the root finder. At small kh the symbol
  /// is O(kh) while the coefficients are O(1/kh), so double rounding in the
  /// condensation alone would swamp the (kh)^3 terms.
  ComplexLD precise;
};

/// Condensed stencil on the infinite lattice with h = 1. Node types are
/// (orientation, trace basis index), horizontal edges first; in 1D there is
/// one node type per trace basis function. Offsets are lattice cell
/// differences between the coupled node and the centre node.
struct CondensedStencil {
  int dimension = 2;
  int num_types = 0;
  std::vector<std::string> type_labels;
  std::vector<StencilEntry> entries; // sorted by (t, s, offset)
  Complex kh;

  /// Sum of |D_{t,s,l}| over row t.
  double row_magnitude(int t) const;
};

using CMatrixLD = Eigen::Matrix<ComplexLD, Eigen::Dynamic, Eigen::Dynamic>;

/// Stencil of the lattice built from one element Schur complement S
/// (square faces bottom, right, top, left; segment faces left, right).
CondensedStencil stencil_from_element(const CMatrix &S, int dimension);
CondensedStencil stencil_from_element(const CMatrixLD &S, int dimension);

CondensedStencil extract_stencil(const DispersionProblem &problem, Complex kh);

/// Rows of a condensed global matrix (assembled at wavenumber k) belonging to
/// the given interior edge, rescaled to h = 1 (B scales like h). Used as an
/// independent route to the stencil and to check translation invariance.
CondensedStencil stencil_from_global(const CondensedGlobalMatrix &global, const UniformMesh2D &mesh,
                                     const EdgeId &centre, Complex k);

/// Coefficient D_{t,s,l}, zero when absent.
Complex stencil_coefficient(const CondensedStencil &stencil, int t, int s, std::array<int, 2> offset);

/// F_{t,s} = sum_l D_{t,s,l} exp(i (kx, ky) . l).
CMatrix symbol_at(const CondensedStencil &stencil, Complex kx, Complex ky);
CMatrix symbol(const CondensedStencil &stencil, Complex k_h, double theta);

/// det F divided by the product of the stencil row magnitudes, evaluated in
/// extended precision.
ComplexLD normalized_determinant(const CondensedStencil &stencil, ComplexLD kx, ComplexLD ky);

struct DispersionResult {
  double theta = 0.0;
  Complex k_h;
  /// |det F| / prod_t row_magnitude(t) at the root; -1 when no root was found.
  double residual = -1.0;
  int iterations = 0;
  bool converged = false;
};

inline constexpr double root_step_tolerance = 1e-13;
inline constexpr double root_residual_tolerance = 1e-11;

/// Secant iteration on the normalized determinant along direction theta,
/// started at `guess`. The returned root is reflected to Re(k_h) >= 0.
/// Throws RootNotFound.
DispersionResult refine_root(const CondensedStencil &stencil, double theta, Complex guess);

/// Discrete wavenumber for real kh (h = 1): continuation kh/8, kh/4, kh/2, kh
/// starting from k_h = kh/8.
DispersionResult solve_k_h(const DispersionProblem &problem, double kh, double theta);

/// Angle set of n points uniform over [0, pi/2], endpoints included.
std::vector<double> uniform_angles(int n);

/// Same as solve_k_h for each angle; stencils are shared. Failed solves are
/// reported with residual -1 instead of throwing.
std::vector<DispersionResult> solve_angles(const DispersionProblem &problem, double kh,
                                           std::span<const double> thetas, unsigned threads = 1);

struct ErrorMetrics {
  double eps_disp = 0.0;
  double eps_dissip = 0.0;
  double eps_total = 0.0;
  /// False when any root solve failed (those angles are skipped).
  bool valid = true;
};

ErrorMetrics error_metrics(double kh, std::span<const DispersionResult> results);
ErrorMetrics error_metrics(const DispersionProblem &problem, double kh, int n_angles = 181,
                           unsigned threads = 1);

enum class AsymptoticCase { hdg1d, hdg2d_p0, hrt2d_p0 };

/// Exponent m in k_h h - kh ~ C (kh)^m.
int asymptotic_order(AsymptoticCase c);

/// Leading coefficient C of k_h h - kh:
///   hdg1d     -i (tau^2 + 1) / (4 tau)
///   hdg2d_p0  -i (cos 4theta + 3 + 4 tau^2) / (16 tau)
///   hrt2d_p0  -(cos 4theta + 3) / 96
/// The 2D HDG coefficient reduces to the 1D one at theta = 0. Throws
/// std::invalid_argument for tau = 0 in the HDG cases.
Complex asymptotic_coefficient(AsymptoticCase c, Complex tau, double theta);

struct AsymptoticSample {
  double kh = 0.0;
  Complex ratio;          // (k_h h - kh) / (kh)^m
  double deviation = 0.0; // |ratio - C| / scale
};

struct AsymptoticReport {
  Complex coefficient;
  /// |C|, or the magnitude of the non-cancelling terms when C vanishes.
  double scale = 0.0;
  std::vector<AsymptoticSample> samples;
  bool improving = true;
};

/// kh_list must be decreasing, within (0, 0.1], with at least 3 entries.
AsymptoticReport verify_asymptotics(AsymptoticCase c, Complex tau, double theta,
                                    const std::vector<double> &kh_list);

enum class TauBranch { im_pos, im_neg };

struct TauSearchDomain {
  double re_min = -1.0, re_max = 1.0;
  double im_min = -1.5, im_max = 1.5;
  double spacing = 0.05;
  double tolerance = 1e-3;
  int n_angles = 181;
};

struct OptimalTau {
  Complex tau;
  double eps_total = 0.0;
  /// Best point of the coarse grid, before refinement.
  Complex grid_tau;
  double grid_eps_total = 0.0;
};

/// eps_total of the HDG lattice, +infinity when the element is singular or a
/// root fails. Uses the symmetry k_h(theta) = k_h(pi/2 - theta).
double total_error(int p, double kh, Complex tau, int n_angles = 181);

OptimalTau optimal_tau_search(int p, double kh, TauBranch branch,
                              const TauSearchDomain &domain = {}, unsigned threads = 1);

} // namespace hdglab
