#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdglab/hdg_local.hpp"

namespace hdglab {

struct SweepAxis {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  /// Linear sample i of count, endpoints included.
  double at(int i) const;
  void validate() const;
};

struct SweepGrid {
  SweepAxis axis1;
  std::optional<SweepAxis> axis2{};
};

struct StabilityRecord {
  Complex kh;
  Complex tau;
  int p = 0;
  Shape shape = Shape::tetrahedron;
  double sigma_min = 0.0;
  /// sigma_min / ||A_ii||_2
  double sigma_min_normalized = 0.0;
};

/// Interior block A_ii for h = 1, dispatching on the shape: Helmholtz for
/// segments and squares, Maxwell for cubes and tetrahedra.
CMatrix local_interior_block(Shape shape, int p, Complex kh, Complex tau);

StabilityRecord stability_record(Shape shape, int p, Complex kh, Complex tau);

/// Smallest singular values along kh = factor * axis1 (h = 1).
std::vector<StabilityRecord> sweep_kh(Shape shape, int p, Complex tau, const SweepGrid &grid,
                                      Complex kh_factor = 1.0, unsigned threads = 1);

/// Smallest singular values over the tau rectangle axis1 (Re) x axis2 (Im).
/// Records are ordered with Re(tau) fastest.
std::vector<StabilityRecord> sweep_tau_plane(Shape shape, int p, Complex kh, const SweepGrid &grid,
                                             unsigned threads = 1);

struct KhMinimum {
  double kh = 0.0;
  double sigma_min_normalized = 0.0;
  /// sigma_max / sigma_min of A_ii at kh.
  double condition = 0.0;
};

/// Local minima of a real-kh sweep, each refined by golden-section search on
/// sigma_min / sigma_max between its grid neighbours. Ordered by kh.
std::vector<KhMinimum> refine_kh_minima(Shape shape, int p, Complex tau,
                                        const std::vector<StabilityRecord> &sweep);

struct Theorem1Sample {
  Complex k;
  Complex tau;
  int p = 0;
  Shape shape = Shape::square;
  double local_normalized = 0.0;
  /// Normalized sigma_min of the n = 2 condensed Helmholtz matrix.
  double global_normalized = 0.0;
  bool ok = true;
};

struct Theorem1Report {
  int samples = 0;
  int violations = 0;
  double min_local_normalized = 1.0;
  double min_global_normalized = 1.0;
  std::vector<Theorem1Sample> counterexamples;
};

/// Draws (k, tau, shape, p) with Re(tau) != 0 for real k and
/// Im(k) Re(tau) <= 0 otherwise, and checks that every local interior block
/// and the n = 2 condensed Helmholtz matrix are nonsingular.
Theorem1Report verify_theorem1_samples(int n_samples, std::uint64_t seed, unsigned threads = 1);

} // namespace hdglab
