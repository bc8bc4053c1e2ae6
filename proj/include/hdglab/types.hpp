#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hdglab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex I{0.0, 1.0};

/// Requested (shape, order, system) combination has no assembler.
class UnsupportedConfiguration : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The interior block of an element matrix is numerically singular, so static
/// condensation is impossible. Carries the parameters that produced it.
class LocalSingularityError : public std::runtime_error {
public:
  LocalSingularityError(Complex k, Complex tau, double h, double sigma_ratio,
                        const std::string &where = {});

  Complex k;
  Complex tau;
  double h;
  /// sigma_min / sigma_max of the interior block.
  double sigma_ratio;
};

/// A dispersion root solve failed to converge.
class RootNotFound : public std::runtime_error {
public:
  RootNotFound(const std::string &what, Complex last_iterate, double last_residual,
               int iterations)
      : std::runtime_error(what), last_iterate(last_iterate),
        last_residual(last_residual), iterations(iterations) {}

  Complex last_iterate;
  double last_residual;
  int iterations;
};

std::string format_complex(Complex z);

} // namespace hdglab
