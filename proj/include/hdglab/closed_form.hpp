#pragma once

#include <array>

#include "hdglab/types.hpp"

// Closed-form lowest-order dispersion relations (h = 1), used as oracles for
// the numerical symbol roots.
namespace hdglab::closed_form {

/// 1D HDG, p = 0: k_h = arccos(1 - kh^2 / (2 + i kh (tau + 1/tau))).
Complex hdg1d_k_h(Complex kh, Complex tau);

/// 1D HDG, p = 0, half-angle form: cos^2(k_h / 2).
Complex hdg1d_half_angle_c2(Complex kh, Complex tau);

/// 1D HDG, p = 0 stencil: diagonal and neighbour coefficients of the
/// condensed equation for one trace node.
std::array<Complex, 2> hdg1d_stencil(Complex kh, Complex tau);

/// 2D HDG, p = 0: per-axis solution of the sufficient conditions,
/// c_j^2 = 1 - (k_j)^2/(2i) * kh tau / (k_j^2 + kh^2 tau^2 - 2i kh tau),
/// with k_1 = kh cos(theta), k_2 = kh sin(theta). Returns (k_h1, k_h2).
std::array<Complex, 2> hdg2d_p0_axis_wavenumbers(double kh, Complex tau, double theta);

/// The 2x2 symbol of the lowest-order HDG lattice written in (c_j, d_j)
/// variables for the wave vector (k_h1, k_h2).
CMatrix hdg2d_p0_symbol(Complex kh, Complex tau, Complex k_h1, Complex k_h2);

/// 2D HRT, p = 0: left-hand side of the lattice relation in c_j = cos(k_hj / 2).
Complex hrt2d_p0_relation(Complex kh, Complex k_h1, Complex k_h2);

/// 2D HRT, p = 0: per-axis roots k_hj = 2 arccos(sqrt((12 - k_j^2) / (2 k_j^2 + 12))).
std::array<Complex, 2> hrt2d_p0_axis_wavenumbers(double kh, double theta);

/// |(k_h1, k_h2)| as sqrt(k_h1^2 + k_h2^2).
Complex combine_axes(const std::array<Complex, 2> &k);

} // namespace hdglab::closed_form
