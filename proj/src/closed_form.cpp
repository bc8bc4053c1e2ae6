#include "hdglab/closed_form.hpp"

#include <cmath>

namespace hdglab::closed_form {

Complex hdg1d_k_h(Complex kh, Complex tau) {
  return std::acos(1.0 - kh * kh / (2.0 + I * kh * (tau + 1.0 / tau)));
}

Complex hdg1d_half_angle_c2(Complex kh, Complex tau) {
  return 1.0 - (kh * kh / 2.0) * (tau / (I * kh * (tau * tau + 1.0) + 2.0 * tau));
}

std::array<Complex, 2> hdg1d_stencil(Complex kh, Complex tau) {
  const Complex a = 1.0 / (I * kh);
  const Complex b = tau * tau / (I * kh + 2.0 * tau);
  return {2.0 * (a - b + tau), -a - b};
}

std::array<Complex, 2> hdg2d_p0_axis_wavenumbers(double kh, Complex tau, double theta) {
  const double k[2] = {kh * std::cos(theta), kh * std::sin(theta)};
  std::array<Complex, 2> out;
  for (int j = 0; j < 2; ++j) {
    const double kj2 = k[j] * k[j];
    const Complex c2 =
        1.0 - kj2 / (2.0 * I) * (kh * tau / (kj2 + kh * kh * tau * tau - 2.0 * I * kh * tau));
    out[j] = 2.0 * std::acos(std::sqrt(c2));
  }
  return out;
}

CMatrix hdg2d_p0_symbol(Complex kh, Complex tau, Complex k_h1, Complex k_h2) {
  const Complex c1 = std::cos(k_h1 / 2.0), c2 = std::cos(k_h2 / 2.0);
  const Complex d1 = 2.0 * I * (1.0 - c1 * c1) - tau * kh;
  const Complex d2 = 2.0 * I * (1.0 - c2 * c2) - tau * kh;
  const Complex t2 = tau * tau;
  CMatrix F(2, 2);
  F(0, 0) = 2.0 * kh * t2 * c1 * c2;
  F(0, 1) = d1 * (4.0 * tau + I * kh) + 2.0 * kh * t2 * c1 * c1;
  F(1, 0) = d2 * (4.0 * tau + I * kh) + 2.0 * kh * t2 * c2 * c2;
  F(1, 1) = F(0, 0);
  return F;
}

Complex hrt2d_p0_relation(Complex kh, Complex k_h1, Complex k_h2) {
  const Complex c1 = std::cos(k_h1 / 2.0), c2 = std::cos(k_h2 / 2.0);
  const Complex s1 = c1 * c1, s2 = c2 * c2, k2 = kh * kh;
  return (s1 + s2) * (2.0 * k2 - 12.0) + s1 * s2 * (4.0 * k2 + 48.0) + k2 - 24.0;
}

std::array<Complex, 2> hrt2d_p0_axis_wavenumbers(double kh, double theta) {
  const double k[2] = {kh * std::cos(theta), kh * std::sin(theta)};
  std::array<Complex, 2> out;
  for (int j = 0; j < 2; ++j) {
    const double kj2 = k[j] * k[j];
    out[j] = 2.0 * std::acos(std::sqrt(Complex((12.0 - kj2) / (2.0 * kj2 + 12.0))));
  }
  return out;
}

Complex combine_axes(const std::array<Complex, 2> &k) { return std::sqrt(k[0] * k[0] + k[1] * k[1]); }

} // namespace hdglab::closed_form
