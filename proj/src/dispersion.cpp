#include "hdglab/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hdglab/linalg.hpp"

namespace hdglab {

namespace {

constexpr int max_root_iterations = 80;

// Continuation ladder kh/8, kh/4, kh/2, kh.
std::array<double, 4> ladder(double kh) { return {kh / 8, kh / 4, kh / 2, kh}; }

DispersionResult continue_root(const std::array<CondensedStencil, 4> &stencils, double kh,
                               double theta) {
  Complex guess = kh / 8;
  DispersionResult r;
  int total = 0;
  for (std::size_t m = 0; m < stencils.size(); ++m) {
    r = refine_root(stencils[m], theta, guess);
    total += r.iterations;
    guess = 2.0 * r.k_h;
  }
  r.iterations = total;
  return r;
}

std::array<CondensedStencil, 4> ladder_stencils(const DispersionProblem &problem, double kh) {
  const auto khs = ladder(kh);
  return {extract_stencil(problem, khs[0]), extract_stencil(problem, khs[1]),
          extract_stencil(problem, khs[2]), extract_stencil(problem, khs[3])};
}

} // namespace

DispersionResult refine_root(const CondensedStencil &stencil, double theta, Complex guess) {
  using LD = long double;
  const LD c = std::cos(static_cast<LD>(theta)), s = std::sin(static_cast<LD>(theta));
  auto g = [&](ComplexLD z) {
    return stencil.dimension == 1 ? normalized_determinant(stencil, z, 0.0L)
                                  : normalized_determinant(stencil, z * c, z * s);
  };
  auto finish = [&](ComplexLD z, ComplexLD gz, int it) {
    DispersionResult r;
    r.theta = theta;
    const Complex zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    r.k_h = zd.real() < 0.0 ? -zd : zd;
    r.residual = static_cast<double>(std::abs(gz));
    r.iterations = it;
    r.converged = true;
    return r;
  };

  ComplexLD z0(guess.real(), guess.imag());
  ComplexLD z1 = z0 + static_cast<LD>(1e-3 * std::max(std::abs(guess), 1e-3));
  ComplexLD g0 = g(z0), g1 = g(z1);
  ComplexLD best_z = z1, best_g = g1;
  bool step_ok = false;
  int polish = 0; // extra secant steps once the step test has passed
  int it = 0;
  while (++it <= max_root_iterations) {
    if (g1 == ComplexLD(0)) return finish(z1, g1, it);
    const ComplexLD step = g1 * (z1 - z0) / (g1 - g0);
    if (!std::isfinite(std::abs(step))) break;
    z0 = z1;
    g0 = g1;
    z1 -= step;
    g1 = g(z1);
    if (std::abs(g1) <= std::abs(best_g)) best_z = z1, best_g = g1;
    if (std::abs(step) <= root_step_tolerance * std::max<LD>(1, std::abs(z1))) step_ok = true;
    if (step_ok && ++polish > 2) break;
  }
  if (step_ok && std::abs(best_g) <= root_residual_tolerance)
    return finish(best_z, best_g, std::min(it, max_root_iterations));
  z1 = best_z;
  g1 = best_g;
  const Complex last(static_cast<double>(z1.real()), static_cast<double>(z1.imag()));
  throw RootNotFound("dispersion root did not converge (theta=" + std::to_string(theta) +
                         ", guess=" + format_complex(guess) + ")",
                     last, static_cast<double>(std::abs(g1)), max_root_iterations);
}

DispersionResult solve_k_h(const DispersionProblem &problem, double kh, double theta) {
  if (!(kh > 0.0)) throw std::invalid_argument("kh must be positive");
  return continue_root(ladder_stencils(problem, kh), kh, theta);
}

std::vector<double> uniform_angles(int n) {
  if (n < 2) throw std::invalid_argument("need at least 2 angles");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::numbers::pi / 2 * i / (n - 1);
  out.back() = std::numbers::pi / 2;
  return out;
}

std::vector<DispersionResult> solve_angles(const DispersionProblem &problem, double kh,
                                           std::span<const double> thetas, unsigned threads) {
  if (!(kh > 0.0)) throw std::invalid_argument("kh must be positive");
  const auto stencils = ladder_stencils(problem, kh);
  std::vector<DispersionResult> out(thetas.size());
  parallel_for(out.size(), threads, [&](std::size_t i) {
    try {
      out[i] = continue_root(stencils, kh, thetas[i]);
    } catch (const RootNotFound &e) {
      out[i].theta = thetas[i];
      out[i].k_h = e.last_iterate;
      out[i].residual = -1.0;
      out[i].iterations = e.iterations;
      out[i].converged = false;
    }
  });
  return out;
}

ErrorMetrics error_metrics(double kh, std::span<const DispersionResult> results) {
  ErrorMetrics m;
  for (const auto &r : results) {
    if (!r.converged) {
      m.valid = false;
      continue;
    }
    m.eps_disp = std::max(m.eps_disp, std::abs(r.k_h.real() - kh));
    m.eps_dissip = std::max(m.eps_dissip, std::abs(r.k_h.imag()));
    m.eps_total = std::max(m.eps_total, std::abs(r.k_h - kh));
  }
  return m;
}

ErrorMetrics error_metrics(const DispersionProblem &problem, double kh, int n_angles,
                           unsigned threads) {
  const auto thetas = uniform_angles(n_angles);
  const auto results = solve_angles(problem, kh, thetas, threads);
  return error_metrics(kh, results);
}

int asymptotic_order(AsymptoticCase c) { return c == AsymptoticCase::hrt2d_p0 ? 3 : 2; }

Complex asymptotic_coefficient(AsymptoticCase c, Complex tau, double theta) {
  switch (c) {
  case AsymptoticCase::hdg1d:
    if (tau == Complex(0.0)) throw std::invalid_argument("tau must be nonzero");
    return -(tau * tau + 1.0) * I / (4.0 * tau);
  case AsymptoticCase::hdg2d_p0:
    if (tau == Complex(0.0)) throw std::invalid_argument("tau must be nonzero");
    return -I * (std::cos(4 * theta) + 3.0 + 4.0 * tau * tau) / (16.0 * tau);
  case AsymptoticCase::hrt2d_p0:
    return -(std::cos(4 * theta) + 3.0) / 96.0;
  }
  throw std::invalid_argument("unknown asymptotic case");
}

namespace {

// Size of the terms making up C, used when they cancel exactly.
double uncancelled_scale(AsymptoticCase c, Complex tau, double theta) {
  const double t = std::abs(tau);
  switch (c) {
  case AsymptoticCase::hdg1d:
    return (t * t + 1.0) / (4.0 * t);
  case AsymptoticCase::hdg2d_p0:
    return (std::abs(std::cos(4 * theta)) + 3.0 + 4.0 * t * t) / (16.0 * t);
  case AsymptoticCase::hrt2d_p0:
    return (std::abs(std::cos(4 * theta)) + 3.0) / 96.0;
  }
  return 1.0;
}

DispersionProblem problem_for(AsymptoticCase c, Complex tau) {
  switch (c) {
  case AsymptoticCase::hdg1d:
    return {Method::hdg, 0, tau, 1};
  case AsymptoticCase::hdg2d_p0:
    return {Method::hdg, 0, tau, 2};
  case AsymptoticCase::hrt2d_p0:
    return {Method::hrt, 0, 0.0, 2};
  }
  throw std::invalid_argument("unknown asymptotic case");
}

} // namespace

AsymptoticReport verify_asymptotics(AsymptoticCase c, Complex tau, double theta,
                                    const std::vector<double> &kh_list) {
  if (kh_list.size() < 3) throw std::invalid_argument("need at least 3 kh values");
  for (std::size_t i = 0; i < kh_list.size(); ++i) {
    if (!(kh_list[i] > 0.0 && kh_list[i] <= 0.1))
      throw std::invalid_argument("kh values must lie in (0, 0.1]");
    if (i > 0 && !(kh_list[i] < kh_list[i - 1]))
      throw std::invalid_argument("kh values must be decreasing");
  }
  AsymptoticReport rep;
  rep.coefficient = asymptotic_coefficient(c, tau, theta);
  const double full = uncancelled_scale(c, tau, theta);
  rep.scale = std::abs(rep.coefficient) > 1e-12 * full ? std::abs(rep.coefficient) : full;
  const int m = asymptotic_order(c);
  const DispersionProblem problem = problem_for(c, tau);
  for (double kh : kh_list) {
    const DispersionResult r = solve_k_h(problem, kh, theta);
    AsymptoticSample s;
    s.kh = kh;
    s.ratio = (r.k_h - kh) / std::pow(kh, m);
    s.deviation = std::abs(s.ratio - rep.coefficient) / rep.scale;
    rep.samples.push_back(s);
  }
  for (std::size_t i = 1; i < rep.samples.size(); ++i)
    if (rep.samples[i].deviation > rep.samples[i - 1].deviation + 1e-4) rep.improving = false;
  return rep;
}

} // namespace hdglab
