#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hdglab/dispersion.hpp"
#include "hdglab/linalg.hpp"

namespace hdglab {

double total_error(int p, double kh, Complex tau, int n_angles) {
  // k_h(theta) = k_h(pi/2 - theta) on the square lattice, so only the angles
  // in [0, pi/4] are solved.
  const auto all = uniform_angles(n_angles);
  std::vector<double> half;
  for (double t : all)
    if (t <= std::numbers::pi / 4 + 1e-15) half.push_back(t);
  try {
    const auto results = solve_angles({Method::hdg, p, tau, 2}, kh, half, 1);
    const ErrorMetrics m = error_metrics(kh, results);
    return m.valid ? m.eps_total : std::numeric_limits<double>::infinity();
  } catch (const LocalSingularityError &) {
    return std::numeric_limits<double>::infinity();
  }
}

namespace {

// Golden-section minimization of f on [lo, hi] down to an interval of width tol.
template <class F> double golden_minimize(F &&f, double lo, double hi, double tol, double &fbest) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    }
  }
  if (f1 < f2) {
    fbest = f1;
    return x1;
  }
  fbest = f2;
  return x2;
}

} // namespace

OptimalTau optimal_tau_search(int p, double kh, TauBranch branch, const TauSearchDomain &domain,
                              unsigned threads) {
  if (!(kh > 0.0)) throw std::invalid_argument("kh must be positive");
  if (!(domain.spacing > 0.0) || !(domain.tolerance > 0.0))
    throw std::invalid_argument("search spacing and tolerance must be positive");
  const bool pos = branch == TauBranch::im_pos;
  // The branch excludes the real axis.
  const double im_lo = pos ? std::max(domain.im_min, 0.0) : domain.im_min;
  const double im_hi = pos ? domain.im_max : std::min(domain.im_max, 0.0);
  if (!(im_lo < im_hi)) throw std::invalid_argument("search domain does not meet the branch");

  std::vector<double> res, ims;
  for (int i = 0;; ++i) {
    const double x = domain.re_min + i * domain.spacing;
    if (x > domain.re_max + 1e-12) break;
    res.push_back(std::abs(x) < 1e-12 ? 0.0 : x);
  }
  for (int i = 0;; ++i) {
    const double y = domain.im_min + i * domain.spacing;
    if (y > domain.im_max + 1e-12) break;
    if ((pos && y > 1e-12) || (!pos && y < -1e-12)) ims.push_back(y);
  }
  std::vector<double> values(res.size() * ims.size());
  parallel_for(values.size(), threads, [&](std::size_t idx) {
    const Complex tau(res[idx % res.size()], ims[idx / res.size()]);
    values[idx] = total_error(p, kh, tau, domain.n_angles);
  });
  const std::size_t best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());

  OptimalTau out;
  out.grid_tau = {res[best % res.size()], ims[best / res.size()]};
  out.grid_eps_total = values[best];
  if (!std::isfinite(out.grid_eps_total)) {
    out.tau = out.grid_tau;
    out.eps_total = out.grid_eps_total;
    return out;
  }

  // Coordinate-wise refinement inside one grid cell around the best node.
  double re = out.grid_tau.real(), im = out.grid_tau.imag(), f = out.grid_eps_total;
  const double h = domain.spacing;
  const double inner = domain.tolerance / 10;
  for (int round = 0; round < 8; ++round) {
    const double re_old = re, im_old = im;
    double f_re = f;
    const double re_new = golden_minimize(
        [&](double x) { return total_error(p, kh, {x, im}, domain.n_angles); },
        std::max(domain.re_min, re - h), std::min(domain.re_max, re + h), inner, f_re);
    if (f_re < f) re = re_new, f = f_re;
    double f_im = f;
    const double lo = std::max(im_lo, im - h);
    const double hi = std::min(im_hi, im + h);
    const double im_new = golden_minimize(
        [&](double y) { return total_error(p, kh, {re, y}, domain.n_angles); }, lo, hi, inner,
        f_im);
    if (f_im < f) im = im_new, f = f_im;
    if (std::abs(re - re_old) < domain.tolerance && std::abs(im - im_old) < domain.tolerance)
      break;
  }
  out.tau = {re, im};
  out.eps_total = f;
  return out;
}

} // namespace hdglab
