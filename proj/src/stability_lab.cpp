#include "hdglab/stability_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hdglab/global_assembly.hpp"
#include "hdglab/linalg.hpp"

namespace hdglab {

double SweepAxis::at(int i) const {
  if (i == count - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / (count - 1);
}

void SweepAxis::validate() const {
  if (count < 2) throw std::invalid_argument("sweep axis '" + name + "' needs count >= 2");
  if (!(start < stop)) throw std::invalid_argument("sweep axis '" + name + "' needs start < stop");
}

CMatrix local_interior_block(Shape shape, int p, Complex kh, Complex tau) {
  switch (shape) {
  case Shape::segment:
  case Shape::square:
    return assemble_helmholtz_local({kh, tau, 1.0, p, shape}).A_ii;
  case Shape::cube:
  case Shape::tetrahedron:
    return assemble_maxwell_local({kh, tau, 1.0, p, shape}).A_ii;
  }
  throw UnsupportedConfiguration("unknown shape");
}

StabilityRecord stability_record(Shape shape, int p, Complex kh, Complex tau) {
  const SingularValueBounds sv = extreme_singular_values(local_interior_block(shape, p, kh, tau));
  return {kh, tau, p, shape, sv.sigma_min, sv.normalized()};
}

std::vector<StabilityRecord> sweep_kh(Shape shape, int p, Complex tau, const SweepGrid &grid,
                                      Complex kh_factor, unsigned threads) {
  grid.axis1.validate();
  // Fail early on unsupported (shape, p) instead of inside a worker.
  local_interior_block(shape, p, kh_factor * grid.axis1.at(0), tau);
  std::vector<StabilityRecord> out(grid.axis1.count);
  parallel_for(out.size(), threads, [&](std::size_t i) {
    out[i] = stability_record(shape, p, kh_factor * grid.axis1.at(static_cast<int>(i)), tau);
  });
  return out;
}

std::vector<StabilityRecord> sweep_tau_plane(Shape shape, int p, Complex kh, const SweepGrid &grid,
                                             unsigned threads) {
  grid.axis1.validate();
  if (!grid.axis2) throw std::invalid_argument("tau-plane sweep needs a second axis");
  grid.axis2->validate();
  local_interior_block(shape, p, kh, Complex(grid.axis1.at(0), grid.axis2->at(0)));
  const int nre = grid.axis1.count;
  const int nim = grid.axis2->count;
  std::vector<StabilityRecord> out(static_cast<std::size_t>(nre) * nim);
  parallel_for(out.size(), threads, [&](std::size_t idx) {
    const int a = static_cast<int>(idx % nre);
    const int b = static_cast<int>(idx / nre);
    out[idx] = stability_record(shape, p, kh, Complex(grid.axis1.at(a), grid.axis2->at(b)));
  });
  return out;
}

namespace {

double normalized_at(Shape shape, int p, Complex tau, double kh) {
  return stability_record(shape, p, kh, tau).sigma_min_normalized;
}

} // namespace

std::vector<KhMinimum> refine_kh_minima(Shape shape, int p, Complex tau,
                                        const std::vector<StabilityRecord> &sweep) {
  std::vector<KhMinimum> out;
  const std::size_t n = sweep.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double v = sweep[i].sigma_min_normalized;
    if (!(v < sweep[i - 1].sigma_min_normalized && v <= sweep[i + 1].sigma_min_normalized)) continue;
    double lo = sweep[i - 1].kh.real();
    double hi = sweep[i + 1].kh.real();
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = normalized_at(shape, p, tau, x1), f2 = normalized_at(shape, p, tau, x2);
    double best_x = sweep[i].kh.real(), best_f = v;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = normalized_at(shape, p, tau, x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = normalized_at(shape, p, tau, x2);
      }
      if (f1 < best_f) best_f = f1, best_x = x1;
      if (f2 < best_f) best_f = f2, best_x = x2;
    }
    const double cond = best_f > 0.0 ? 1.0 / best_f : INFINITY;
    out.push_back({best_x, best_f, cond});
  }
  return out;
}

namespace {

Theorem1Sample draw_sample(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double a, double b) { return a + (b - a) * unit(rng); };
  auto sign = [&] { return unit(rng) < 0.5 ? -1.0 : 1.0; };

  static constexpr Shape shapes[] = {Shape::segment, Shape::square, Shape::cube,
                                     Shape::tetrahedron};
  Theorem1Sample s;
  s.shape = shapes[std::min<int>(3, static_cast<int>(unit(rng) * 4))];
  s.p = unit(rng) < 0.5 ? 0 : 1;
  const double re_k = uniform(-12.0, 12.0);
  const bool real_k = unit(rng) < 0.5;
  const double im_k = real_k ? 0.0 : sign() * uniform(0.05, 4.0);
  const double mag_tau = uniform(0.05, 3.0);
  // Real k: any sign of Re(tau). Complex k: Im(k) Re(tau) < 0.
  const double re_tau = real_k ? sign() * mag_tau : -std::copysign(mag_tau, im_k);
  const double im_tau = uniform(-3.0, 3.0);
  s.k = {re_k, im_k};
  s.tau = {re_tau, im_tau};
  return s;
}

void check_sample(Theorem1Sample &s) {
  s.local_normalized = stability_record(s.shape, s.p, s.k, s.tau).sigma_min_normalized;
  // The global claim is for the 2D Helmholtz system; every sample also gets
  // an n = 2 square mesh with the same (k, tau, p).
  try {
    const CondensedGlobalMatrix g = assemble_condensed_helmholtz({2}, s.k, s.tau, s.p);
    s.global_normalized = extreme_singular_values(g.B).normalized();
  } catch (const LocalSingularityError &e) {
    s.global_normalized = 0.0;
  }
  s.ok = s.local_normalized > singular_tolerance && s.global_normalized > singular_tolerance;
}

} // namespace

Theorem1Report verify_theorem1_samples(int n_samples, std::uint64_t seed, unsigned threads) {
  if (n_samples < 1) throw std::invalid_argument("verify_theorem1_samples needs n_samples >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Theorem1Sample> samples(n_samples);
  for (auto &s : samples) s = draw_sample(rng);
  parallel_for(samples.size(), threads, [&](std::size_t i) { check_sample(samples[i]); });

  Theorem1Report report;
  report.samples = n_samples;
  for (const auto &s : samples) {
    report.min_local_normalized = std::min(report.min_local_normalized, s.local_normalized);
    report.min_global_normalized = std::min(report.min_global_normalized, s.global_normalized);
    if (!s.ok) {
      ++report.violations;
      report.counterexamples.push_back(s);
    }
  }
  return report;
}

} // namespace hdglab
