#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hdglab/closed_form.hpp"
#include "hdglab/dispersion.hpp"

using namespace hdglab;
namespace cf = hdglab::closed_form;

namespace {

constexpr double pi = std::numbers::pi;
const Complex tau_opt(0.0, std::sqrt(3.0) / 2);

double max_coefficient(const CondensedStencil &s) {
  double m = 0.0;
  for (const auto &e : s.entries) m = std::max(m, std::abs(e.value));
  return m;
}

double stencil_distance(const CondensedStencil &a, const CondensedStencil &b) {
  double d = 0.0;
  for (const auto *x : {&a, &b})
    for (const auto &e : x->entries)
      d = std::max(d, std::abs(stencil_coefficient(a, e.t, e.s, e.offset) -
                               stencil_coefficient(b, e.t, e.s, e.offset)));
  return d;
}

} // namespace

TEST_SUITE("dispersion") {

TEST_CASE("1D stencil equals the hand-condensed equation") {
  for (Complex tau : {Complex(1.0), Complex(0.0, 1.0), Complex(1.0, 1.0)})
    for (double kh : {0.1, 0.5, 1.0}) {
      const CondensedStencil st = extract_stencil({Method::hdg, 0, tau, 1}, kh);
      const auto ref = cf::hdg1d_stencil(kh, tau);
      // The assembled row carries an overall factor -1 relative to the
      // hand-written form.
      const Complex scale = -stencil_coefficient(st, 0, 0, {0, 0}) / ref[0];
      CHECK(std::abs(scale - 1.0) < 1e-13);
      CHECK(std::abs(-stencil_coefficient(st, 0, 0, {1, 0}) - ref[1]) < 1e-13 * std::abs(ref[1]));
      CHECK(std::abs(-stencil_coefficient(st, 0, 0, {-1, 0}) - ref[1]) < 1e-13 * std::abs(ref[1]));
    }
}

TEST_CASE("1D roots match the closed form and the half-angle form") {
  for (double kh : {0.01, 0.1, 0.5, 1.0})
    for (Complex tau : {Complex(1.0), Complex(0.0, 1.0), Complex(1.0, 1.0), tau_opt}) {
      const DispersionResult r = solve_k_h({Method::hdg, 0, tau, 1}, kh, 0.0);
      CHECK(r.converged);
      CHECK(r.residual <= root_residual_tolerance);
      CHECK(std::abs(r.k_h - cf::hdg1d_k_h(kh, tau)) <= 1e-10);
      const Complex c = std::cos(r.k_h / 2.0);
      CHECK(std::abs(c * c - cf::hdg1d_half_angle_c2(kh, tau)) <= 1e-10);
    }
}

TEST_CASE("2D p = 0: node types and the pi/4 symmetry of the symbol") {
  const CondensedStencil st = extract_stencil({Method::hdg, 0, 1.0, 2}, pi / 4);
  CHECK(st.num_types == 2);
  CHECK(extract_stencil({Method::hdg, 1, 1.0, 2}, pi / 4).num_types == 4);
  const CMatrix F = symbol(st, Complex(0.7, -0.1), pi / 4);
  CHECK(std::abs(F(0, 0) - F(1, 1)) <= 1e-14 * F.norm());
}

TEST_CASE("2D p = 0 roots are roots of the (c, d) form of the symbol") {
  for (Complex tau : {Complex(1.0), tau_opt, Complex(0.5, -0.5)})
    for (double theta : {0.0, 0.3, pi / 4}) {
      const double kh = pi / 4;
      const DispersionResult r = solve_k_h({Method::hdg, 0, tau, 2}, kh, theta);
      const CMatrix Fp = cf::hdg2d_p0_symbol(kh, tau, r.k_h * std::cos(theta), r.k_h * std::sin(theta));
      CHECK(std::abs(Fp.determinant()) <= 1e-13 * Fp.squaredNorm());
    }
}

TEST_CASE("2D p = 0 sufficient conditions give lattice roots") {
  for (Complex tau : {Complex(1.0), tau_opt})
    for (double theta : {0.0, pi / 8, pi / 4, 1.1}) {
      const double kh = pi / 4;
      const auto ax = cf::hdg2d_p0_axis_wavenumbers(kh, tau, theta);
      const CondensedStencil st = extract_stencil({Method::hdg, 0, tau, 2}, kh);
      CHECK(std::abs(normalized_determinant(st, ComplexLD(ax[0]), ComplexLD(ax[1]))) <= 1e-11);
    }
  // Along the axis and the diagonal the constructed wave vector points in the
  // propagation direction, so its length is the root itself.
  for (double theta : {0.0, pi / 4}) {
    const DispersionResult r = solve_k_h({Method::hdg, 0, 1.0, 2}, pi / 4, theta);
    CHECK(std::abs(r.k_h - cf::combine_axes(cf::hdg2d_p0_axis_wavenumbers(pi / 4, 1.0, theta))) <= 1e-10);
  }
}

TEST_CASE("HRT p = 0 roots satisfy the closed-form relation") {
  for (double kh : {0.1, pi / 8, pi / 4})
    for (double theta : {0.0, 0.2, pi / 8, pi / 4}) {
      const DispersionResult r = solve_k_h({Method::hrt, 0, 0.0, 2}, kh, theta);
      CHECK(std::abs(cf::hrt2d_p0_relation(kh, r.k_h * std::cos(theta), r.k_h * std::sin(theta))) <=
            1e-10);
      CHECK(std::abs(r.k_h.imag()) <= 1e-10);
    }
  for (double theta : {0.0, pi / 4}) {
    const DispersionResult r = solve_k_h({Method::hrt, 0, 0.0, 2}, pi / 4, theta);
    CHECK(std::abs(r.k_h - cf::combine_axes(cf::hrt2d_p0_axis_wavenumbers(pi / 4, theta))) <= 1e-10);
  }
}

TEST_CASE("stencil is translation invariant and equals rows of the global matrix") {
  for (int p : {0, 1}) {
    const UniformMesh2D mesh{8};
    const double kh = 0.9;
    const Complex tau(1.0, 0.4);
    const Complex k = kh / mesh.h();
    const CondensedGlobalMatrix g = assemble_condensed_helmholtz(mesh, k, tau, p);
    const CondensedStencil direct = extract_stencil({Method::hdg, p, tau, 2}, kh);
    const double scale = max_coefficient(direct);
    const CondensedStencil a_h = stencil_from_global(g, mesh, {EdgeOrientation::horizontal, 3, 4}, k);
    const CondensedStencil b_h = stencil_from_global(g, mesh, {EdgeOrientation::horizontal, 4, 2}, k);
    const CondensedStencil a_v = stencil_from_global(g, mesh, {EdgeOrientation::vertical, 3, 4}, k);
    const CondensedStencil b_v = stencil_from_global(g, mesh, {EdgeOrientation::vertical, 5, 3}, k);
    CHECK(stencil_distance(a_h, b_h) <= 1e-13 * scale);
    CHECK(stencil_distance(a_v, b_v) <= 1e-13 * scale);
    // Each global route only sees the rows of its own centre orientation.
    for (const auto &e : direct.entries) {
      const bool horizontal = e.t < direct.num_types / 2;
      const Complex v = stencil_coefficient(horizontal ? a_h : a_v, e.t, e.s, e.offset);
      CHECK(std::abs(v - e.value) <= 1e-13 * scale);
    }
  }
}

TEST_CASE("k_h(theta) = k_h(pi/2 - theta)") {
  for (const DispersionProblem prob : {DispersionProblem{Method::hdg, 0, 1.0, 2},
                                       DispersionProblem{Method::hdg, 1, Complex(0.0, 0.87), 2},
                                       DispersionProblem{Method::hrt, 1, 0.0, 2}}) {
    const auto thetas = uniform_angles(19);
    const auto r = solve_angles(prob, pi / 4, thetas);
    for (std::size_t i = 0; i < r.size(); ++i)
      CHECK(std::abs(r[i].k_h - r[r.size() - 1 - i].k_h) <= 1e-12);
  }
}

TEST_CASE("purely imaginary tau removes dissipation at small kh") {
  const ErrorMetrics m = error_metrics({Method::hdg, 0, tau_opt, 2}, pi / 64, 37);
  CHECK(m.valid);
  CHECK(m.eps_dissip <= 1e-10);
  CHECK(m.eps_total >= m.eps_disp);
  CHECK(m.eps_total <= m.eps_disp + m.eps_dissip + 1e-15);
}

TEST_CASE("asymptotic coefficients") {
  CHECK(std::abs(asymptotic_coefficient(AsymptoticCase::hdg1d, I, 0.0)) == 0.0);
  CHECK(std::abs(asymptotic_coefficient(AsymptoticCase::hdg2d_p0, tau_opt, pi / 8)) < 1e-16);
  CHECK(asymptotic_coefficient(AsymptoticCase::hrt2d_p0, 0.0, 0.0) == Complex(-1.0 / 24));
  CHECK_THROWS_AS(asymptotic_coefficient(AsymptoticCase::hdg1d, 0.0, 0.0), std::invalid_argument);

  const std::vector<double> khs{0.1, 0.01, 0.001};
  const auto r1 = verify_asymptotics(AsymptoticCase::hdg1d, 1.0, 0.0, khs);
  CHECK(std::abs(r1.coefficient - Complex(0.0, -0.5)) < 1e-15);
  CHECK(r1.improving);
  CHECK(r1.samples.back().deviation <= 0.02);

  // Along theta = 0 the 2D lattice reduces to the 1D one, so both share the
  // same leading coefficient.
  const auto r2 = verify_asymptotics(AsymptoticCase::hdg2d_p0, 1.0, 0.0, khs);
  CHECK(std::abs(r2.coefficient - r1.coefficient) < 1e-15);
  CHECK(r2.samples.back().deviation <= 0.02);
  for (double theta : {pi / 8, pi / 4})
    CHECK(verify_asymptotics(AsymptoticCase::hdg2d_p0, tau_opt, theta, khs).samples.back().deviation <=
          0.02);

  const auto r3 = verify_asymptotics(AsymptoticCase::hrt2d_p0, 0.0, pi / 4, khs);
  CHECK(std::abs(r3.coefficient + 1.0 / 48) < 1e-15);
  CHECK(r3.samples.back().deviation <= 0.02);
  CHECK_THROWS_AS(verify_asymptotics(AsymptoticCase::hdg1d, 1.0, 0.0, {0.1, 0.2, 0.05}),
                  std::invalid_argument);
}

TEST_CASE("p = 1 total error drops by an order of magnitude near tau = 0.87i") {
  const double e1 = total_error(1, pi / 4, 1.0);
  const double e2 = total_error(1, pi / 4, Complex(0.0, 0.87));
  CHECK(e2 <= 0.15 * e1);
}

TEST_CASE("root failures are reported, not thrown, by solve_angles") {
  const CondensedStencil st = extract_stencil({Method::hdg, 0, 1.0, 2}, 0.5);
  CHECK_THROWS_AS(refine_root(st, 0.0, Complex(std::nan(""), 0.0)), RootNotFound);
}

}
