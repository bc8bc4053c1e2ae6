#include "hdglab/basis_quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hdglab {

std::string_view to_string(Shape shape) {
  switch (shape) {
  case Shape::segment: return "segment";
  case Shape::square: return "square";
  case Shape::cube: return "cube";
  case Shape::tetrahedron: return "tet";
  }
  return "?";
}

Shape parse_shape(std::string_view name) {
  if (name == "segment") return Shape::segment;
  if (name == "square") return Shape::square;
  if (name == "cube") return Shape::cube;
  if (name == "tet" || name == "tetrahedron") return Shape::tetrahedron;
  throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

double ReferenceElement::measure() const {
  return shape_ == Shape::tetrahedron ? 1.0 / 6.0 : 1.0;
}

bool ReferenceElement::contains(const Point &x, double tol) const {
  const int d = dimension();
  for (int i = 0; i < 3; ++i) {
    if (i >= d) {
      if (std::abs(x[i]) > tol) return false;
      continue;
    }
    if (x[i] < -tol) return false;
    if (shape_ != Shape::tetrahedron && x[i] > 1.0 + tol) return false;
  }
  if (shape_ == Shape::tetrahedron && x[0] + x[1] + x[2] > 1.0 + tol) return false;
  return true;
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");

  QuadratureRule rule;
  rule.dimension = 1;
  rule.exactness = 2 * n - 1;
  rule.points.resize(n);
  rule.weights.resize(n);

  // Newton iteration on P_n over [-1,1], mapped to [0,1] afterwards.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x is the i-th largest root; store ascending on [0,1].
    rule.points[n - 1 - i] = {0.5 * (1.0 + x), 0.0, 0.0};
    rule.points[i] = {0.5 * (1.0 - x), 0.0, 0.0};
    rule.weights[n - 1 - i] = 0.5 * w;
    rule.weights[i] = 0.5 * w;
  }
  if (n % 2 == 1) rule.points[n / 2][0] = 0.5;
  return rule;
}

QuadratureRule tensor_rule(const QuadratureRule &base, int d) {
  if (d != 2 && d != 3) throw std::invalid_argument("tensor_rule: d must be 2 or 3");
  if (base.dimension != 1) throw std::invalid_argument("tensor_rule: base rule must be 1D");

  const std::size_t n = base.size();
  QuadratureRule rule;
  rule.dimension = d;
  rule.exactness = base.exactness;
  const std::size_t nz = d == 3 ? n : 1;
  for (std::size_t k = 0; k < nz; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        Point p{base.points[i][0], base.points[j][0], d == 3 ? base.points[k][0] : 0.0};
        double w = base.weights[i] * base.weights[j] * (d == 3 ? base.weights[k] : 1.0);
        rule.points.push_back(p);
        rule.weights.push_back(w);
      }
  return rule;
}

QuadratureRule simplex_rule(int degree) {
  if (degree < 0) throw std::invalid_argument("simplex_rule: degree must be >= 0");
  QuadratureRule rule;
  rule.dimension = 3;
  rule.exactness = degree;
  if (degree <= 1) {
    rule.points.push_back({0.25, 0.25, 0.25});
    rule.weights.push_back(1.0 / 6.0);
    return rule;
  }
  // x = u, y = v(1-u), z = w(1-u)(1-v), Jacobian (1-u)^2 (1-v).
  const int n = (degree + 3 + 1) / 2;
  const QuadratureRule g = gauss_legendre(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const double u = g.points[a][0], v = g.points[b][0], w = g.points[c][0];
        rule.points.push_back({u, v * (1.0 - u), w * (1.0 - u) * (1.0 - v)});
        rule.weights.push_back(g.weights[a] * g.weights[b] * g.weights[c] *
                               (1.0 - u) * (1.0 - u) * (1.0 - v));
      }
  return rule;
}

QuadratureRule triangle_rule(int degree) {
  if (degree < 0) throw std::invalid_argument("triangle_rule: degree must be >= 0");
  QuadratureRule rule;
  rule.dimension = 2;
  rule.exactness = degree;
  if (degree <= 1) {
    rule.points.push_back({1.0 / 3.0, 1.0 / 3.0, 0.0});
    rule.weights.push_back(0.5);
    return rule;
  }
  // s = u, t = v(1-u), Jacobian (1-u).
  const int n = (degree + 2 + 1) / 2;
  const QuadratureRule g = gauss_legendre(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double u = g.points[a][0], v = g.points[b][0];
      rule.points.push_back({u, v * (1.0 - u), 0.0});
      rule.weights.push_back(g.weights[a] * g.weights[b] * (1.0 - u));
    }
  return rule;
}

namespace {

std::vector<ScalarBasis::Exponent> tensor_exponents(int dim, std::array<int, 3> deg) {
  std::vector<ScalarBasis::Exponent> out;
  const int nz = dim >= 3 ? deg[2] : 0;
  const int ny = dim >= 2 ? deg[1] : 0;
  for (int c = 0; c <= nz; ++c)
    for (int b = 0; b <= ny; ++b)
      for (int a = 0; a <= deg[0]; ++a) out.push_back({a, b, c});
  return out;
}

std::vector<ScalarBasis::Exponent> graded_exponents(int dim, int p) {
  std::vector<ScalarBasis::Exponent> out;
  for (int total = 0; total <= p; ++total) {
    // Lexicographic descending in x, then y, within a fixed total degree.
    for (int a = total; a >= 0; --a) {
      if (dim == 1) {
        if (a == total) out.push_back({a, 0, 0});
        continue;
      }
      for (int b = total - a; b >= 0; --b) {
        const int c = total - a - b;
        if (dim == 2 && c != 0) continue;
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

} // namespace

ScalarBasis::ScalarBasis(ReferenceElement element, int order, BasisFamily family)
    : element_(element), order_(order), family_(family) {
  if (order < 0) throw std::invalid_argument("ScalarBasis: order must be >= 0");
  const int d = element.dimension();
  if (family == BasisFamily::Q) {
    if (element.shape() == Shape::tetrahedron)
      throw std::invalid_argument("ScalarBasis: Q family is not defined on the tetrahedron");
    exponents_ = tensor_exponents(d, {order, order, order});
  } else {
    exponents_ = graded_exponents(d, order);
  }
}

ScalarBasis::ScalarBasis(ReferenceElement element, int order, BasisFamily family,
                         std::vector<Exponent> exponents)
    : element_(element), order_(order), family_(family), exponents_(std::move(exponents)) {}

ScalarBasis ScalarBasis::anisotropic(int deg_x, int deg_y) {
  if (deg_x < 0 || deg_y < 0)
    throw std::invalid_argument("ScalarBasis::anisotropic: negative degree");
  return ScalarBasis(ReferenceElement(Shape::square), std::max(deg_x, deg_y), BasisFamily::Q,
                     tensor_exponents(2, {deg_x, deg_y, 0}));
}

std::vector<double> ScalarBasis::eval(const Point &x) const {
  if (!element_.contains(x))
    throw std::domain_error("eval_basis: point outside the reference " +
                            std::string(to_string(element_.shape())));
  std::vector<double> values;
  eval_unchecked(x, values);
  return values;
}

void ScalarBasis::eval_unchecked(const Point &x, std::vector<double> &values,
                                 std::vector<std::array<double, 3>> *gradients) const {
  values.resize(exponents_.size());
  if (gradients) gradients->resize(exponents_.size());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const auto &e = exponents_[i];
    const double px = ipow(x[0], e[0]), py = ipow(x[1], e[1]), pz = ipow(x[2], e[2]);
    values[i] = px * py * pz;
    if (gradients) {
      const double dx = e[0] > 0 ? e[0] * ipow(x[0], e[0] - 1) : 0.0;
      const double dy = e[1] > 0 ? e[1] * ipow(x[1], e[1] - 1) : 0.0;
      const double dz = e[2] > 0 ? e[2] * ipow(x[2], e[2] - 1) : 0.0;
      (*gradients)[i] = {dx * py * pz, px * dy * pz, px * py * dz};
    }
  }
}

std::vector<double> eval_basis(const ScalarBasis &basis, const Point &point) {
  return basis.eval(point);
}

} // namespace hdglab
