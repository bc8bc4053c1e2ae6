#pragma once

#include <array>
#include <string_view>
#include <vector>

namespace hdglab {

enum class Shape { segment, square, cube, tetrahedron };

std::string_view to_string(Shape shape);
/// Accepts "segment", "square", "cube", "tet"/"tetrahedron".
Shape parse_shape(std::string_view name);

/// Unit reference cells: [0,1], [0,1]^2, [0,1]^3 and the right tetrahedron
/// {x_j >= 0, x_1 + x_2 + x_3 <= 1}.
class ReferenceElement {
public:
  constexpr explicit ReferenceElement(Shape shape) : shape_(shape) {}

  constexpr Shape shape() const { return shape_; }
  constexpr int dimension() const {
    switch (shape_) {
    case Shape::segment: return 1;
    case Shape::square: return 2;
    case Shape::cube:
    case Shape::tetrahedron: return 3;
    }
    return 0;
  }
  /// Lebesgue measure of the reference cell.
  double measure() const;
  bool contains(const std::array<double, 3> &x, double tol = 1e-12) const;

  friend constexpr bool operator==(ReferenceElement, ReferenceElement) = default;

private:
  Shape shape_;
};

using Point = std::array<double, 3>;

struct QuadratureRule {
  int dimension = 1;
  /// Total polynomial degree integrated exactly.
  int exactness = 0;
  std::vector<Point> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// n-point Gauss-Legendre rule on [0,1]; exact up to degree 2n-1.
QuadratureRule gauss_legendre(int n);

/// Tensor product of a [0,1] rule with itself, d in {2,3}.
QuadratureRule tensor_rule(const QuadratureRule &base, int d);

/// Rule on the reference tetrahedron exact for total degree <= degree, built
/// from Gauss rules on collapsed coordinates.
QuadratureRule simplex_rule(int degree);

/// Rule on the reference triangle {s,t >= 0, s + t <= 1}; points carry (s,t,0).
QuadratureRule triangle_rule(int degree);

enum class BasisFamily { P, Q };

/// Monomial basis in reference coordinates. Q-type spaces are ordered
/// lexicographically with x fastest ({1, x, y, xy} for Q_1 on the square);
/// P-type spaces are graded, then lexicographic within a degree
/// ({1, x, y, z, x^2, xy, xz, y^2, yz, z^2} for P_2 on the tetrahedron).
class ScalarBasis {
public:
  using Exponent = std::array<int, 3>;

  ScalarBasis(ReferenceElement element, int order, BasisFamily family);

  /// Anisotropic tensor space Q_{deg_x, deg_y} on the square.
  static ScalarBasis anisotropic(int deg_x, int deg_y);

  ReferenceElement element() const { return element_; }
  int order() const { return order_; }
  BasisFamily family() const { return family_; }
  std::size_t size() const { return exponents_.size(); }
  const std::vector<Exponent> &exponents() const { return exponents_; }

  /// Values at a reference point; throws std::domain_error outside the cell.
  std::vector<double> eval(const Point &x) const;
  /// Values and reference gradients without a domain check.
  void eval_unchecked(const Point &x, std::vector<double> &values,
                      std::vector<std::array<double, 3>> *gradients = nullptr) const;

private:
  ScalarBasis(ReferenceElement element, int order, BasisFamily family,
              std::vector<Exponent> exponents);

  ReferenceElement element_;
  int order_;
  BasisFamily family_;
  std::vector<Exponent> exponents_;
};

/// Free-function form of ScalarBasis::eval.
std::vector<double> eval_basis(const ScalarBasis &basis, const Point &point);

/// Per-axis Gauss points used for a polynomial order p on tensor cells.
constexpr int gauss_points_for_order(int p) { return p + 2; }

} // namespace hdglab
