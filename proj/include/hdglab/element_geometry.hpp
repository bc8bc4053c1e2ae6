#pragma once

#include <vector>

#include "hdglab/basis_quadrature.hpp"

namespace hdglab {

/// One quadrature node, in physical coordinates, in reference-cell
/// coordinates, and (for face nodes) in the face's intrinsic parameters.
struct QuadNode {
  Point x;
  Point ref;
  Point face_param;
  double weight;
};

/// A face (edge in 2D, endpoint in 1D) of an axis-aligned element of size h,
/// parametrized as origin + s * axis_s + t * axis_t with (s,t) running over
/// the unit square (tensor cells) or the unit triangle (tetrahedron). The
/// axes follow global coordinate directions so neighbouring elements see the
/// same face parametrization.
struct FaceGeometry {
  Point origin{};
  Point axis_s{};
  Point axis_t{};
  Point normal{};
  /// Orthonormal tangents; 2D edges use tangents[0] only.
  std::array<Point, 2> tangents{};
  bool triangular = false;
  std::vector<QuadNode> nodes;
};

struct ElementGeometry {
  Shape shape;
  double h;
  std::vector<QuadNode> volume_nodes;
  std::vector<FaceGeometry> faces;
};

/// Geometry and exact quadrature for polynomial order p. Face order:
///   segment: x=0, x=h
///   square:  bottom, right, top, left
///   cube:    x=0, x=h, y=0, y=h, z=0, z=h
///   tet:     x1=0, x2=0, x3=0, slanted
ElementGeometry make_element_geometry(Shape shape, double h, int p);

inline double dot(const Point &a, const Point &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Point cross(const Point &a, const Point &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace hdglab
