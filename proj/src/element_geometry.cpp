#include "hdglab/element_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hdglab {

namespace {

Point scaled(const Point &p, double h) { return {p[0] * h, p[1] * h, p[2] * h}; }

Point axpy(const Point &o, double s, const Point &a, double t, const Point &b) {
  return {o[0] + s * a[0] + t * b[0], o[1] + s * a[1] + t * b[1], o[2] + s * a[2] + t * b[2]};
}

double norm(const Point &a) { return std::sqrt(dot(a, a)); }

void fill_face_nodes(FaceGeometry &face, double h, const QuadratureRule &rule, int face_dim) {
  double jac = 1.0;
  if (face_dim == 1) jac = norm(face.axis_s);
  if (face_dim == 2) jac = norm(cross(face.axis_s, face.axis_t));
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double s = rule.points[q][0];
    const double t = face_dim == 2 ? rule.points[q][1] : 0.0;
    QuadNode node;
    node.x = axpy(face.origin, s, face.axis_s, t, face.axis_t);
    node.ref = scaled(node.x, 1.0 / h);
    node.face_param = {s, t, 0.0};
    node.weight = rule.weights[q] * jac;
    face.nodes.push_back(node);
  }
}

FaceGeometry tensor_face(const Point &origin, const Point &as, const Point &at, const Point &normal,
                         double h) {
  FaceGeometry f;
  f.origin = scaled(origin, h);
  f.axis_s = scaled(as, h);
  f.axis_t = scaled(at, h);
  f.normal = normal;
  f.tangents = {as, at};
  return f;
}

} // namespace

ElementGeometry make_element_geometry(Shape shape, double h, int p) {
  if (!(h > 0.0)) throw std::invalid_argument("element size h must be positive");
  if (p < 0) throw std::invalid_argument("polynomial order must be >= 0");

  ElementGeometry g{shape, h, {}, {}};
  const ReferenceElement ref(shape);
  const int d = ref.dimension();
  const QuadratureRule line = gauss_legendre(gauss_points_for_order(p));

  QuadratureRule vol;
  switch (shape) {
  case Shape::segment: vol = line; break;
  case Shape::square: vol = tensor_rule(line, 2); break;
  case Shape::cube: vol = tensor_rule(line, 3); break;
  case Shape::tetrahedron: vol = simplex_rule(2 * p + 3); break;
  }
  const double hd = std::pow(h, d);
  for (std::size_t q = 0; q < vol.size(); ++q)
    g.volume_nodes.push_back({scaled(vol.points[q], h), vol.points[q], {}, vol.weights[q] * hd});

  const Point e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, zero{0, 0, 0};
  switch (shape) {
  case Shape::segment: {
    for (int side = 0; side < 2; ++side) {
      FaceGeometry f;
      f.origin = {side * h, 0, 0};
      f.normal = {side == 0 ? -1.0 : 1.0, 0, 0};
      f.nodes.push_back({f.origin, {double(side), 0, 0}, {0, 0, 0}, 1.0});
      g.faces.push_back(f);
    }
    break;
  }
  case Shape::square: {
    g.faces.push_back(tensor_face(zero, e1, zero, {0, -1, 0}, h));
    g.faces.push_back(tensor_face(e1, e2, zero, {1, 0, 0}, h));
    g.faces.push_back(tensor_face(e2, e1, zero, {0, 1, 0}, h));
    g.faces.push_back(tensor_face(zero, e2, zero, {-1, 0, 0}, h));
    for (auto &f : g.faces) fill_face_nodes(f, h, line, 1);
    break;
  }
  case Shape::cube: {
    const QuadratureRule sq = tensor_rule(line, 2);
    g.faces.push_back(tensor_face(zero, e2, e3, {-1, 0, 0}, h));
    g.faces.push_back(tensor_face(e1, e2, e3, {1, 0, 0}, h));
    g.faces.push_back(tensor_face(zero, e1, e3, {0, -1, 0}, h));
    g.faces.push_back(tensor_face(e2, e1, e3, {0, 1, 0}, h));
    g.faces.push_back(tensor_face(zero, e1, e2, {0, 0, -1}, h));
    g.faces.push_back(tensor_face(e3, e1, e2, {0, 0, 1}, h));
    for (auto &f : g.faces) fill_face_nodes(f, h, sq, 2);
    break;
  }
  case Shape::tetrahedron: {
    const QuadratureRule tri = triangle_rule(2 * p + 2);
    g.faces.push_back(tensor_face(zero, e2, e3, {-1, 0, 0}, h));
    g.faces.push_back(tensor_face(zero, e1, e3, {0, -1, 0}, h));
    g.faces.push_back(tensor_face(zero, e1, e2, {0, 0, -1}, h));
    FaceGeometry slanted;
    slanted.origin = scaled(e3, h);
    slanted.axis_s = scaled({1, 0, -1}, h);
    slanted.axis_t = scaled({0, 1, -1}, h);
    const double r3 = 1.0 / std::sqrt(3.0);
    slanted.normal = {r3, r3, r3};
    const double r2 = 1.0 / std::sqrt(2.0), r6 = 1.0 / std::sqrt(6.0);
    slanted.tangents = {Point{r2, -r2, 0}, Point{r6, r6, -2 * r6}};
    g.faces.push_back(slanted);
    for (auto &f : g.faces) {
      f.triangular = true;
      fill_face_nodes(f, h, tri, 2);
    }
    break;
  }
  }
  return g;
}

} // namespace hdglab
