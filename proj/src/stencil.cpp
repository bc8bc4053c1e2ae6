#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "hdglab/dispersion.hpp"
#include "hdglab/hrt_local.hpp"
#include "hdglab/linalg.hpp"

namespace hdglab {

namespace {

using Key = std::tuple<int, int, int, int>;

CondensedStencil from_map(const std::map<Key, ComplexLD> &coeffs, int dimension, int num_types) {
  CondensedStencil st;
  st.dimension = dimension;
  st.num_types = num_types;
  const int per_type = dimension == 1 ? num_types : num_types / 2;
  for (int t = 0; t < num_types; ++t) {
    if (dimension == 1)
      st.type_labels.push_back("node[" + std::to_string(t) + "]");
    else
      st.type_labels.push_back((t < per_type ? "h[" : "v[") + std::to_string(t % per_type) + "]");
  }
  for (const auto &[key, value] : coeffs) {
    const auto [t, s, ox, oy] = key;
    st.entries.push_back({t, s, {ox, oy}, Complex(static_cast<double>(value.real()),
                                                  static_cast<double>(value.imag())),
                          value});
  }
  return st;
}

int orientation_index(const EdgeId &e) { return e.orientation == EdgeOrientation::horizontal ? 0 : 1; }

} // namespace

const char *to_string(Method m) { return m == Method::hdg ? "hdg" : "hrt"; }

Method parse_method(const std::string &name) {
  if (name == "hdg") return Method::hdg;
  if (name == "hrt") return Method::hrt;
  throw std::invalid_argument("unknown method '" + name + "' (expected hdg or hrt)");
}

double CondensedStencil::row_magnitude(int t) const {
  double sum = 0.0;
  for (const auto &e : entries)
    if (e.t == t) sum += std::abs(e.value);
  return sum;
}

Complex stencil_coefficient(const CondensedStencil &stencil, int t, int s, std::array<int, 2> offset) {
  for (const auto &e : stencil.entries)
    if (e.t == t && e.s == s && e.offset == offset) return e.value;
  return 0.0;
}

CondensedStencil stencil_from_element(const CMatrix &S, int dimension) {
  return stencil_from_element(CMatrixLD(S.cast<ComplexLD>()), dimension);
}

CondensedStencil stencil_from_element(const CMatrixLD &S, int dimension) {
  std::map<Key, ComplexLD> coeffs;
  if (dimension == 1) {
    if (S.rows() != 2) throw std::invalid_argument("segment Schur complement must be 2x2");
    // Element c spans nodes c (face 0) and c + 1 (face 1); the centre node is
    // face 1 of element -1 and face 0 of element 0.
    for (const auto &[cell, face] : {std::pair{-1, 1}, std::pair{0, 0}})
      for (int c = 0; c < 2; ++c) coeffs[{0, 0, cell + c, 0}] += S(face, c);
    return from_map(coeffs, 1, 1);
  }
  if (dimension != 2 || S.rows() % 4 != 0)
    throw std::invalid_argument("square Schur complement must have 4 equal face blocks");
  const int pe = static_cast<int>(S.rows() / 4);
  struct Incidence {
    int ci, cj, face;
  };
  // Elements touching the centre edge and the local face it occupies there.
  const Incidence horizontal[2] = {{0, -1, 2}, {0, 0, 0}};
  const Incidence vertical[2] = {{-1, 0, 1}, {0, 0, 3}};
  for (int o = 0; o < 2; ++o)
    for (const auto &inc : o == 0 ? horizontal : vertical) {
      const auto edges = element_edges(inc.ci, inc.cj);
      for (int at = 0; at < pe; ++at) {
        const int row = inc.face * pe + at;
        for (int col = 0; col < 4 * pe; ++col) {
          const EdgeId &e = edges[col / pe];
          const int s = orientation_index(e) * pe + col % pe;
          coeffs[{o * pe + at, s, e.i, e.j}] += S(row, col);
        }
      }
    }
  return from_map(coeffs, 2, 2 * pe);
}

CondensedStencil extract_stencil(const DispersionProblem &problem, Complex kh) {
  ElementMatrixSet em;
  if (problem.method == Method::hrt) {
    if (problem.dimension != 2) throw UnsupportedConfiguration("HRT lattice is two-dimensional");
    em = assemble_hrt_local({kh, 1.0, problem.p});
  } else {
    const Shape shape = problem.dimension == 1 ? Shape::segment : Shape::square;
    em = assemble_helmholtz_local({kh, problem.tau, 1.0, problem.p, shape});
  }
  // Same checks as condense(), but the Schur complement is formed in
  // extended precision.
  const SingularValueBounds sv = extreme_singular_values(em.A_ii);
  if (sv.sigma_min <= singular_tolerance * sv.sigma_max)
    throw LocalSingularityError(em.k, em.tau, em.h, sv.normalized(), "dispersion stencil");
  const CMatrixLD A_ii = em.A_ii.cast<ComplexLD>();
  const CMatrixLD A_it = em.A_it.cast<ComplexLD>();
  const CMatrixLD S = em.A_tt.cast<ComplexLD>() - em.A_ti.cast<ComplexLD>() * A_ii.partialPivLu().solve(A_it);
  CondensedStencil st = stencil_from_element(S, problem.dimension);
  st.kh = kh;
  return st;
}

CondensedStencil stencil_from_global(const CondensedGlobalMatrix &global, const UniformMesh2D &mesh,
                                     const EdgeId &centre, Complex k) {
  const int pe = helmholtz_face_dofs(global.p);
  const double h = mesh.h();
  std::map<Key, ComplexLD> coeffs;
  for (int at = 0; at < pe; ++at) {
    const auto row_it = global.dof_index.find({centre, at});
    if (row_it == global.dof_index.end()) throw std::invalid_argument("centre edge is not interior");
    const int t = orientation_index(centre) * pe + at;
    for (const auto &[key, col] : global.dof_index) {
      const Complex v = global.B(row_it->second, col);
      if (v == Complex(0.0)) continue;
      const auto &[e, a] = key;
      coeffs[{t, orientation_index(e) * pe + a, e.i - centre.i, e.j - centre.j}] += ComplexLD(v / h);
    }
  }
  CondensedStencil st = from_map(coeffs, 2, 2 * pe);
  st.kh = k * h;
  return st;
}

CMatrix symbol_at(const CondensedStencil &stencil, Complex kx, Complex ky) {
  CMatrix F = CMatrix::Zero(stencil.num_types, stencil.num_types);
  for (const auto &e : stencil.entries)
    F(e.t, e.s) += e.value * std::exp(I * (kx * static_cast<double>(e.offset[0]) +
                                           ky * static_cast<double>(e.offset[1])));
  return F;
}

CMatrix symbol(const CondensedStencil &stencil, Complex k_h, double theta) {
  if (stencil.dimension == 1) return symbol_at(stencil, k_h, 0.0);
  return symbol_at(stencil, k_h * std::cos(theta), k_h * std::sin(theta));
}

ComplexLD normalized_determinant(const CondensedStencil &stencil, ComplexLD kx, ComplexLD ky) {
  const ComplexLD i(0.0L, 1.0L);
  CMatrixLD F = CMatrixLD::Zero(stencil.num_types, stencil.num_types);
  for (const auto &e : stencil.entries)
    F(e.t, e.s) += e.precise * std::exp(i * (kx * static_cast<long double>(e.offset[0]) +
                                             ky * static_cast<long double>(e.offset[1])));
  ComplexLD det = F.rows() == 1 ? F(0, 0) : F.partialPivLu().determinant();
  for (int t = 0; t < stencil.num_types; ++t) det /= stencil.row_magnitude(t);
  return det;
}

} // namespace hdglab
