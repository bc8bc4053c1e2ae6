#include "hdglab/global_assembly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hdglab/linalg.hpp"

namespace hdglab {

std::array<EdgeId, 4> element_edges(int i, int j) {
  return {EdgeId{EdgeOrientation::horizontal, i, j}, EdgeId{EdgeOrientation::vertical, i + 1, j},
          EdgeId{EdgeOrientation::horizontal, i, j + 1}, EdgeId{EdgeOrientation::vertical, i, j}};
}

bool UniformMesh2D::is_interior(const EdgeId &e) const {
  if (e.orientation == EdgeOrientation::horizontal)
    return e.i >= 0 && e.i < n && e.j > 0 && e.j < n;
  return e.j >= 0 && e.j < n && e.i > 0 && e.i < n;
}

std::vector<EdgeId> UniformMesh2D::interior_edges() const {
  std::vector<EdgeId> out;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < n; ++i) out.push_back({EdgeOrientation::horizontal, i, j});
  for (int j = 0; j < n; ++j)
    for (int i = 1; i < n; ++i) out.push_back({EdgeOrientation::vertical, i, j});
  return out;
}

CondensedGlobalMatrix scatter_condensed(const UniformMesh2D &mesh, const CMatrix &S, int p) {
  if (mesh.n < 1) throw std::invalid_argument("mesh must have at least one element per side");
  const int per_edge = helmholtz_face_dofs(p);
  if (S.rows() != 4 * per_edge) throw std::invalid_argument("Schur complement size mismatch");

  CondensedGlobalMatrix out;
  out.p = p;
  Eigen::Index next = 0;
  for (const EdgeId &e : mesh.interior_edges())
    for (int a = 0; a < per_edge; ++a) out.dof_index[{e, a}] = next++;
  out.B = CMatrix::Zero(next, next);

  std::vector<Eigen::Index> map(4 * per_edge);
  for (int j = 0; j < mesh.n; ++j)
    for (int i = 0; i < mesh.n; ++i) {
      const auto edges = element_edges(i, j);
      for (int f = 0; f < 4; ++f)
        for (int a = 0; a < per_edge; ++a) {
          auto it = out.dof_index.find({edges[f], a});
          map[f * per_edge + a] = it == out.dof_index.end() ? -1 : it->second;
        }
      for (std::size_t r = 0; r < map.size(); ++r) {
        if (map[r] < 0) continue;
        for (std::size_t c = 0; c < map.size(); ++c)
          if (map[c] >= 0) out.B(map[r], map[c]) += S(r, c);
      }
    }
  return out;
}

CondensedGlobalMatrix assemble_condensed_helmholtz(const UniformMesh2D &mesh, Complex k,
                                                   Complex tau, int p) {
  HelmholtzLocalConfig cfg{k, tau, mesh.h(), p, Shape::square};
  const ElementMatrixSet em = assemble_helmholtz_local(cfg);
  // Every element of the uniform mesh is a translate of the first one.
  const CondensedElement ce = condense(em);
  return scatter_condensed(mesh, ce.S, p);
}

double condition_number(const CMatrix &B) {
  const SingularValueBounds sv = extreme_singular_values(B);
  if (sv.sigma_min < 1e-300) return std::numeric_limits<double>::infinity();
  return sv.sigma_max / sv.sigma_min;
}

namespace {

double inverse_condition(const UniformMesh2D &mesh, Complex tau, int p, double k) {
  try {
    return extreme_singular_values(assemble_condensed_helmholtz(mesh, k, tau, p).B).normalized();
  } catch (const LocalSingularityError &) {
    return 0.0;
  }
}

} // namespace

std::vector<ConditionSample> condition_sweep(const UniformMesh2D &mesh, Complex tau, int p,
                                             double k_start, double k_stop, int count,
                                             unsigned threads) {
  if (count < 2 || !(k_start < k_stop))
    throw std::invalid_argument("condition sweep needs count >= 2 and start < stop");
  std::vector<ConditionSample> out(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const double k = k_start + (k_stop - k_start) * double(i) / double(count - 1);
    const double r = inverse_condition(mesh, tau, p, k);
    out[i] = {k, r > 1e-300 ? 1.0 / r : std::numeric_limits<double>::infinity()};
  });
  return out;
}

ConditionSample refine_condition_peak(const UniformMesh2D &mesh, Complex tau, int p, double lo,
                                      double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = inverse_condition(mesh, tau, p, x1), f2 = inverse_condition(mesh, tau, p, x2);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = inverse_condition(mesh, tau, p, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = inverse_condition(mesh, tau, p, x2);
    }
  }
  const double k = f1 < f2 ? x1 : x2;
  const double r = std::min(f1, f2);
  return {k, r > 1e-300 ? 1.0 / r : std::numeric_limits<double>::infinity()};
}

} // namespace hdglab
