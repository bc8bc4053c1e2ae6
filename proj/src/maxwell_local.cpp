#include <string>

#include "hdglab/element_geometry.hpp"
#include "hdglab/hdg_local.hpp"

namespace hdglab {

namespace {

std::string label(const char *field, int comp, std::size_t j) {
  return std::string(field) + std::to_string(comp + 1) + "[" + std::to_string(j) + "]";
}

} // namespace

ElementMatrixSet assemble_maxwell_local(const MaxwellLocalConfig &cfg) {
  if (!(cfg.h > 0.0)) throw std::invalid_argument("assemble_maxwell_local: h must be positive");
  BasisFamily family;
  switch (cfg.shape) {
  case Shape::cube:
    if (cfg.p < 0 || cfg.p > 1)
      throw UnsupportedConfiguration("Maxwell HDG assembly on cubes supports p in {0,1}");
    family = BasisFamily::Q;
    break;
  case Shape::tetrahedron:
    if (cfg.p < 0 || cfg.p > 2)
      throw UnsupportedConfiguration("Maxwell HDG assembly on tetrahedra supports p in {0,1,2}");
    family = BasisFamily::P;
    break;
  default:
    throw UnsupportedConfiguration("Maxwell HDG assembly supports cubes and tetrahedra only");
  }

  const ScalarBasis basis(ReferenceElement(cfg.shape), cfg.p, family);
  const ScalarBasis face_basis(ReferenceElement(Shape::square), cfg.p, family);
  const ElementGeometry geo = make_element_geometry(cfg.shape, cfg.h, cfg.p);

  const Eigen::Index nb = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index nfb = static_cast<Eigen::Index>(face_basis.size());
  const Eigen::Index ne = 3 * nb; // E block; H block follows
  const Eigen::Index ni = 2 * ne;
  const Eigen::Index nf = static_cast<Eigen::Index>(geo.faces.size());
  const Eigen::Index nt = nf * 2 * nfb;

  ElementMatrixSet em;
  for (const char *field : {"E", "H"})
    for (int c = 0; c < 3; ++c)
      for (Eigen::Index j = 0; j < nb; ++j) em.interior_dof_labels.push_back(label(field, c, j));
  for (Eigen::Index f = 0; f < nf; ++f)
    for (int a = 0; a < 2; ++a)
      for (Eigen::Index m = 0; m < nfb; ++m)
        em.trace_dof_labels.push_back("face" + std::to_string(f) + ".t" + std::to_string(a + 1) +
                                      "[" + std::to_string(m) + "]");

  em.A_ii = CMatrix::Zero(ni, ni);
  em.A_it = CMatrix::Zero(ni, nt);
  em.A_tt = CMatrix::Zero(nt, nt);

  const Complex ik = I * cfg.k;
  const Complex tau = cfg.tau;
  const double h = cfg.h;
  std::vector<double> val;
  std::vector<std::array<double, 3>> grad;

  const Point axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const QuadNode &q : geo.volume_nodes) {
    basis.eval_unchecked(q.ref, val, &grad);
    for (Eigen::Index a = 0; a < nb; ++a) {
      const Point ga{grad[a][0] / h, grad[a][1] / h, grad[a][2] / h};
      for (int c = 0; c < 3; ++c) {
        // curl(phi_a e_c) = grad(phi_a) x e_c
        const Point curl_a = cross(ga, axes[c]);
        for (Eigen::Index b = 0; b < nb; ++b) {
          const double wab = q.weight * val[a] * val[b];
          em.A_ii(c * nb + b, c * nb + a) += ik * wab;
          em.A_ii(ne + c * nb + b, ne + c * nb + a) -= ik * wab;
          for (int d = 0; d < 3; ++d) {
            // -(curl H, v): row v = phi_b e_d, column H = phi_a e_c
            em.A_ii(d * nb + b, ne + c * nb + a) -= q.weight * curl_a[d] * val[b];
            // -(E, curl w): row w = phi_a e_c, column E = phi_b e_d
            em.A_ii(ne + c * nb + a, d * nb + b) -= q.weight * val[b] * curl_a[d];
          }
        }
      }
    }
  }

  std::vector<double> fval;
  for (Eigen::Index f = 0; f < nf; ++f) {
    const FaceGeometry &face = geo.faces[f];
    const Point &n = face.normal;
    const Eigen::Index t0 = f * 2 * nfb;
    for (const QuadNode &q : face.nodes) {
      basis.eval_unchecked(q.ref, val);
      face_basis.eval_unchecked(q.face_param, fval);
      for (Eigen::Index a = 0; a < nb; ++a)
        for (Eigen::Index b = 0; b < nb; ++b)
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d) {
              // tau <E x n, v x n> = tau (e_c . e_d - n_c n_d)
              const double tang = (c == d ? 1.0 : 0.0) - n[c] * n[d];
              if (tang != 0.0)
                em.A_ii(d * nb + b, c * nb + a) += tau * q.weight * val[a] * val[b] * tang;
            }
      for (int alpha = 0; alpha < 2; ++alpha) {
        const Point &t = face.tangents[alpha];
        for (Eigen::Index m = 0; m < nfb; ++m) {
          const Eigen::Index col = t0 + alpha * nfb + m;
          const double wm = q.weight * fval[m];
          for (Eigen::Index b = 0; b < nb; ++b)
            for (int d = 0; d < 3; ++d) {
              // -tau <eta x n, v x n>
              em.A_it(d * nb + b, col) -= tau * wm * val[b] * t[d];
              // <eta, n x w>
              const Point nxw = cross(n, axes[d]);
              em.A_it(ne + d * nb + b, col) += wm * val[b] * dot(t, nxw);
            }
          for (int beta = 0; beta < 2; ++beta) {
            const double tt = dot(t, face.tangents[beta]);
            if (tt == 0.0) continue;
            for (Eigen::Index l = 0; l < nfb; ++l)
              em.A_tt(col, t0 + beta * nfb + l) += tau * wm * fval[l] * tt;
          }
        }
      }
    }
  }
  em.A_ti = em.A_it.transpose();
  em.k = cfg.k;
  em.tau = cfg.tau;
  em.h = cfg.h;
  em.p = cfg.p;
  em.shape = cfg.shape;
  return em;
}

} // namespace hdglab
