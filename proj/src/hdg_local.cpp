#include "hdglab/hdg_local.hpp"

#include <string>

#include "hdglab/element_geometry.hpp"
#include "helmholtz_forms.hpp"

namespace hdglab {

CMatrix ElementMatrixSet::full() const {
  const Eigen::Index ni = interior_size(), nt = trace_size();
  CMatrix m(ni + nt, ni + nt);
  m.topLeftCorner(ni, ni) = A_ii;
  m.topRightCorner(ni, nt) = A_it;
  m.bottomLeftCorner(nt, ni) = A_ti;
  m.bottomRightCorner(nt, nt) = A_tt;
  return m;
}

int helmholtz_face_dofs(int p) { return p + 1; }

namespace detail {

namespace {

std::string label(const char *name, std::size_t i) { return std::string(name) + "[" + std::to_string(i) + "]"; }

} // namespace

ElementMatrixSet assemble_helmholtz_forms(Shape shape, Complex k, Complex tau, double h,
                                          int quadrature_order, const HelmholtzSpaces &spaces) {
  const ElementGeometry geo = make_element_geometry(shape, h, quadrature_order);
  const int dim = ReferenceElement(shape).dimension();

  // Interior layout: flux components back to back, then the potential.
  std::vector<int> comp_of;
  std::vector<std::size_t> local_of;
  ElementMatrixSet em;
  for (std::size_t c = 0; c < spaces.flux.size(); ++c)
    for (std::size_t j = 0; j < spaces.flux[c].size(); ++j) {
      comp_of.push_back(static_cast<int>(c));
      local_of.push_back(j);
      em.interior_dof_labels.push_back(label(c == 0 ? "u1" : "u2", j));
    }
  const Eigen::Index nu = static_cast<Eigen::Index>(comp_of.size());
  const Eigen::Index nw = static_cast<Eigen::Index>(spaces.potential.size());
  for (Eigen::Index j = 0; j < nw; ++j) em.interior_dof_labels.push_back(label("phi", j));

  const int per_face = dim == 1 ? 1 : spaces.trace_order + 1;
  const Eigen::Index nf = static_cast<Eigen::Index>(geo.faces.size());
  for (Eigen::Index f = 0; f < nf; ++f)
    for (int a = 0; a < per_face; ++a)
      em.trace_dof_labels.push_back("face" + std::to_string(f) + "[" + std::to_string(a) + "]");

  const Eigen::Index ni = nu + nw, nt = nf * per_face;
  em.A_ii = CMatrix::Zero(ni, ni);
  em.A_it = CMatrix::Zero(ni, nt);
  em.A_tt = CMatrix::Zero(nt, nt);

  std::vector<std::vector<double>> fv(spaces.flux.size());
  std::vector<std::vector<std::array<double, 3>>> fg(spaces.flux.size());
  std::vector<double> wv;
  Eigen::VectorXd uval(nu), udiv(nu), pval(nw);

  auto eval_interior = [&](const Point &ref, bool with_div) {
    for (std::size_t c = 0; c < spaces.flux.size(); ++c)
      spaces.flux[c].eval_unchecked(ref, fv[c], with_div ? &fg[c] : nullptr);
    spaces.potential.eval_unchecked(ref, wv);
    for (Eigen::Index j = 0; j < nu; ++j) {
      const int c = comp_of[j];
      uval(j) = fv[c][local_of[j]];
      udiv(j) = with_div ? fg[c][local_of[j]][c] / h : 0.0;
    }
    for (Eigen::Index j = 0; j < nw; ++j) pval(j) = wv[j];
  };

  const Complex ik = I * k;
  for (const QuadNode &q : geo.volume_nodes) {
    eval_interior(q.ref, true);
    for (Eigen::Index i = 0; i < nu; ++i) {
      for (Eigen::Index j = 0; j < nu; ++j)
        if (comp_of[i] == comp_of[j]) em.A_ii(i, j) += ik * q.weight * uval(i) * uval(j);
      for (Eigen::Index m = 0; m < nw; ++m) {
        const double c = -q.weight * pval(m) * udiv(i);
        em.A_ii(i, nu + m) += c;
        em.A_ii(nu + m, i) += c;
      }
    }
    for (Eigen::Index m = 0; m < nw; ++m)
      for (Eigen::Index n = 0; n < nw; ++n)
        em.A_ii(nu + m, nu + n) -= ik * q.weight * pval(m) * pval(n);
  }

  std::vector<double> trace_vals(per_face);
  for (Eigen::Index f = 0; f < nf; ++f) {
    const FaceGeometry &face = geo.faces[f];
    const Eigen::Index t0 = f * per_face;
    for (const QuadNode &q : face.nodes) {
      eval_interior(q.ref, false);
      for (int a = 0; a < per_face; ++a) {
        double v = 1.0;
        for (int e = 0; e < a; ++e) v *= q.face_param[0];
        trace_vals[a] = v;
      }
      for (Eigen::Index m = 0; m < nw; ++m)
        for (Eigen::Index n = 0; n < nw; ++n)
          em.A_ii(nu + m, nu + n) -= tau * q.weight * pval(m) * pval(n);
      for (int a = 0; a < per_face; ++a) {
        const double eta = trace_vals[a];
        for (Eigen::Index i = 0; i < nu; ++i)
          em.A_it(i, t0 + a) += q.weight * eta * uval(i) * face.normal[comp_of[i]];
        for (Eigen::Index m = 0; m < nw; ++m)
          em.A_it(nu + m, t0 + a) += tau * q.weight * eta * pval(m);
        for (int b = 0; b < per_face; ++b)
          em.A_tt(t0 + a, t0 + b) -= tau * q.weight * eta * trace_vals[b];
      }
    }
  }
  em.A_ti = em.A_it.transpose();
  em.k = k;
  em.tau = tau;
  em.h = h;
  em.shape = shape;
  return em;
}

} // namespace detail

ElementMatrixSet assemble_helmholtz_local(const HelmholtzLocalConfig &cfg) {
  if (!(cfg.h > 0.0)) throw std::invalid_argument("assemble_helmholtz_local: h must be positive");
  if (cfg.p < 0 || cfg.p > 1)
    throw UnsupportedConfiguration("Helmholtz HDG assembly supports p in {0,1}");
  detail::HelmholtzSpaces spaces{{}, ScalarBasis(ReferenceElement(Shape::segment), 0, BasisFamily::P), cfg.p};
  switch (cfg.shape) {
  case Shape::segment: {
    const ScalarBasis b(ReferenceElement(Shape::segment), cfg.p, BasisFamily::P);
    spaces.flux = {b};
    spaces.potential = b;
    break;
  }
  case Shape::square: {
    const ScalarBasis b(ReferenceElement(Shape::square), cfg.p, BasisFamily::Q);
    spaces.flux = {b, b};
    spaces.potential = b;
    break;
  }
  default:
    throw UnsupportedConfiguration("Helmholtz HDG assembly supports segments and squares only");
  }
  ElementMatrixSet em =
      detail::assemble_helmholtz_forms(cfg.shape, cfg.k, cfg.tau, cfg.h, cfg.p, spaces);
  em.p = cfg.p;
  return em;
}

} // namespace hdglab
