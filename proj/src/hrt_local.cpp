#include "hdglab/hrt_local.hpp"

#include "helmholtz_forms.hpp"

namespace hdglab {

ElementMatrixSet assemble_hrt_local(const HrtLocalConfig &cfg) {
  if (cfg.p < 0 || cfg.p > 1) throw UnsupportedConfiguration("HRT assembly supports p in {0,1}");
  if (!(cfg.h > 0.0)) throw std::invalid_argument("assemble_hrt_local: h must be positive");
  detail::HelmholtzSpaces spaces{
      {ScalarBasis::anisotropic(cfg.p + 1, cfg.p), ScalarBasis::anisotropic(cfg.p, cfg.p + 1)},
      ScalarBasis(ReferenceElement(Shape::square), cfg.p, BasisFamily::Q),
      cfg.p};
  ElementMatrixSet em = detail::assemble_helmholtz_forms(Shape::square, cfg.k, Complex{0.0, 0.0},
                                                         cfg.h, cfg.p, spaces);
  em.p = cfg.p;
  return em;
}

} // namespace hdglab
