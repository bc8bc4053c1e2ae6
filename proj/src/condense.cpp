#include "hdglab/hdg_local.hpp"
#include "hdglab/linalg.hpp"

namespace hdglab {

CondensedElement condense(const ElementMatrixSet &em) {
  const SingularValueBounds sv = extreme_singular_values(em.A_ii);
  if (sv.sigma_min <= singular_tolerance * sv.sigma_max)
    throw LocalSingularityError(em.k, em.tau, em.h, sv.normalized(),
                                "shape=" + std::string(to_string(em.shape)) +
                                    ", p=" + std::to_string(em.p));
  const Eigen::PartialPivLU<CMatrix> lu(em.A_ii);
  CondensedElement out;
  out.rhs_map = -lu.solve(em.A_it);
  out.S = em.A_tt + em.A_ti * out.rhs_map;
  return out;
}

} // namespace hdglab
