#ifndef DIRAC_GROUPOID_SUPPORT_HPP
#define DIRAC_GROUPOID_SUPPORT_HPP

#include "dirac/groupoid.hpp"
#include "test_support.hpp"

namespace dirac::testing {

/// Random valid linear groupoid: pick a unit space and independent
/// complements for ker(s) and ker(t), then take the projections.
inline LinearGroupoid random_groupoid(Gen& gen, std::size_t max_dim = 6) {
  std::size_t n = gen.index(max_dim) + 1;
  std::size_t k = gen.index(n + 1);
  Subspace units = gen.subspace(n, k);
  while (units.dim() != k) units = gen.subspace(n, k);
  Subspace ks = gen.complement(units);
  Subspace kt = gen.complement(units);
  auto proj_onto_units = [&](const Subspace& along) {
    if (k == 0) return Mat(n, n);
    Mat tmat = units.basis().vstack(along.basis());
    Mat coords = tmat.inverse()->transpose().submatrix(0, 0, k, n);
    return units.basis().transpose() * coords;
  };
  return make_groupoid(n, units, proj_onto_units(ks), proj_onto_units(kt));
}

}  // namespace dirac::testing

#endif
