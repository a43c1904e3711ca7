#ifndef DIRAC_CATALOG_HPP
#define DIRAC_CATALOG_HPP

#include "dirac/manin.hpp"

namespace dirac {

/// Which factor of d = h (+) h-bar carries the group action (and hence is
/// the h-subalgebra of the triple). The dressing formula is normative; the
/// two conventions are exchanged by the factor swap.
enum class SlotConvention { first, second };

/// (h (+) h-bar, diagonal, h (+) 0)_beta for a metrized h; beta is the
/// bivector dual to the block metric diag(B, -B).
DiracManinTriple build_cartan_dirac(const MetrizedLieAlgebra& h_alg,
                                    SlotConvention slot = SlotConvention::first);

/// Abelian d = Q^n with the given beta; g and h are spans of the named
/// coordinate indices. Errors if g fails coisotropy or the split is not
/// direct.
DiracManinTriple build_abelian_double(std::size_t n, const SymBivector& beta,
                                      const std::vector<std::size_t>& g_coords,
                                      const std::vector<std::size_t>& h_coords);

/// Severa-Valach quadruple (d, h, g, h')_metric to the Dirac-Manin triple
/// (d, g + h', h) with beta dual to the metric. validate_triple must pass.
DiracManinTriple build_quasi_poisson(const LieAlgebra& d, const Subspace& h, const Subspace& g,
                                     const Subspace& hprime, const SymBilinearForm& metric);

/// Shared test fixtures.
MatrixRep sl2_defining_rep();
DiracManinTriple fixture_E1();            // abelian Q^2, hyperbolic beta
DiracManinTriple fixture_E2();            // Cartan-Dirac on a metrized line
DiracManinTriple fixture_E4();            // invalid: g fails coisotropy
DiracManinTriple fixture_E3_nonexact();   // abelian Q^3, beta with 1-dim kernel
DiracManinTriple fixture_sl2_cartan_dirac();
DiracManinTriple fixture_sl2_quasi_poisson();
/// Block-diagonal faithful rep of h (+) h-bar from a faithful rep of h.
MatrixRep doubled_rep(const MatrixRep& rep);

}  // namespace dirac

#endif
